"""Polynomial cubature rules on the deltoid-bounded domain.

All four rules are images of the equal-weight lattice cubature on the
fundamental triangle, with nodes xy(j/m) and weights proportional to the
lattice weight times the squared trigonometric factor that cancels the
denominator of the corresponding weight function:

    gauss    factor ss(1/m j)^2   lattice m = n+5, interior nodes only
    lobatto  factor 1             lattice m = n,   all nodes
    radau1   factor sc(1/m j)^2   lattice m = n+2, nodes off the t1=t2 edge
    radau2   factor cs(1/m j)^2   lattice m = n+3, nodes off t2=0 and t3=-1

Each rule integrates its weight exactly on polynomials of weighted
degree up to 2n-1 and is normalized so the weights sum to one.  Nodes
whose factor vanishes identically are dropped by integer predicates on
the generating lattice triple, so node counts are deterministic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import (
    MIndex,
    WeightParams,
    cheb_poly,
    continuous_inner,
    star_class,
    xy_map,
)
from .coords import make_index, point_from_index
from .gentrig import TrigFamily, eval as trig_eval
from .jsonio import dumps as json_dumps
from .lattice import enum_upsilon
from .poly import BivarPoly

HALF = Fraction(1, 2)

RULE_KINDS = ("gauss", "lobatto", "radau1", "radau2")


@dataclass(frozen=True)
class CubatureRule:
    kind: str
    n: int
    nodes: tuple            # ((x, y), ...) in lexicographic lattice order
    weights: tuple
    exact_mdegree: int
    weight_params: WeightParams
    indices: tuple          # generating lattice triples, same order


def _lattice_rule(kind, n, m, params, factor_family, factor_index, scale, keep):
    nodes = []
    weights = []
    indices = []
    for node in enum_upsilon(m):
        if not keep(node.j, m):
            continue
        t = point_from_index(node.j, m)
        if factor_family is None:
            factor = 1.0
        else:
            value = trig_eval(factor_family, factor_index, t)
            factor = value * value
        nodes.append(xy_map(t))
        weights.append(scale / m ** 2 * node.weight * factor)
        indices.append(node.j)
    return CubatureRule(
        kind=kind,
        n=n,
        nodes=tuple(nodes),
        weights=tuple(weights),
        exact_mdegree=2 * n - 1,
        weight_params=params,
        indices=tuple(indices),
    )


def gauss_rule(n: int) -> CubatureRule:
    """Interior-node rule for the (1/2, 1/2) weight; the node count equals
    the dimension of the weighted-degree n-1 polynomial space."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n + 5
    return _lattice_rule(
        "gauss", n, m, WeightParams(HALF, HALF),
        TrigFamily.SS, make_index(2, 1), 12.0,
        lambda j, mm: 0 < j[1] < j[0] < -j[2] < mm,
    )


def lobatto_rule(n: int) -> CubatureRule:
    """Full-lattice rule for the (-1/2, -1/2) weight, boundary included."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _lattice_rule(
        "lobatto", n, n, WeightParams(-HALF, -HALF),
        None, None, 1.0,
        lambda j, mm: True,
    )


def radau_rules(n: int):
    """The two mixed-weight rules.

    The first keeps nodes off the t1 = t2 edge and integrates the
    (1/2, -1/2) weight; the second keeps nodes off t2 = 0 and t3 = -1 and
    integrates (-1/2, 1/2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r1 = _lattice_rule(
        "radau1", n, n + 2, WeightParams(HALF, -HALF),
        TrigFamily.SC, make_index(1, 0), 6.0,
        lambda j, mm: j[0] != j[1],
    )
    r2 = _lattice_rule(
        "radau2", n, n + 3, WeightParams(-HALF, HALF),
        TrigFamily.CS, make_index(1, 1), 6.0,
        lambda j, mm: j[1] != 0 and j[2] != -mm,
    )
    return r1, r2


def make_rule(kind: str, n: int) -> CubatureRule:
    if kind == "gauss":
        return gauss_rule(n)
    if kind == "lobatto":
        return lobatto_rule(n)
    if kind == "radau1":
        return radau_rules(n)[0]
    if kind == "radau2":
        return radau_rules(n)[1]
    raise ValueError(f"unknown rule kind {kind!r}")


def integrate(rule: CubatureRule, f) -> float:
    """Apply the rule to a callable on (x, y), summing in node order."""
    total = 0.0
    for (x, y), w in zip(rule.nodes, rule.weights):
        total += w * f(x, y)
    return total


def integrate_poly(rule: CubatureRule, p: BivarPoly) -> float:
    return integrate(rule, lambda x, y: float(p(x, y)))


def reference_integral(p: WeightParams, f, tol=None) -> float:
    """Independent oracle: the normalized weighted integral of f computed
    by adaptive quadrature on the pulled-back parameter triangle."""
    kwargs = {} if tol is None else {"tol": tol}
    if isinstance(f, BivarPoly):
        return continuous_inner(p, f, BivarPoly.constant(Fraction(1)), **kwargs)
    return continuous_inner(p, f, lambda x, y: 1.0, **kwargs)


# variety checks --------------------------------------------------------------


def _first_kind_partner(k: MIndex) -> tuple:
    """Lower index paired with k in the two-term boundary-rule ideals:
    (k1-1, k2) when k1 > 0, else (1, k2-1)."""
    if k.k1 >= 1:
        return 1, MIndex(k.k1 - 1, k.k2)
    return 1, MIndex(1, k.k2 - 1)


def variety_check(kind: str, n: int, tol: float = 1e-10):
    """Verify that the ideal generators attached to a rule vanish on its
    node set.

    gauss:   members of the (1/2, 1/2) family of weighted degree n
    lobatto: differences of first-kind members of weighted degree n+1
    radau1:  members of the (1/2, -1/2) family of weighted degree n
    radau2:  differences of (-1/2, 1/2) members of weighted degree n+1

    Residuals are normalized by the generator's max over a fixed dense
    sample of the domain.  Returns a report dict.
    """
    rule = make_rule(kind, n)
    sample = lobatto_rule(max(24, 2 * n))
    checks = []
    if kind == "gauss":
        p = WeightParams(HALF, HALF)
        gens = [(str(tuple(k)), cheb_poly(p, k)) for k in star_class(n)]
    elif kind == "radau1":
        p = WeightParams(HALF, -HALF)
        gens = [(str(tuple(k)), cheb_poly(p, k)) for k in star_class(n)]
    elif kind in ("lobatto", "radau2"):
        p = rule.weight_params
        gens = []
        for k in star_class(n + 1):
            sign, partner = _first_kind_partner(k)
            diff = cheb_poly(p, k) - sign * cheb_poly(p, partner)
            gens.append((f"{tuple(k)}-{tuple(partner)}", diff))
    else:
        raise ValueError(f"unknown rule kind {kind!r}")

    passed = True
    for label, gen in gens:
        sup = max(abs(float(gen(x, y))) for x, y in sample.nodes) or 1.0
        resid = max(abs(float(gen(x, y))) for x, y in rule.nodes) / sup
        ok = resid <= tol
        passed = passed and ok
        checks.append({"generator": label, "max_residual": resid, "pass": ok})
    return {
        "kind": kind,
        "n": n,
        "tol": tol,
        "node_count": len(rule.nodes),
        "checks": checks,
        "pass": passed,
    }


# serialization ----------------------------------------------------------------


def rule_to_json(rule: CubatureRule) -> str:
    doc = {
        "kind": rule.kind,
        "n": rule.n,
        "alpha": float(rule.weight_params.alpha),
        "beta": float(rule.weight_params.beta),
        "nodes": [[x, y] for x, y in rule.nodes],
        "weights": list(rule.weights),
        "exact_mdegree": rule.exact_mdegree,
    }
    return json_dumps(doc)


def rule_to_csv(rule: CubatureRule) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "weight"])
    for (x, y), w in zip(rule.nodes, rule.weights):
        writer.writerow([f"{x:.17g}", f"{y:.17g}", f"{w:.17g}"])
    return buf.getvalue()
