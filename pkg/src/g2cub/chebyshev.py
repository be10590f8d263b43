"""Change of variables onto the deltoid-bounded domain, the weight
functions, and the four Chebyshev-type polynomial families with exact
rational coefficients.

The map (x, y) = (cc_{1,0,-1}, cc_{1,1,-2}) sends the fundamental
triangle onto the region between two hypocycloid arcs, cut out by
F(x, y) >= 0.  Polynomials are graded by the weighted degree
2*k1 + 3*k2; each weighted-degree class is generated recursively from
hardcoded low-degree members, with out-of-range indices folded back by
the reflection identities of the underlying trigonometric functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import quad
from .coords import make_index
from .gentrig import TrigFamily, eval as trig_eval
from .lattice import orbit_constant
from .poly import BivarPoly, star_cmp, star_key  # star_cmp re-exported

HALF = Fraction(1, 2)

DENOM_FALLBACK = 1e-8


class MIndex(NamedTuple):
    k1: int
    k2: int

    @property
    def mdegree(self) -> int:
        return 2 * self.k1 + 3 * self.k2


@dataclass(frozen=True)
class WeightParams:
    alpha: object
    beta: object

    def __post_init__(self):
        if not (float(self.alpha) > -1 and float(self.beta) > -1):
            raise ValueError("weight parameters must both exceed -1")

    @property
    def is_half_integer(self) -> bool:
        return abs(self.alpha) == HALF and abs(self.beta) == HALF

    def key(self):
        return (Fraction(self.alpha), Fraction(self.beta))


def _require_half_integer(p: WeightParams):
    if not p.is_half_integer:
        raise ValueError(
            f"parameters ({p.alpha}, {p.beta}) are outside the four "
            "half-integer cases"
        )


def xy_map(t) -> tuple:
    """Images of a point under the two lowest invariant trig functions."""
    x = trig_eval(TrigFamily.CC, make_index(1, 0), t)
    y = trig_eval(TrigFamily.CC, make_index(1, 1), t)
    return x, y


def deltoid_F(x, y):
    """Defining polynomial of the domain; nonnegative exactly on it."""
    return (1 + 2 * y - 3 * x * x) * (
        24 * x ** 3 - y * y - 12 * x * y - 6 * x - 4 * y - 1
    )


def weight_w(p: WeightParams, x: float, y: float) -> float:
    """The two-parameter weight, including its constant prefactor."""
    f1 = 1.0 + 2.0 * y - 3.0 * x * x
    f2 = 24.0 * x ** 3 - y * y - 12.0 * x * y - 6.0 * x - 4.0 * y - 1.0
    if f1 < 0 or f2 < 0:
        raise ValueError(f"point ({x}, {y}) lies outside the weight domain")
    a, b = float(p.alpha), float(p.beta)
    if (a < 0 and f1 == 0) or (b < 0 and f2 == 0):
        raise ValueError("negative exponent on the domain boundary")
    pref = (4.0 * math.pi ** 2) ** (a + b) / 3.0 ** (2 * a + b)
    return pref * f1 ** a * f2 ** b


# star order ---------------------------------------------------------------

def star_sorted(indices):
    return sorted((MIndex(*k) for k in indices), key=star_key)


def star_indices_upto(max_mdeg: int):
    """All index pairs with weighted degree <= max_mdeg, in order."""
    out = [
        MIndex(i, j)
        for i in range(max_mdeg // 2 + 1)
        for j in range((max_mdeg - 2 * i) // 3 + 1)
    ]
    return sorted(out, key=star_key)


def star_class(n: int):
    """Index pairs of weighted degree exactly n, in order."""
    return [MIndex((n - 3 * j) // 2, j) for j in range(n % 2, n // 3 + 1, 2)]


# exact polynomial tables ---------------------------------------------------

def _poly(terms):
    return BivarPoly({k: Fraction(c) for k, c in terms.items()})


_X = BivarPoly.x()
_Y = BivarPoly.y()

# hardcoded members through weighted degree 6, keyed by (2*alpha, 2*beta)
_SEEDS = {
    (-1, -1): {
        (0, 0): _poly({(0, 0): 1}),
        (1, 0): _poly({(1, 0): 1}),
        (0, 1): _poly({(0, 1): 1}),
        (2, 0): _poly({(2, 0): 6, (1, 0): -2, (0, 1): -2, (0, 0): -1}),
        (1, 1): _poly({(1, 1): 3, (2, 0): -6, (1, 0): 1, (0, 1): 2, (0, 0): 1}),
        (3, 0): _poly({(3, 0): 36, (1, 1): -18, (1, 0): -9, (0, 1): -6, (0, 0): -2}),
        (0, 2): _poly({(0, 2): 6, (0, 1): 10, (3, 0): -72, (1, 1): 36, (1, 0): 18, (0, 0): 3}),
    },
    (1, -1): {
        (0, 0): _poly({(0, 0): 1}),
        (1, 0): _poly({(1, 0): 6, (0, 0): 2}),
        (0, 1): _poly({(1, 0): 6, (0, 1): 3, (0, 0): 1}),
        (2, 0): _poly({(2, 0): 36, (0, 1): -6, (0, 0): -3}),
        (1, 1): _poly({(1, 1): 18, (1, 0): 6, (0, 1): 9, (0, 0): 2}),
        (3, 0): _poly({(3, 0): 216, (1, 1): -72, (1, 0): -48, (0, 1): -24, (0, 0): -8}),
        (0, 2): _poly({(1, 1): 126, (0, 2): 18, (0, 1): 36, (1, 0): 54, (0, 0): 10, (3, 0): -216}),
    },
    (-1, 1): {
        (0, 0): _poly({(0, 0): 1}),
        (1, 0): _poly({(1, 0): 3}),
        (0, 1): _poly({(0, 1): 6, (0, 0): 2}),
        (2, 0): _poly({(2, 0): 18, (1, 0): -3, (0, 1): -6, (0, 0): -3}),
        (1, 1): _poly({(1, 1): 18, (1, 0): 6, (2, 0): -18, (0, 1): 6, (0, 0): 3}),
        (3, 0): _poly({(3, 0): 108, (1, 1): -54, (1, 0): -27, (0, 1): -12, (0, 0): -5}),
        (0, 2): _poly({(0, 2): 36, (0, 1): 36, (3, 0): -216, (1, 1): 108, (1, 0): 54, (0, 0): 9}),
    },
    (1, 1): {
        (0, 0): _poly({(0, 0): 1}),
        (1, 0): _poly({(1, 0): 6, (0, 0): 1}),
        (0, 1): _poly({(1, 0): 6, (0, 1): 6, (0, 0): 2}),
        (2, 0): _poly({(2, 0): 36, (0, 1): -6, (0, 0): -3}),
        (1, 1): _poly({(1, 1): 36, (1, 0): 12, (0, 1): 12, (0, 0): 4}),
        (3, 0): _poly({(3, 0): 216, (1, 1): -72, (1, 0): -42, (0, 1): -18, (0, 0): -7}),
        (0, 2): _poly({(1, 1): 144, (0, 2): 36, (0, 1): 42, (3, 0): -216, (1, 0): 60, (0, 0): 11}),
    },
}

_TABLES = {}


def resolve_index(alpha: Fraction, beta: Fraction, k1: int, k2: int):
    """Fold an arbitrary integer index pair back into the quadrant using
    the reflection identities.  Returns (sign, MIndex) or (0, None) when
    the member is identically zero."""
    sign = 1
    for _ in range(64):
        if k1 >= 0 and k2 >= 0:
            return sign, MIndex(k1, k2)
        if k2 < 0:
            if beta == -HALF:
                k1, k2 = k1 + 3 * k2, -k2
            else:
                if k2 == -1:
                    return 0, None
                k1, k2 = k1 + 3 * k2 + 3, -k2 - 2
                sign = -sign
        elif k1 < 0:
            if alpha == -HALF:
                k1, k2 = -k1, k2 + k1
            else:
                if k1 == -1:
                    return 0, None
                k1, k2 = -k1 - 2, k2 + k1 + 1
                sign = -sign
    raise RuntimeError("index reflection did not terminate")


class _ChebTable:
    """Lazily filled table of one family's exact polynomials, grown one
    weighted-degree class at a time in the monomial order."""

    def __init__(self, alpha: Fraction, beta: Fraction):
        self.alpha = alpha
        self.beta = beta
        self.table = dict(_SEEDS[(int(2 * alpha), int(2 * beta))])
        self.filled = 6

    def get(self, k1: int, k2: int) -> BivarPoly:
        n = 2 * k1 + 3 * k2
        while self.filled < n:
            self.filled += 1
            for idx in star_class(self.filled):
                self.table[tuple(idx)] = self._build(*idx)
        return self.table[(k1, k2)]

    def _lookup_resolved(self, k1, k2):
        sign, idx = resolve_index(self.alpha, self.beta, k1, k2)
        if sign == 0:
            return 0, None
        return sign, tuple(idx)

    def _combine(self, lead_poly, raw_indices, target):
        """target = lead_poly - sum of resolved members; members resolving
        to the target itself are moved to the left-hand side."""
        acc = lead_poly
        self_count = 0
        for k1, k2 in raw_indices:
            sign, idx = self._lookup_resolved(k1, k2)
            if idx is None:
                continue
            if idx == target:
                self_count += sign
            else:
                acc = acc - sign * self.table[idx]
        if self_count:
            acc = acc / (1 + self_count)
        return acc

    def _build(self, k1: int, k2: int) -> BivarPoly:
        if k1 >= 1:
            base = self.table[(k1 - 1, k2)]
            raw = [
                (k1 + 1, k2 - 1),
                (k1 - 2, k2 + 1),
                (k1, k2 - 1),
                (k1 - 3, k2 + 1),
                (k1 - 2, k2),
            ]
            return self._combine(6 * _X * base, raw, (k1, k2))
        base = self.table[(0, k2 - 1)]
        raw = [
            (3, k2 - 3),
            (3, k2 - 2),
            (-3, k2),
            (-3, k2 + 1),
            (0, k2 - 2),
        ]
        return self._combine(6 * _Y * base, raw, (k1, k2))


def _table(p: WeightParams) -> _ChebTable:
    _require_half_integer(p)
    key = p.key()
    if key not in _TABLES:
        _TABLES[key] = _ChebTable(*key)
    return _TABLES[key]


def cheb_poly(p: WeightParams, k) -> BivarPoly:
    """Exact rational polynomial of one family member."""
    k = MIndex(*k)
    if k.k1 < 0 or k.k2 < 0:
        raise ValueError("index components must be nonnegative")
    return _table(p).get(k.k1, k.k2)


# trigonometric evaluation ---------------------------------------------------

_QUOTIENTS = {
    # (2a, 2b) -> (family, numerator index builder, denominator index)
    (-1, -1): (TrigFamily.CC, lambda k1, k2: (k1 + k2, k2), None),
    (1, -1): (TrigFamily.SC, lambda k1, k2: (k1 + k2 + 1, k2), (1, 0)),
    (-1, 1): (TrigFamily.CS, lambda k1, k2: (k1 + k2 + 1, k2 + 1), (1, 1)),
    (1, 1): (TrigFamily.SS, lambda k1, k2: (k1 + k2 + 2, k2 + 1), (2, 1)),
}


def cheb_eval_trig(p: WeightParams, k, t) -> float:
    """Evaluate a family member through its trigonometric quotient form,
    falling back to the exact polynomial when the denominator is tiny."""
    _require_half_integer(p)
    k = MIndex(*k)
    fam, num, den = _QUOTIENTS[(int(2 * Fraction(p.alpha)), int(2 * Fraction(p.beta)))]
    numerator = trig_eval(fam, make_index(*num(k.k1, k.k2)), t)
    if den is None:
        return numerator
    denominator = trig_eval(fam, make_index(*den), t)
    if abs(denominator) < DENOM_FALLBACK:
        x, y = xy_map(t)
        return float(cheb_poly(p, k)(x, y))
    return numerator / denominator


def trig_ortho_constant(family, k) -> float:
    """Squared continuous triangle norm of one trig family member."""
    return orbit_constant(k)


def orthogonality_constant(p: WeightParams, k) -> float:
    """Squared norm of a family polynomial under the unit-normalized
    weighted inner product.

    Equal to the orbit constant of the numerator index divided by the
    orbit constant of the denominator index of the quotient form.
    """
    _require_half_integer(p)
    k = MIndex(*k)
    fam, num, den = _QUOTIENTS[(int(2 * Fraction(p.alpha)), int(2 * Fraction(p.beta)))]
    value = trig_ortho_constant(fam, make_index(*num(k.k1, k.k2)))
    if den is not None:
        value /= trig_ortho_constant(fam, make_index(*den))
    return value


# weighted integrals ---------------------------------------------------------

def continuous_inner(p: WeightParams, f, g, tol=quad.DEFAULT_TOL, cap=None):
    """Weighted inner product normalized so that <1, 1> = 1.

    Polynomial arguments are integrated exactly through cached moment
    tables; general callables (x, y) -> value are pulled back to the
    parameter triangle and integrated adaptively.
    """
    if isinstance(f, BivarPoly) and isinstance(g, BivarPoly):
        prod = f * g
        moments, _ = quad.moment_table(
            float(p.alpha), float(p.beta), prod.mdegree(), tol=tol, cap=cap
        )
        return float(sum(float(c) * moments[ij] for ij, c in prod.coeffs.items()))

    fv = f if callable(f) else (lambda x, y, _p=f: _p(x, y))
    gv = g if callable(g) else (lambda x, y, _p=g: _p(x, y))
    a, b = float(p.alpha), float(p.beta)
    smooth = quad._needs_smoothing(a, b)

    def batch(t1, t2):
        import numpy as np

        x = quad.x_of_t(t1, t2)
        y = quad.y_of_t(t1, t2)
        w = quad._weight_values(a, b, t1, t2)
        rows = np.empty((2, t1.size))
        rows[0] = w
        rows[1] = w * fv(x, y) * gv(x, y)
        return rows

    est = quad.triangle_quadrature(batch, tol=tol, cap=cap, smooth=smooth)
    return float(est[1] / est[0])


def normalization_c(p: WeightParams, tol=quad.DEFAULT_TOL) -> float:
    """Reciprocal of the weight's integral over its domain."""
    a, b = float(p.alpha), float(p.beta)
    mass = quad.weight_mass(a, b, tol=tol)
    return (3.0 / (4.0 * math.pi ** 2)) ** (a + b + 1.0) / mass


# serialization ---------------------------------------------------------------

def poly_to_json_dict(p: WeightParams, k, polynomial: BivarPoly) -> dict:
    k = MIndex(*k)
    terms = []
    for (i, j), c in polynomial.star_sorted_terms():
        frac = c if isinstance(c, Fraction) else Fraction(c)
        terms.append({"i": i, "j": j, "num": frac.numerator, "den": frac.denominator})
    return {
        "alpha": float(p.alpha),
        "beta": float(p.beta),
        "k": [k.k1, k.k2],
        "terms": terms,
    }
