"""The two-parameter second-order operator behind the polynomial families:
exact coefficients, application to polynomials, monomial images,
eigenvalues, and Gram-Schmidt construction of eigenpolynomials for
general parameters.

The operator is triangular with respect to the weighted monomial order,
so each index pair carries exactly one eigenpolynomial with unit leading
coefficient, orthogonal to all earlier monomials under the weighted
inner product.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import quad
from .chebyshev import MIndex, WeightParams, star_indices_upto
from .poly import BivarPoly, star_key

COND_LIMIT = 1e12

_A11 = BivarPoly({(2, 0): Fraction(-6), (0, 1): Fraction(1), (1, 0): Fraction(3), (0, 0): Fraction(2)})
_A12 = BivarPoly({(1, 1): Fraction(-9), (2, 0): Fraction(18), (0, 1): Fraction(-6), (0, 0): Fraction(-3)})
_A22 = BivarPoly({(0, 2): Fraction(-18), (3, 0): Fraction(108), (1, 1): Fraction(-54), (1, 0): Fraction(-27), (0, 1): Fraction(-9)})


@dataclass(frozen=True)
class OperatorCoeffs:
    A11: BivarPoly
    A12: BivarPoly
    A22: BivarPoly
    B1: BivarPoly
    B2: BivarPoly


def operator_coeffs(p: WeightParams) -> OperatorCoeffs:
    """Coefficient polynomials; exact when the parameters are rational."""
    a, b = p.alpha, p.beta
    one = a * 0 + 1  # unit of the parameter's numeric type
    B1 = BivarPoly({(1, 0): 21 * one + 12 * a + 18 * b, (0, 0): 6 * a + 3 * one})
    B2 = BivarPoly({
        (1, 0): 18 * one + 36 * a,
        (0, 1): 45 * one + 36 * b + 18 * a,
        (0, 0): 18 * b + 9 * one,
    })
    return OperatorCoeffs(_A11, _A12, _A22, B1, B2)


def apply_L(p: WeightParams, q: BivarPoly) -> BivarPoly:
    """Apply the operator by direct differentiation of q."""
    c = operator_coeffs(p)
    qx = q.diff_x()
    qy = q.diff_y()
    return (
        -(c.A11 * qx.diff_x())
        - 2 * (c.A12 * qx.diff_y())
        - (c.A22 * qy.diff_y())
        + c.B1 * qx
        + c.B2 * qy
    )


# shift table of the monomial image: (mu, nu) -> exponent (j-2mu+3nu, k+mu-2nu)
_SHIFTS = ((0, 0), (0, 1), (1, 0), (1, 1), (2, 1), (3, 2), (4, 2), (4, 3), (5, 3))


def monomial_image(p: WeightParams, j: int, k: int):
    """Nine-term expansion of the operator applied to x^j y^k, as a list
    of ((i1, i2), coefficient) with zero terms dropped."""
    if j < 0 or k < 0:
        raise ValueError("exponents must be nonnegative")
    a, b = p.alpha, p.beta
    one = a * 0 + 1
    coeff = {
        (0, 0): 6 * (j * j + 3 * k * k + 3 * j * k) * one
        + 3 * j * (5 * one + 4 * a + 6 * b)
        + 3 * k * (9 * one + 6 * a + 12 * b),
        (0, 1): -108 * k * (k - 1) * one,
        (1, 0): -j * (j - 1) * one,
        (1, 1): 18 * k * ((3 * k - 2 - 2 * j) * one + 2 * a),
        (2, 1): 3 * j * ((-j + 2 + 4 * k) * one + 2 * a),
        (3, 2): 9 * k * (k * one + 2 * b),
        (4, 2): -2 * j * (j - 1) * one,
        (4, 3): 27 * k * (k - 1) * one,
        (5, 3): 6 * j * k * one,
    }
    out = []
    for mu, nu in _SHIFTS:
        c = coeff[(mu, nu)]
        if not c:
            continue
        expo = (j - 2 * mu + 3 * nu, k + mu - 2 * nu)
        if expo[0] < 0 or expo[1] < 0:
            raise AssertionError("nonzero image term with negative exponent")
        out.append((expo, c))
    return out


def eigenvalue(p: WeightParams, k):
    """Closed-form eigenvalue attached to one index pair."""
    k = MIndex(*k)
    a, b = p.alpha, p.beta
    one = a * 0 + 1
    m = k.mdegree
    return (
        Fraction(3, 2) * m * (m * one + 5 + 4 * a + 6 * b)
        + Fraction(9, 2) * k.k2 * ((k.k2 + 1) * one + 2 * b)
    )


def eigen_residual(p: WeightParams, k, polynomial: BivarPoly) -> float:
    """Coefficient-space relative residual of L q = lambda q."""
    lam = eigenvalue(p, k)
    resid = apply_L(p, polynomial) - float(lam) * polynomial.to_float()
    scale = max(1.0, abs(float(lam)) * polynomial.max_abs_coeff())
    return resid.max_abs_coeff() / scale


class _JacobiChain:
    """Orthogonal eigenpolynomials for one parameter pair, built by
    Gram-Schmidt over monomials in the weighted order with one
    re-orthogonalization pass."""

    def __init__(self, p: WeightParams):
        self.p = p
        self.indices = []
        self.vectors = []
        self.gram = None
        self._warned = False

    def _extend(self, upto_key):
        needed = [
            idx
            for idx in star_indices_upto(upto_key[0])
            if star_key(idx) <= upto_key
        ]
        needed.sort(key=star_key)
        if len(needed) <= len(self.vectors):
            return
        max_mdeg = 2 * needed[-1].mdegree
        moments, _ = quad.moment_table(float(self.p.alpha), float(self.p.beta), max_mdeg)
        n = len(needed)
        G = np.empty((n, n))
        for r, ki in enumerate(needed):
            for s, kj in enumerate(needed):
                G[r, s] = moments[(ki.k1 + kj.k1, ki.k2 + kj.k2)]
        cond = np.linalg.cond(G)
        if cond > COND_LIMIT and not self._warned:
            self._warned = True
            warnings.warn(
                f"moment matrix condition estimate {cond:.2e} exceeds "
                f"{COND_LIMIT:.0e} for parameters ({self.p.alpha}, {self.p.beta})",
                RuntimeWarning,
            )
        self.gram = G
        self.indices = needed

        vectors = []
        for m in range(n):
            v = np.zeros(n)
            v[m] = 1.0
            for _ in range(2):  # classical pass plus one re-orthogonalization
                for q in vectors:
                    v -= (v @ G @ q) / (q @ G @ q) * q
                v[m] = 1.0  # projections never touch the leading slot
            vectors.append(v)
        self.vectors = vectors

    def poly(self, k: MIndex) -> BivarPoly:
        self._extend(star_key(k))
        pos = self.indices.index(k)
        v = self.vectors[pos]
        terms = {
            (idx.k1, idx.k2): float(c)
            for idx, c in zip(self.indices, v)
            if abs(c) > 0.0
        }
        return BivarPoly(terms)


_CHAINS = {}


def jacobi_poly(p: WeightParams, k) -> BivarPoly:
    """Eigenpolynomial with unit leading coefficient in the weighted
    monomial order, orthogonal to every earlier monomial."""
    k = MIndex(*k)
    key = (float(p.alpha), float(p.beta))
    chain = _CHAINS.get(key)
    if chain is None:
        chain = _CHAINS[key] = _JacobiChain(WeightParams(float(p.alpha), float(p.beta)))
    return chain.poly(k)


def selfadjointness_check(p: WeightParams, f: BivarPoly, g: BivarPoly):
    """Both orderings of the weighted pairing with the operator."""
    from .chebyshev import continuous_inner

    lhs = continuous_inner(p, apply_L(p, f).to_float(), g.to_float())
    rhs = continuous_inner(p, f.to_float(), apply_L(p, g).to_float())
    return lhs, rhs
