"""Sparse bivariate polynomials with exact rational or float coefficients.

Coefficients are stored in a dict keyed by exponent pairs (i, j); zero
coefficients are never stored.  Arithmetic with Fraction coefficients is
exact and closed.  Polynomials are graded by the weighted degree
2*i + 3*j and ordered, within one weighted-degree class, by descending
first exponent; star_key realizes that order as an ascending sort key.
"""

from __future__ import annotations

from fractions import Fraction


def star_key(k):
    """Ascending sort key for the weighted monomial order."""
    return (2 * k[0] + 3 * k[1], k[1])


def star_cmp(a, b) -> int:
    """-1, 0 or 1 as a comes before, equals, or comes after b."""
    ka, kb = star_key(a), star_key(b)
    return (ka > kb) - (ka < kb)


def mdegree_of(k) -> int:
    return 2 * k[0] + 3 * k[1]


class BivarPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                if c:
                    self.coeffs[(int(key[0]), int(key[1]))] = c

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls):
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def from_terms(cls, terms):
        """terms: iterable of (i, j, coeff)."""
        p = cls()
        for i, j, c in terms:
            p.coeffs[(i, j)] = p.coeffs.get((i, j), 0) + c
        p._prune()
        return p

    def _prune(self):
        for key in [k for k, c in self.coeffs.items() if not c]:
            del self.coeffs[key]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, BivarPoly):
            other = BivarPoly.constant(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        result = BivarPoly()
        result.coeffs = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = BivarPoly()
        result.coeffs = {k: -c for k, c in self.coeffs.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, BivarPoly):
            other = BivarPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BivarPoly):
            out = {}
            for (i1, j1), c1 in self.coeffs.items():
                for (i2, j2), c2 in other.coeffs.items():
                    key = (i1 + i2, j1 + j2)
                    s = out.get(key, 0) + c1 * c2
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
            result = BivarPoly()
            result.coeffs = out
            return result
        if not other:
            return BivarPoly.zero()
        result = BivarPoly()
        result.coeffs = {k: c * other for k, c in self.coeffs.items()}
        return result

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, BivarPoly):
            raise TypeError("polynomial division is not supported")
        if isinstance(scalar, (int, Fraction)):
            return self * (Fraction(1) / scalar)
        return self * (1.0 / scalar)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            other = BivarPoly.constant(other)
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    # calculus and queries -------------------------------------------------
    def diff_x(self):
        return BivarPoly({(i - 1, j): c * i for (i, j), c in self.coeffs.items() if i})

    def diff_y(self):
        return BivarPoly({(i, j - 1): c * j for (i, j), c in self.coeffs.items() if j})

    def mdegree(self) -> int:
        if not self.coeffs:
            return 0
        return max(mdegree_of(k) for k in self.coeffs)

    def leading_star_term(self):
        """(exponent pair, coefficient) of the term latest in the order."""
        if not self.coeffs:
            return (0, 0), 0
        key = max(self.coeffs, key=star_key)
        return key, self.coeffs[key]

    def star_sorted_terms(self):
        return [(k, self.coeffs[k]) for k in sorted(self.coeffs, key=star_key)]

    def max_abs_coeff(self) -> float:
        if not self.coeffs:
            return 0.0
        return max(abs(float(c)) for c in self.coeffs.values())

    def to_float(self):
        return BivarPoly({k: float(c) for k, c in self.coeffs.items()})

    def __call__(self, x, y):
        total = 0.0 * x * y if hasattr(x, "shape") else 0.0
        for (i, j), c in self.coeffs.items():
            total = total + float(c) * x ** i * y ** j
        return total

    def __repr__(self):
        if not self.coeffs:
            return "BivarPoly(0)"
        parts = []
        for (i, j), c in reversed(self.star_sorted_terms()):
            mono = "".join(
                (f"*x^{i}" if i > 1 else "*x" if i == 1 else "",
                 f"*y^{j}" if j > 1 else "*y" if j == 1 else "")
            )
            parts.append(f"{c}{mono}")
        return "BivarPoly(" + " + ".join(parts) + ")"
