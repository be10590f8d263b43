"""Homogeneous coordinates on the plane t1+t2+t3=0 and the 12-element
reflection group of the 30-60-90 triangle.

Points and integer indices live on the sum-zero plane in R^3.  The group
is generated by the three reflections

    t*s1 = -(t1, t3, t2),   t*s2 = -(t2, t1, t3),   t*s3 = -(t3, t2, t1),

s3 = s1*s2*s1.  The six elements built from 1, s1, s2 together with their
negations give twelve signed permutations in total; every element is a
plain permutation of the coordinates or the negation of one.
"""

from __future__ import annotations

import math
from typing import NamedTuple

SUM_ZERO_TOL = 1e-14
TRIANGLE_TOL = 1e-12

SQRT3 = math.sqrt(3.0)


class TriplePoint(NamedTuple):
    t1: float
    t2: float
    t3: float


class HexIndex(NamedTuple):
    k1: int
    k2: int
    k3: int

    def is_congruent_mod3(self) -> bool:
        """True when all three components agree mod 3."""
        return self.k1 % 3 == self.k2 % 3 == self.k3 % 3


class GroupElem(NamedTuple):
    sign: int          # overall factor applied after permuting
    perm: tuple        # result[i] = sign * t[perm[i]]
    parity: int        # +1 for rotations, -1 for reflections
    name: str

    def apply(self, t):
        s = self.sign
        p = self.perm
        return type(t)(s * t[p[0]], s * t[p[1]], s * t[p[2]])


def _elem(sign, perm, parity, name):
    return GroupElem(sign, perm, parity, name)


IDENTITY = _elem(+1, (0, 1, 2), +1, "1")

# The rotation subgroup of the triangle symmetries and its three
# reflections, then everything negated.
A2 = (
    IDENTITY,
    _elem(-1, (0, 2, 1), -1, "s1"),
    _elem(-1, (1, 0, 2), -1, "s2"),
    _elem(-1, (2, 1, 0), -1, "s3"),
    _elem(+1, (2, 0, 1), +1, "s1s2"),
    _elem(+1, (1, 2, 0), +1, "s2s1"),
)

A2_STAR = (
    IDENTITY,
    _elem(+1, (0, 2, 1), -1, "-s1"),
    _elem(+1, (1, 0, 2), -1, "-s2"),
    _elem(+1, (2, 1, 0), -1, "-s3"),
    _elem(+1, (2, 0, 1), +1, "s1s2"),
    _elem(+1, (1, 2, 0), +1, "s2s1"),
)

G2 = A2 + tuple(_elem(-g.sign, g.perm, g.parity, "-" + g.name) for g in A2)


def compose(g: GroupElem, h: GroupElem) -> GroupElem:
    """Element acting as g followed by h: t*(g h) = (t*g)*h."""
    sign = g.sign * h.sign
    perm = tuple(g.perm[h.perm[i]] for i in range(3))
    parity = g.parity * h.parity
    for elem in G2:
        if elem.sign == sign and elem.perm == perm:
            return elem
    raise AssertionError("composition left the 12-element table")


def make_point(t1: float, t2: float) -> TriplePoint:
    """Point from two free coordinates, third forced by the sum-zero plane."""
    return TriplePoint(float(t1), float(t2), -float(t1) - float(t2))


def cart_to_homog(x1: float, x2: float) -> TriplePoint:
    """Cartesian (x1, x2) to homogeneous coordinates."""
    return TriplePoint(
        SQRT3 / 2.0 * x1 - 0.5 * x2,
        x2,
        -SQRT3 / 2.0 * x1 - 0.5 * x2,
    )


def make_index(k1: int, k2: int) -> HexIndex:
    return HexIndex(int(k1), int(k2), -int(k1) - int(k2))


def point_from_index(j, n: int) -> TriplePoint:
    """Lattice node j/n.  Each component is divided separately so that
    lattice points on symmetry lines keep exact float equalities
    (j1 == j2 gives t1 == t2, j3 == -n gives t3 == -1.0)."""
    return TriplePoint(j[0] / n, j[1] / n, j[2] / n)


def apply_group(g: GroupElem, t):
    """Image of a point or index under one group element."""
    return g.apply(t)


def hat(k: HexIndex) -> HexIndex:
    """The duality map (k3-k2, k1-k3, k2-k1) between the physical and
    frequency index lattices."""
    return HexIndex(k[2] - k[1], k[0] - k[2], k[1] - k[0])


def orbit(k: HexIndex) -> frozenset:
    """All distinct images of k under the 12-element group."""
    return frozenset(g.apply(HexIndex(*k)) for g in G2)


def in_fundamental_triangle(t, tol: float = TRIANGLE_TOL) -> bool:
    """Membership test for 0 <= t2 <= t1 <= -t3 <= 1, boundaries included."""
    t1, t2, t3 = t
    return (
        t2 >= -tol
        and t1 >= t2 - tol
        and -t3 >= t1 - tol
        and -t3 <= 1.0 + tol
    )
