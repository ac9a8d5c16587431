"""Exact integer geometry in the plane lattice.

Primitive vectors, 2x2 determinants and the minimal smooth (unimodular)
subdivision of two-dimensional rational cones.  Everything is plain
arbitrary-precision integer arithmetic; no operation here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple


class ZeroVectorError(ValueError):
    """The zero vector has no direction."""


class LatticeVector(NamedTuple):
    p: int
    q: int

    def __add__(self, other: "LatticeVector") -> "LatticeVector":  # type: ignore[override]
        return LatticeVector(self.p + other.p, self.q + other.q)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.p, -self.q)

    def scaled(self, k: int) -> "LatticeVector":
        return LatticeVector(k * self.p, k * self.q)

    def is_primitive(self) -> bool:
        return (self.p, self.q) != (0, 0) and gcd(abs(self.p), abs(self.q)) == 1

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def det(u: LatticeVector, v: LatticeVector) -> int:
    """Determinant of the 2x2 matrix with rows ``u``, ``v``."""
    return u.p * v.q - u.q * v.p


def primitive(v: LatticeVector) -> LatticeVector:
    """``v`` divided by the gcd of its entries."""
    v = LatticeVector(*v)
    if v == (0, 0):
        raise ZeroVectorError("cannot normalize the zero vector")
    g = gcd(abs(v.p), abs(v.q))
    return LatticeVector(v.p // g, v.q // g)


@dataclass(frozen=True)
class Cone2:
    """Strictly convex rational plane cone spanned by two primitive rays.

    ``u`` and ``v`` are ordered counterclockwise, i.e. det(u, v) > 0.
    """

    u: LatticeVector
    v: LatticeVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", LatticeVector(*self.u))
        object.__setattr__(self, "v", LatticeVector(*self.v))
        if not self.u.is_primitive() or not self.v.is_primitive():
            raise ValueError(f"cone rays must be primitive: {self.u}, {self.v}")
        if det(self.u, self.v) <= 0:
            raise ValueError(
                f"cone rays must be counterclockwise with det > 0: {self.u}, {self.v}"
            )


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    return old_r, old_x, old_y


def _next_boundary_ray(u: LatticeVector, v: LatticeVector) -> LatticeVector:
    # The lattice points w with det(u, w) = 1 form the line x0 + Z*u; the
    # boundary of the point hull of the cone leaves u towards the first of
    # them that lies inside the cone.
    g, x, y = _ext_gcd(u.p, u.q)
    assert g == 1
    x0 = LatticeVector(-y, x)  # det(u, x0) = u.p*x + u.q*y = 1
    big = det(u, v)
    c = det(x0, v)
    # det(x0 + t*u, v) = c + t*big >= 0  <=>  t >= -c/big
    t = -(c // big)
    return LatticeVector(x0.p + t * u.p, x0.q + t * u.q)


def smooth_subdivide(cone: Cone2) -> list[LatticeVector]:
    """Interior rays of the minimal smooth subdivision, counterclockwise.

    After inserting the returned rays, every pair of angularly adjacent rays
    (the cone's own generators included) spans determinant 1.  The returned
    rays are exactly the primitive lattice points on the compact faces of the
    boundary of the convex hull of the nonzero lattice points of the cone,
    excluding the generators themselves.
    """
    rays: list[LatticeVector] = []
    u, v = cone.u, cone.v
    while det(u, v) != 1:
        w = _next_boundary_ray(u, v)
        assert det(u, w) == 1 and det(w, v) > 0
        rays.append(w)
        u = w
    return rays
