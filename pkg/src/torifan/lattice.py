"""Exact integer lattice primitives in rank 2 and 3.

Everything here works on Python ints, so there is no overflow to check.
Rationals are :class:`fractions.Fraction`, which are always reduced with a
positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import NotStrictlyConvex, NotUnimodular, ZeroVector

Rational = Fraction

__all__ = [
    "Rational", "LatticeVector", "LatticeVector3", "Cone2", "det2", "det3",
    "primitive", "singularity_order", "unimodular_apply", "matrix_det2",
    "egcd", "basis_completion",
]


@dataclass(frozen=True, slots=True, order=True)
class LatticeVector:
    x: int
    y: int

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.x, -self.y)

    def __rmul__(self, k: int) -> LatticeVector:
        return LatticeVector(k * self.x, k * self.y)

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def dot(self, other: LatticeVector) -> int:
        return self.x * other.x + self.y * other.y


@dataclass(frozen=True, slots=True, order=True)
class LatticeVector3:
    x: int
    y: int
    z: int

    def __add__(self, other: LatticeVector3) -> LatticeVector3:
        return LatticeVector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: LatticeVector3) -> LatticeVector3:
        return LatticeVector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> LatticeVector3:
        return LatticeVector3(-self.x, -self.y, -self.z)

    def __rmul__(self, k: int) -> LatticeVector3:
        return LatticeVector3(k * self.x, k * self.y, k * self.z)

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y
        yield self.z

    def __repr__(self) -> str:
        return f"({self.x},{self.y},{self.z})"

    def is_primitive(self) -> bool:
        return gcd(gcd(self.x, self.y), self.z) == 1


def det2(u: LatticeVector, v: LatticeVector) -> int:
    return u.x * v.y - u.y * v.x


def det3(u: LatticeVector3, v: LatticeVector3, w: LatticeVector3) -> int:
    return (u.x * (v.y * w.z - v.z * w.y)
            - u.y * (v.x * w.z - v.z * w.x)
            + u.z * (v.x * w.y - v.y * w.x))


def primitive(v: LatticeVector) -> LatticeVector:
    """Return the primitive generator of the ray through ``v``."""
    g = gcd(v.x, v.y)
    if g == 0:
        raise ZeroVector("the zero vector spans no ray")
    return LatticeVector(v.x // g, v.y // g)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, (a, b) = a // b, (b, a % b)
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def basis_completion(u: LatticeVector) -> LatticeVector:
    """Some ``f`` with ``det2(u, f) == 1``; ``u`` must be primitive."""
    g, s, t = egcd(u.x, u.y)
    if g != 1:
        raise ValueError(f"{u!r} is not primitive")
    # u.x * s - u.y * (-t) == 1
    return LatticeVector(-t, s)


@dataclass(frozen=True, slots=True)
class Cone2:
    """Strictly convex 2D cone with primitive generators.

    The orientation is whatever the caller passed; ``det2(gen_a, gen_b)`` may be
    negative. Routines that need counterclockwise input check it themselves.
    """

    gen_a: LatticeVector
    gen_b: LatticeVector

    def __post_init__(self):
        for g in (self.gen_a, self.gen_b):
            if g.is_zero():
                raise ZeroVector("cone generator is zero")
            if not g.is_primitive():
                raise ValueError(f"cone generator {g!r} is not primitive")
        if det2(self.gen_a, self.gen_b) == 0:
            raise NotStrictlyConvex(f"cone({self.gen_a!r},{self.gen_b!r}) is not strictly convex")

    @property
    def det(self) -> int:
        return det2(self.gen_a, self.gen_b)

    def contains(self, p: LatticeVector) -> bool:
        a, b = (self.gen_a, self.gen_b) if self.det > 0 else (self.gen_b, self.gen_a)
        return det2(a, p) >= 0 and det2(p, b) >= 0


def singularity_order(c: Cone2) -> int:
    """Order ``d`` of the cyclic quotient singularity of ``c``; 1 iff regular."""
    return abs(c.det)


Matrix2 = Sequence[Sequence[int]]


def matrix_det2(m: Matrix2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def unimodular_apply(m: Matrix2, pts: Iterable[LatticeVector]) -> list[LatticeVector]:
    """Apply a GL(2, Z) matrix (row-major, acting on column vectors)."""
    if abs(matrix_det2(m)) != 1:
        raise NotUnimodular(f"det {matrix_det2(m)} is not +-1")
    (a, b), (c, d) = m
    return [LatticeVector(a * p.x + b * p.y, c * p.x + d * p.y) for p in pts]
