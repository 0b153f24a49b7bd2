"""Hirzebruch-Jung resolution of 2D cyclic quotient cones and of P(1, c, b)."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime, OutOfRange, WrongOrientation
from .fan2d import CompleteFan2
from .lattice import Cone2, LatticeVector, basis_completion, det2, singularity_order

__all__ = [
    "ResolutionData", "minimal_resolution", "determinant_check",
    "tridiagonal_det", "wps_fan", "resolve_wps", "WpsResolution",
    "wps_resolution",
]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class ResolutionData:
    cone: Cone2
    interior_rays: tuple[LatticeVector, ...]
    self_intersections: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.interior_rays)

    @property
    def chain(self) -> tuple[LatticeVector, ...]:
        """``gen_a, v_1, ..., v_k, gen_b``."""
        return (self.cone.gen_a, *self.interior_rays, self.cone.gen_b)


def minimal_resolution(c: Cone2) -> ResolutionData:
    """Minimal regular subdivision of a counterclockwise cone.

    Walks the chain with ``v_{i+1} = b_i v_i - v_{i-1}``, where
    ``b_i = ceil(det(v_{i-1}, w) / det(v_i, w))`` is the smallest coefficient
    keeping ``v_{i+1}`` inside the cone (``w = gen_b``). The first step uses a
    fake predecessor ``-f`` with ``det2(gen_a, f) = 1``.
    """
    if c.det < 0:
        raise WrongOrientation(f"det2(gen_a, gen_b) = {c.det} < 0; pass the cone counterclockwise")
    u, w = c.gen_a, c.gen_b
    prev, cur = -basis_completion(u), u
    chain = [u]
    while cur != w:
        s = _ceil_div(det2(prev, w), det2(cur, w))
        prev, cur = cur, s * cur - prev
        chain.append(cur)
    interior = tuple(chain[1:-1])
    a = tuple(-det2(chain[i - 1], chain[i + 1]) for i in range(1, len(chain) - 1))
    return ResolutionData(c, interior, a)


def tridiagonal_det(diag) -> int:
    """Determinant of the tridiagonal matrix with ``diag`` and unit off-diagonals."""
    d_prev, d = 0, 1
    for a in diag:
        d_prev, d = d, a * d - d_prev
    return d


def determinant_check(rd: ResolutionData) -> bool:
    return tridiagonal_det(rd.self_intersections) == (-1) ** rd.k * singularity_order(rd.cone)


def _check_wps(c: int, b: int, min_c: int) -> None:
    if c < min_c or b < c:
        raise OutOfRange(f"need b >= c >= {min_c}, got c={c}, b={b}")
    if c == b and c != 1:
        raise OutOfRange(f"need b > c, got c = b = {c}")
    if gcd(b, c) != 1:
        raise NotCoprime(f"gcd({b}, {c}) = {gcd(b, c)}")


def wps_fan(c: int, b: int) -> tuple[LatticeVector, LatticeVector, LatticeVector]:
    """The three rays ``(b, c), (-1, 0), (0, -1)`` of P(1, c, b), counterclockwise."""
    _check_wps(c, b, 1)
    return LatticeVector(b, c), LatticeVector(-1, 0), LatticeVector(0, -1)


@dataclass(frozen=True)
class WpsResolution:
    """Both resolution chains of P(1, c, b) and the resulting smooth fan."""

    c: int
    b: int
    toward_x: ResolutionData   # cone((b, c), (-1, 0)), order c
    toward_y: ResolutionData   # cone((0, -1), (b, c)), order b
    fan: CompleteFan2


def wps_resolution(c: int, b: int) -> WpsResolution:
    _check_wps(c, b, 1)
    nu1, nu_x, nu_y = wps_fan(c, b)
    upper = minimal_resolution(Cone2(nu1, nu_x))
    lower = minimal_resolution(Cone2(nu_y, nu1))
    rays = (nu1, *upper.interior_rays, nu_x, nu_y, *lower.interior_rays)
    return WpsResolution(c, b, upper, lower, CompleteFan2(rays))


def resolve_wps(c: int, b: int) -> CompleteFan2:
    """Minimal desingularization of P(1, c, b); rays start at ``(b, c)``."""
    _check_wps(c, b, 2)
    return wps_resolution(c, b).fan
