"""Brute-force oracles, kept independent of the production algorithms."""
from __future__ import annotations

from functools import cmp_to_key
from math import gcd

from .lattice import Cone2, LatticeVector, det2

__all__ = ["hull_boundary_points", "dihedral_match_matrix"]


def hull_boundary_points(c: Cone2) -> list[LatticeVector]:
    """Lattice points on the compact boundary of ``Conv(c ∩ N \\ {0})``.

    Scans every lattice point of the bounding box of the triangle
    ``(0, gen_a, gen_b)``, which contains the compact boundary. Keeps the
    nearest point on each ray, sorts by angle from ``gen_a`` and runs a
    stack scan that keeps right turns and collinear points. Returns the
    chain ``gen_a, ..., gen_b``. The cone must be counterclockwise.
    """
    a, b = c.gen_a, c.gen_b
    assert det2(a, b) > 0
    xs = (0, a.x, b.x)
    ys = (0, a.y, b.y)
    nearest: dict[LatticeVector, LatticeVector] = {}
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = LatticeVector(x, y)
            if p.is_zero() or det2(a, p) < 0 or det2(p, b) < 0:
                continue
            g = gcd(x, y)
            key = LatticeVector(x // g, y // g)
            if key not in nearest or g < _scale(nearest[key], key):
                nearest[key] = p

    def by_angle(p, q):
        d = det2(p, q)
        return -1 if d > 0 else (1 if d < 0 else 0)

    pts = sorted(nearest.values(), key=cmp_to_key(by_angle))
    assert pts[0] == a and pts[-1] == b
    hull: list[LatticeVector] = []
    for p in pts:
        # pop left turns: the chain must bend away from the origin
        while len(hull) >= 2 and det2(hull[-1] - hull[-2], p - hull[-1]) > 0:
            hull.pop()
        hull.append(p)
    return hull


def _scale(p: LatticeVector, prim: LatticeVector) -> int:
    return p.x // prim.x if prim.x else p.y // prim.y


def dihedral_match_matrix(rays1, rays2):
    """Find an integer matrix ``m`` with ``|det m| = 1`` mapping fan 1 onto fan 2.

    Tries every alignment of the consecutive pair ``(rays1[0], rays1[1])``
    with a consecutive pair of ``rays2`` in either direction. Returns the
    matrix as nested tuples or ``None``.
    """
    n = len(rays1)
    if n != len(rays2):
        return None
    u0, u1 = rays1[0], rays1[1]
    target = set(rays2)
    for k in range(n):
        for step in (1, -1):
            v0, v1 = rays2[k], rays2[(k + step) % n]
            # m u0 = v0, m u1 = v1;  inverse of [u0 u1] is adj / det
            d = det2(u0, u1)
            adj = ((u1.y, -u1.x), (-u0.y, u0.x))
            m = tuple(
                tuple(vr[0] * adj[0][j] + vr[1] * adj[1][j] for j in range(2))
                for vr in ((v0.x, v1.x), (v0.y, v1.y)))
            if any(e % d for row in m for e in row):
                continue
            m = tuple(tuple(e // d for e in row) for row in m)
            if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1:
                continue
            image = {LatticeVector(m[0][0] * p.x + m[0][1] * p.y,
                                   m[1][0] * p.x + m[1][1] * p.y) for p in rays1}
            if image == target:
                return m
    return None
