"""Weighted circular graphs: cyclic self-intersection sequences.

Vertex ``i`` carries weight ``w_i``; edge ``e`` joins vertices ``e`` and
``e + 1 (mod n)``. The index direction is the counterclockwise order of the
corresponding fan rays.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import IndexOutOfRange, NotExceptional, NotRealizable, TooSmall

__all__ = [
    "WeightedCircularGraph", "blow_up", "blow_down", "exceptional_vertices",
    "is_isomorphic", "canonical_form", "dihedral_orbit",
]


@dataclass(frozen=True, slots=True)
class WeightedCircularGraph:
    """Cyclic integer weight sequence with ``n >= 3`` vertices.

    The constructor enforces the weight-sum law ``sum(w) == 12 - 3n`` that
    every realizable graph satisfies. Full realizability is a separate,
    costlier check (:func:`torifan.fan2d.realize`).
    """

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        w = tuple(int(x) for x in weights)
        if len(w) < 3:
            raise NotRealizable(f"a circular graph needs at least 3 vertices, got {len(w)}")
        if sum(w) != 12 - 3 * len(w):
            raise NotRealizable(
                f"weight sum {sum(w)} violates sum(w) = 12 - 3n = {12 - 3 * len(w)}")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i % len(self.weights)]

    def __iter__(self):
        return iter(self.weights)

    def __repr__(self) -> str:
        return f"WeightedCircularGraph({list(self.weights)})"

    @property
    def n(self) -> int:
        return len(self.weights)

    def rotate(self, k: int) -> WeightedCircularGraph:
        """Graph whose vertex 0 is this graph's vertex ``k``."""
        k %= self.n
        return WeightedCircularGraph(self.weights[k:] + self.weights[:k])

    def reflect(self) -> WeightedCircularGraph:
        """Reverse orientation, keeping vertex 0 in place."""
        return WeightedCircularGraph((self.weights[0],) + self.weights[:0:-1])


def _check_index(i: int, n: int, what: str) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"{what} {i} not in [0, {n})")


def blow_up(g: WeightedCircularGraph, edge_i: int) -> WeightedCircularGraph:
    """Blow up edge ``edge_i``; the new ``-1`` vertex sits at ``edge_i + 1``."""
    n = g.n
    _check_index(edge_i, n, "edge")
    w = list(g.weights)
    j = (edge_i + 1) % n
    w[edge_i] -= 1
    w[j] -= 1
    w.insert(edge_i + 1, -1)
    return WeightedCircularGraph(w)


def blow_down(g: WeightedCircularGraph, vertex_i: int) -> WeightedCircularGraph:
    """Contract the ``-1`` vertex ``vertex_i``; remaining vertices keep their order."""
    n = g.n
    _check_index(vertex_i, n, "vertex")
    if g.weights[vertex_i] != -1:
        raise NotExceptional(f"vertex {vertex_i} has weight {g.weights[vertex_i]}, not -1")
    if n <= 3:
        raise TooSmall("cannot blow down a graph with 3 vertices")
    w = list(g.weights)
    w[(vertex_i - 1) % n] += 1
    w[(vertex_i + 1) % n] += 1
    del w[vertex_i]
    return WeightedCircularGraph(w)


def exceptional_vertices(g: WeightedCircularGraph) -> frozenset[int]:
    return frozenset(i for i, w in enumerate(g.weights) if w == -1)


def dihedral_orbit(weights: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """All rotations and reflections of a weight tuple (with repeats)."""
    n = len(weights)
    rev = weights[::-1]
    for k in range(n):
        yield weights[k:] + weights[:k]
        yield rev[k:] + rev[:k]


def canonical_form(g: WeightedCircularGraph) -> WeightedCircularGraph:
    """Lexicographically smallest member of the dihedral orbit."""
    return WeightedCircularGraph(canonical_key(g.weights))


def canonical_key(weights: tuple[int, ...]) -> tuple[int, ...]:
    return min(dihedral_orbit(tuple(weights)))


def is_isomorphic(g1: WeightedCircularGraph, g2: WeightedCircularGraph) -> bool:
    if g1.n != g2.n or sorted(g1.weights) != sorted(g2.weights):
        return False
    return any(t == g2.weights for t in dihedral_orbit(g1.weights))
