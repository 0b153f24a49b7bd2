"""Complete regular 2D fans and their weighted circular graphs.

Rays are stored counterclockwise, so ``det2(rays[i], rays[i+1]) == +1`` for
every ``i`` (indices mod ``n``). Clockwise input is re-oriented.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .circular_graph import WeightedCircularGraph, is_isomorphic
from .errors import (IndexOutOfRange, InternalContradiction, InvalidFan,
                     NotExceptional, NotRealizable, TooSmall)
from .lattice import LatticeVector, det2

__all__ = [
    "CompleteFan2", "weights_of", "realize", "star_subdivide", "contract_ray",
    "is_unimodular_equivalent", "winding_number", "sum_law_checks",
]

# Number of fans whose weight-sum law was verified at construction.
_SUM_LAW_CHECKS = 0


def sum_law_checks() -> int:
    return _SUM_LAW_CHECKS


def _as_vector(v) -> LatticeVector:
    return v if isinstance(v, LatticeVector) else LatticeVector(*v)


def winding_number(rays: Sequence[LatticeVector]) -> int:
    """Times the closed ray sequence winds counterclockwise around the origin.

    Assumes every consecutive pair has ``det2 > 0``. Counts the cones
    ``[v_i, v_{i+1})`` containing the direction ``(1, 0)``.
    """
    n = len(rays)
    return sum(1 for i in range(n) if rays[i].y <= 0 < rays[(i + 1) % n].y)


class CompleteFan2:
    """A complete regular fan in ``N_R = R^2``.

    Two fans are equal when they have the same set of rays; unimodular
    equivalence is the separate predicate :func:`is_unimodular_equivalent`.
    """

    __slots__ = ("rays", "_weights")

    def __init__(self, rays: Iterable):
        global _SUM_LAW_CHECKS
        rays = tuple(_as_vector(v) for v in rays)
        n = len(rays)
        if n < 3:
            raise InvalidFan(f"a complete fan needs at least 3 rays, got {n}")
        for v in rays:
            if not v.is_primitive():
                raise InvalidFan(f"ray {v!r} is not primitive")
        if len(set(rays)) != n:
            raise InvalidFan("rays are not pairwise distinct")
        dets = {det2(rays[i], rays[(i + 1) % n]) for i in range(n)}
        if dets == {-1}:
            rays = (rays[0],) + rays[:0:-1]
        elif dets != {1}:
            raise InvalidFan(f"consecutive determinants {sorted(dets)} are not all +1 (or all -1)")
        if winding_number(rays) != 1:
            raise InvalidFan(f"rays wind {winding_number(rays)} times around the origin")
        self.rays: tuple[LatticeVector, ...] = rays
        w = tuple(-det2(rays[i - 1], rays[(i + 1) % n]) for i in range(n))
        for i in range(n):
            if rays[i - 1] + rays[(i + 1) % n] + w[i] * rays[i] != LatticeVector(0, 0):
                raise InvalidFan(f"no integer relation at ray {i}")
        if sum(w) != 12 - 3 * n:
            raise InternalContradiction(f"fan {rays} violates the weight-sum law")
        _SUM_LAW_CHECKS += 1
        self._weights = w

    def __len__(self) -> int:
        return len(self.rays)

    @property
    def n(self) -> int:
        return len(self.rays)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompleteFan2):
            return NotImplemented
        return frozenset(self.rays) == frozenset(other.rays)

    def __hash__(self) -> int:
        return hash(frozenset(self.rays))

    def __repr__(self) -> str:
        return f"CompleteFan2({list(self.rays)})"

    @property
    def weights(self) -> tuple[int, ...]:
        return self._weights

    def cones(self) -> list[tuple[LatticeVector, LatticeVector]]:
        n = self.n
        return [(self.rays[i], self.rays[(i + 1) % n]) for i in range(n)]

    def index(self, ray) -> int:
        return self.rays.index(_as_vector(ray))

    def rotate(self, k: int) -> CompleteFan2:
        k %= self.n
        return CompleteFan2(self.rays[k:] + self.rays[:k])

    def exceptional_rays(self) -> list[int]:
        return [i for i, w in enumerate(self._weights) if w == -1]


def weights_of(f: CompleteFan2) -> WeightedCircularGraph:
    return WeightedCircularGraph(f.weights)


def realize(g: WeightedCircularGraph, nu0=LatticeVector(1, 0),
            nu1=LatticeVector(0, 1)) -> CompleteFan2:
    """Propagate ``nu_{i+1} = -nu_{i-1} - w_i nu_i`` from the seed pair.

    Raises :class:`NotRealizable` unless the recursion closes up and the rays
    wind exactly once.
    """
    nu0, nu1 = _as_vector(nu0), _as_vector(nu1)
    if det2(nu0, nu1) != 1:
        raise NotRealizable(f"seed pair {nu0!r}, {nu1!r} has det {det2(nu0, nu1)}, need +1")
    w = g.weights
    n = len(w)
    rays = [nu0, nu1]
    for i in range(1, n + 1):
        rays.append(-rays[i - 1] - w[i % n] * rays[i])
    if rays[n] != nu0 or rays[n + 1] != nu1:
        raise NotRealizable(f"{g!r}: ray recursion does not close up")
    rays = rays[:n]
    if winding_number(rays) != 1:
        raise NotRealizable(f"{g!r}: rays wind {winding_number(rays)} times")
    try:
        return CompleteFan2(rays)
    except InvalidFan as exc:
        raise NotRealizable(f"{g!r}: {exc}") from exc


def star_subdivide(f: CompleteFan2, i: int) -> CompleteFan2:
    """Insert ``rays[i] + rays[i+1]`` at position ``i + 1``."""
    n = f.n
    if not 0 <= i < n:
        raise IndexOutOfRange(f"edge {i} not in [0, {n})")
    rays = list(f.rays)
    rays.insert(i + 1, f.rays[i] + f.rays[(i + 1) % n])
    # keep ray 0 in front so indices line up with circular_graph.blow_up
    return CompleteFan2(rays)


def contract_ray(f: CompleteFan2, i: int) -> CompleteFan2:
    """Remove ray ``i``, which must be the sum of its two neighbours."""
    n = f.n
    if not 0 <= i < n:
        raise IndexOutOfRange(f"ray {i} not in [0, {n})")
    if f.rays[i] != f.rays[i - 1] + f.rays[(i + 1) % n]:
        raise NotExceptional(f"ray {f.rays[i]!r} is not the sum of its neighbours")
    if n <= 3:
        raise TooSmall("cannot contract a ray of a 3-ray fan")
    return CompleteFan2(f.rays[:i] + f.rays[i + 1:])


def is_unimodular_equivalent(f1: CompleteFan2, f2: CompleteFan2) -> bool:
    return is_isomorphic(weights_of(f1), weights_of(f2))

