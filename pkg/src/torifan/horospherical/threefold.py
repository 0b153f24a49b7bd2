"""3D fans of the fibred 3-folds over Sigma_r and the house models A_{p,q}."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from ..classify import build_sigma_r
from ..errors import (InvalidFan, MissingStructure, NotCoprime,
                      NotOneExceptional, PEqualsOne)
from ..fan2d import CompleteFan2
from ..lattice import LatticeVector3, det2, det3

__all__ = [
    "Fan3", "FibrationFan", "build_fibration_fan", "contract_psi",
    "contract_phi", "house_model", "house_models", "NU_PRIME", "NU_SECOND",
]

NU_PRIME = LatticeVector3(0, 0, 1)
NU_SECOND = LatticeVector3(1, 1, -1)


def _vec3(v) -> LatticeVector3:
    return v if isinstance(v, LatticeVector3) else LatticeVector3(*v)


class Fan3:
    """Rays plus maximal 3D cones given as sorted index triples."""

    def __init__(self, rays: Sequence, max_cones: Iterable[Sequence[int]]):
        self.rays: tuple[LatticeVector3, ...] = tuple(_vec3(v) for v in rays)
        cones = []
        for cone in max_cones:
            t = tuple(sorted(int(i) for i in cone))
            if len(t) != 3 or len(set(t)) != 3:
                raise InvalidFan(f"maximal cone {cone} must have three distinct rays")
            if not all(0 <= i < len(self.rays) for i in t):
                raise InvalidFan(f"maximal cone {cone} refers to a missing ray")
            if det3(*(self.rays[i] for i in t)) == 0:
                raise InvalidFan(f"maximal cone {cone} is not strictly convex")
            cones.append(t)
        if len(set(cones)) != len(cones):
            raise InvalidFan("duplicate maximal cone")
        for v in self.rays:
            if not v.is_primitive():
                raise InvalidFan(f"ray {v!r} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise InvalidFan("rays are not pairwise distinct")
        self.max_cones: tuple[tuple[int, int, int], ...] = tuple(sorted(cones))

    def __repr__(self) -> str:
        return f"Fan3({len(self.rays)} rays, {len(self.max_cones)} maximal cones)"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fan3):
            return NotImplemented
        return self.cone_set() == other.cone_set()

    def __hash__(self) -> int:
        return hash(self.cone_set())

    def cone_set(self) -> frozenset[frozenset[LatticeVector3]]:
        return frozenset(frozenset(self.rays[i] for i in c) for c in self.max_cones)

    def index(self, v) -> int:
        return self.rays.index(_vec3(v))

    def cone_dets(self) -> list[int]:
        return [det3(*(self.rays[i] for i in c)) for c in self.max_cones]

    def is_smooth(self) -> bool:
        return all(abs(d) == 1 for d in self.cone_dets())

    def facets(self) -> Counter:
        return Counter(f for c in self.max_cones for f in combinations(c, 2))

    def edges(self) -> set[tuple[int, int]]:
        return set(self.facets())

    def euler_characteristic(self) -> int:
        """rays - 2-faces + maximal cones of the boundary sphere complex."""
        used = {i for c in self.max_cones for i in c}
        return len(used) - len(self.edges()) + len(self.max_cones)

    def is_complete(self) -> bool:
        """Exact completeness test.

        Every 2-face lies in exactly two maximal cones whose opposite rays sit
        strictly on opposite sides of it, the dual graph is connected, and a
        generic interior point is covered exactly once.
        """
        if not self.max_cones:
            return False
        owners: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        for c in self.max_cones:
            for f in combinations(c, 2):
                owners.setdefault(f, []).append(c)
        for (i, j), cs in owners.items():
            if len(cs) != 2:
                return False
            u, v = self.rays[i], self.rays[j]
            sides = []
            for c in cs:
                (k,) = set(c) - {i, j}
                sides.append(det3(u, v, self.rays[k]))
            if sides[0] * sides[1] >= 0:
                return False
        # connectivity of the dual graph
        seen = {self.max_cones[0]}
        stack = [self.max_cones[0]]
        while stack:
            c = stack.pop()
            for f in combinations(c, 2):
                for d in owners[f]:
                    if d not in seen:
                        seen.add(d)
                        stack.append(d)
        if len(seen) != len(self.max_cones):
            return False
        return self._covering_degree() == 1

    def _covering_degree(self) -> int:
        """Number of maximal cones containing a point in general position."""
        for c in self.max_cones:
            for weights in ((1, 1, 1), (1, 2, 3), (3, 5, 7), (7, 11, 13)):
                p = [sum(w * getattr(self.rays[i], ax) for w, i in zip(weights, c)) for ax in "xyz"]
                p = LatticeVector3(*p)
                count, generic = 0, True
                for d in self.max_cones:
                    coeffs = _cone_coords(p, [self.rays[i] for i in d])
                    if any(x == 0 for x in coeffs) and all(x >= 0 for x in coeffs):
                        generic = False
                        break
                    if all(x > 0 for x in coeffs):
                        count += 1
                if generic:
                    return count
        raise MissingStructure("could not find a point in general position")

    def slice_z0(self) -> list[LatticeVector3]:
        return [v for v in self.rays if v.z == 0]


def _cone_coords(p: LatticeVector3, gens: Sequence[LatticeVector3]) -> list[Fraction]:
    """Coordinates of ``p`` in the basis ``gens`` (Cramer's rule)."""
    a, b, c = gens
    d = det3(a, b, c)
    return [Fraction(det3(p, b, c), d), Fraction(det3(a, p, c), d), Fraction(det3(a, b, p), d)]


class FibrationFan(Fan3):
    """A :class:`Fan3` that remembers the indices of nu_1, nu_2, nu_n, nu', nu''."""

    def __init__(self, rays, max_cones, roles: dict[str, int | None]):
        super().__init__(rays, max_cones)
        self.roles = dict(roles)

    def role(self, name: str) -> int:
        idx = self.roles.get(name)
        if idx is None:
            raise MissingStructure(f"fan has no {name} ray")
        return idx


def build_fibration_fan(f2: CompleteFan2) -> FibrationFan:
    """Put ``f2`` into Z^3 in the basis (nu_2, nu_n, nu') and add nu', nu''.

    ``nu_1`` is the exceptional ray, ``nu_2`` its counterclockwise and ``nu_n``
    its clockwise neighbour; the result has 2n maximal cones.
    """
    ex = f2.exceptional_rays()
    if len(ex) != 1:
        raise NotOneExceptional(f"fan has {len(ex)} exceptional rays, need exactly one")
    f2 = f2.rotate(ex[0])
    n = f2.n
    nu2, nun = f2.rays[1], f2.rays[-1]
    d = det2(nu2, nun)  # -1 for counterclockwise input

    def coords(v):
        # v = alpha nu2 + beta nun
        return LatticeVector3(det2(v, nun) // d, det2(nu2, v) // d, 0)

    rays = [coords(v) for v in f2.rays] + [NU_PRIME, NU_SECOND]
    ip, ipp = n, n + 1
    cones = []
    for i in range(n):
        j = (i + 1) % n
        cones.append((i, j, ip))
        cones.append((i, j, ipp))
    roles = {"nu1": 0, "nu2": 1, "nun": n - 1, "nu'": ip, "nu''": ipp}
    fan = FibrationFan(rays, cones, roles)
    assert rays[0] == rays[1] + rays[n - 1] == NU_PRIME + NU_SECOND
    return fan


def _remove_ray(f: FibrationFan, drop: int, merged: list[tuple[int, int, int]]) -> FibrationFan:
    keep = [c for c in f.max_cones if drop not in c]
    remap = {old: new for new, old in enumerate(i for i in range(len(f.rays)) if i != drop)}
    rays = [v for i, v in enumerate(f.rays) if i != drop]
    cones = [tuple(remap[i] for i in c) for c in keep + merged]
    roles = {k: (None if v == drop or v is None else remap[v]) for k, v in f.roles.items()}
    return FibrationFan(rays, cones, roles)


def _check_relint(v: LatticeVector3, u: LatticeVector3, w: LatticeVector3, what: str) -> None:
    if v != u + w:
        raise MissingStructure(f"{what}: removed ray {v!r} is not {u!r} + {w!r}")


def _require_cones(f: Fan3, cones) -> None:
    have = set(f.max_cones)
    for c in cones:
        if tuple(sorted(c)) not in have:
            raise MissingStructure(f"expected maximal cone {tuple(sorted(c))} is missing")


def contract_psi(f3: FibrationFan) -> FibrationFan:
    """Contract the exceptional ray fibrewise: merge across the face (nu', nu_1)."""
    i1, i2, inn = f3.role("nu1"), f3.role("nu2"), f3.role("nun")
    ip, ipp = f3.role("nu'"), f3.role("nu''")
    _check_relint(f3.rays[i1], f3.rays[i2], f3.rays[inn], "psi")
    _require_cones(f3, [(ip, i2, i1), (ip, i1, inn), (ipp, i2, i1), (ipp, i1, inn)])
    if len([c for c in f3.max_cones if i1 in c]) != 4:
        raise MissingStructure("psi: exceptional ray must lie in exactly four maximal cones")
    return _remove_ray(f3, i1, [(ip, i2, inn), (ipp, i2, inn)])


def contract_phi(f3: FibrationFan) -> FibrationFan:
    """Contract the exceptional ray across the fibration: merge across (nu_2, nu_1) and (nu_1, nu_n)."""
    i1, i2, inn = f3.role("nu1"), f3.role("nu2"), f3.role("nun")
    ip, ipp = f3.role("nu'"), f3.role("nu''")
    _check_relint(f3.rays[i1], f3.rays[ip], f3.rays[ipp], "phi")
    _require_cones(f3, [(ip, i2, i1), (ipp, i2, i1), (ip, i1, inn), (ipp, i1, inn)])
    if len([c for c in f3.max_cones if i1 in c]) != 4:
        raise MissingStructure("phi: exceptional ray must lie in exactly four maximal cones")
    return _remove_ray(f3, i1, [(ip, ipp, i2), (ip, ipp, inn)])


def _house_r(p: int, q: int) -> Fraction:
    if p < 1 or q < 1:
        raise NotCoprime(f"p, q must be positive, got {p}, {q}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    if p == 1:
        raise PEqualsOne("house models need p > 1")
    return Fraction(p + q, p)


def house_models(p: int, q: int) -> tuple[FibrationFan, FibrationFan, FibrationFan]:
    """The fibred fan over Sigma_r, its psi-contraction and its phi-contraction."""
    r = _house_r(p, q)
    fib = build_fibration_fan(build_sigma_r(r))
    return fib, contract_psi(fib), contract_phi(fib)


def house_model(p: int, q: int) -> FibrationFan:
    """Fan of the house model A_{p,q}, built over Sigma_r with r = (p+q)/p."""
    r = _house_r(p, q)
    return contract_phi(build_fibration_fan(build_sigma_r(r)))
