"""Rank-2 colored fans with the single color ``D``, ``rho(D) = (1, 0)``."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..classify import build_sigma_r
from ..errors import (InvalidFan, InvalidTarget, NotComplete, NotSmooth,
                      TypeMismatch)
from ..fan2d import CompleteFan2
from ..lattice import LatticeVector, det2, egcd, unimodular_apply

__all__ = [
    "COLOR", "RHO_D", "ColoredCone", "ColoredFan2", "is_complete_colored",
    "is_smooth_colored", "uncolor", "blow_up_colored", "is_minimal_colored",
    "colored_sigma_r", "colored_from_fan", "sigma_1", "sigma_2",
]

COLOR = "D"
RHO_D = LatticeVector(1, 0)


def _vec(v) -> LatticeVector:
    return v if isinstance(v, LatticeVector) else LatticeVector(*v)


def _normalize_rays(rays) -> tuple[LatticeVector, ...]:
    rays = tuple(_vec(v) for v in rays)
    if len(rays) == 0:
        return ()
    if len(rays) == 1:
        (r,) = rays
        if r.is_zero() or not r.is_primitive():
            raise InvalidFan(f"ray generator {r!r} must be primitive")
        return rays
    if len(rays) == 2:
        a, b = rays
        d = det2(a, b)
        if d == 0:
            raise InvalidFan(f"cone({a!r},{b!r}) is not strictly convex")
        if not (a.is_primitive() and b.is_primitive()):
            raise InvalidFan(f"cone({a!r},{b!r}) generators must be primitive")
        return (a, b) if d > 0 else (b, a)
    raise InvalidFan("rank-2 cones have at most two generators")


def _in_cone(p: LatticeVector, rays: tuple[LatticeVector, ...]) -> bool:
    if not rays:
        return p.is_zero()
    if len(rays) == 1:
        (r,) = rays
        return det2(r, p) == 0 and r.dot(p) >= 0
    a, b = rays
    return det2(a, p) >= 0 and det2(p, b) >= 0


@dataclass(frozen=True)
class ColoredCone:
    """A cone (zero, a ray, or 2D; generators counterclockwise) with its colors."""

    rays: tuple[LatticeVector, ...]
    colors: frozenset[str] = frozenset()

    def __init__(self, rays: Iterable = (), colors: Iterable[str] = ()):
        object.__setattr__(self, "rays", _normalize_rays(rays))
        object.__setattr__(self, "colors", frozenset(colors))
        for c in self.colors:
            if c != COLOR:
                raise InvalidFan(f"unknown color {c!r}")
            if not _in_cone(RHO_D, self.rays):
                raise InvalidFan(f"rho(D) = (1,0) is not in cone {self.rays}")

    @property
    def dim(self) -> int:
        return len(self.rays)

    @property
    def colored(self) -> bool:
        return COLOR in self.colors

    def contains(self, p: LatticeVector) -> bool:
        return _in_cone(p, self.rays)

    def faces(self) -> list[ColoredCone]:
        """All faces with induced colors, including the cone itself."""
        out = [self]
        subsets = [()] + ([(r,) for r in self.rays] if self.dim == 2 else [])
        for sub in subsets:
            colors = {c for c in self.colors if _in_cone(RHO_D, sub)}
            out.append(ColoredCone(sub, colors))
        return out

    def face_cones(self) -> set[tuple[LatticeVector, ...]]:
        return {f.rays for f in self.faces()}

    def __repr__(self) -> str:
        tag = ", D" if self.colored else ""
        return f"ColoredCone({list(self.rays)}{tag})"


def _intersect(a: tuple[LatticeVector, ...], b: tuple[LatticeVector, ...]) -> tuple[LatticeVector, ...]:
    """Intersection of two strictly convex cones in the plane (each < pi wide)."""
    cand = {r for r in a if _in_cone(r, b)} | {r for r in b if _in_cone(r, a)}
    cand = list(cand)
    if not cand:
        return ()
    if len(cand) == 1:
        return (cand[0],)
    best = max(combinations(cand, 2), key=lambda uv: abs(det2(*uv)))
    if det2(*best) == 0:
        return (cand[0],)
    return _normalize_rays(best)


class ColoredFan2:
    """A finite, face-closed, pairwise compatible set of colored cones.

    Both conditions are checked exhaustively on construction.
    """

    def __init__(self, cones: Iterable[ColoredCone]):
        self.cones: frozenset[ColoredCone] = frozenset(cones)
        by_rays: dict[tuple, ColoredCone] = {}
        for c in self.cones:
            if c.rays in by_rays:
                raise InvalidFan(f"cone {list(c.rays)} appears with two color sets")
            by_rays[c.rays] = c
        self._by_rays = by_rays
        for c in self.cones:
            for f in c.faces():
                if f not in self.cones:
                    raise InvalidFan(f"face {f!r} of {c!r} is missing")
        for c1, c2 in combinations(self.cones, 2):
            meet = _intersect(c1.rays, c2.rays)
            try:
                common = ColoredCone(meet, c1.colors & c2.colors)
            except InvalidFan:
                common = None
            if common is None or common not in c1.faces() or common not in c2.faces():
                raise InvalidFan(f"{c1!r} and {c2!r} do not meet in a common face")

    @classmethod
    def from_maximal(cls, cones: Iterable) -> ColoredFan2:
        """Close a list of ``ColoredCone`` (or ``(rays, colors)`` pairs) under faces."""
        out: set[ColoredCone] = set()
        for c in cones:
            if not isinstance(c, ColoredCone):
                c = ColoredCone(*c)
            out.update(c.faces())
        return cls(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredFan2):
            return NotImplemented
        return self.cones == other.cones

    def __hash__(self) -> int:
        return hash(self.cones)

    def __repr__(self) -> str:
        return f"ColoredFan2({sorted(map(repr, self.maximal_cones()))})"

    def cone(self, rays) -> ColoredCone | None:
        return self._by_rays.get(_normalize_rays(rays))

    def cones_of_dim(self, d: int) -> list[ColoredCone]:
        return [c for c in self.cones if c.dim == d]

    def maximal_cones(self) -> list[ColoredCone]:
        faces = set()
        for c in self.cones:
            faces.update(f for f in c.faces() if f != c)
        return [c for c in self.cones if c not in faces]

    def rays(self) -> list[LatticeVector]:
        return [c.rays[0] for c in self.cones_of_dim(1)]

    def colored_rays(self) -> list[LatticeVector]:
        return [c.rays[0] for c in self.cones_of_dim(1) if c.colored]

    def cyclic_rays(self) -> list[LatticeVector]:
        """Rays of a complete fan, counterclockwise from the smallest ray."""
        if not is_complete_colored(self):
            raise NotComplete("cyclic ray order needs a complete fan")
        succ = {c.rays[0]: c.rays[1] for c in self.cones_of_dim(2)}
        start = min(succ)
        out = [start]
        while succ[out[-1]] != start:
            out.append(succ[out[-1]])
        return out

    def underlying_fan(self) -> CompleteFan2:
        return CompleteFan2(self.cyclic_rays())


def is_complete_colored(f: ColoredFan2) -> bool:
    """The 2D cones close up into one counterclockwise cycle around the origin."""
    two = f.cones_of_dim(2)
    if not two:
        return False
    succ = {c.rays[0]: c.rays[1] for c in two}
    if len(succ) != len(two) or set(succ) != set(succ.values()):
        return False
    # compatibility rules out overlaps, so one closed cycle covers N_R once
    start = next(iter(succ))
    seen, cur = 1, succ[start]
    while cur != start:
        seen, cur = seen + 1, succ[cur]
    return seen == len(two)


def is_smooth_colored(f: ColoredFan2) -> bool:
    for c in f.cones:
        if c.dim == 2 and abs(det2(*c.rays)) != 1:
            return False
        if c.colored and RHO_D not in c.rays:
            return False
    return True


def uncolor(f: ColoredFan2) -> ColoredFan2:
    return ColoredFan2(ColoredCone(c.rays) for c in f.cones)


def blow_up_colored(f: ColoredFan2, target) -> ColoredFan2:
    """Apply one of the three equivariant blow-ups.

    ``target`` is a cone of ``f`` (``ColoredCone`` or its generators):
    a colored 2D cone (type 1), an uncolored 2D cone (type 2) or the colored
    ray through ``rho(D)`` (type 3).
    """
    rays = target.rays if isinstance(target, ColoredCone) else _normalize_rays(target)
    cone = f.cone(rays)
    if cone is None:
        raise InvalidTarget(f"{list(rays)} is not a cone of the fan")
    if cone.dim == 1:
        if not cone.colored:
            raise InvalidTarget("only the colored ray (R>=0 rho(D), D) can be blown up")
        return uncolor(f)
    if cone.dim != 2:
        raise InvalidTarget("the zero cone cannot be blown up")
    a, b = cone.rays
    if abs(det2(a, b)) != 1:
        raise TypeMismatch(f"cone {list(rays)} is not regular")
    mid = a + b
    if cone.colored:
        if RHO_D not in cone.rays:
            raise TypeMismatch("colored cone must have rho(D) as a generator")
        other = b if a == RHO_D else a
        new = [ColoredCone((other, mid)), ColoredCone((mid, RHO_D), {COLOR})]
    else:
        new = [ColoredCone((a, mid)), ColoredCone((mid, b))]
    kept = [c for c in f.maximal_cones() if c != cone]
    return ColoredFan2.from_maximal(kept + new)


def is_minimal_colored(f: ColoredFan2) -> bool:
    """No uncolored ray is the sum of its two neighbours."""
    if not is_complete_colored(f):
        raise NotComplete("minimality is defined for complete colored fans")
    if not is_smooth_colored(f):
        raise NotSmooth("minimality is defined for smooth colored fans")
    rays = f.cyclic_rays()
    n = len(rays)
    for i, v in enumerate(rays):
        if v == rays[i - 1] + rays[(i + 1) % n] and not f.cone((v,)).colored:
            return False
    return True


def colored_from_fan(fan: CompleteFan2, colored_ray: LatticeVector | None = None) -> ColoredFan2:
    """Colored fan on a complete fan; the color sits on ``colored_ray`` (which must be ``(1,0)``)."""
    cones = []
    for a, b in fan.cones():
        colors = {COLOR} if colored_ray is not None and colored_ray in (a, b) else set()
        cones.append(ColoredCone((a, b), colors))
    return ColoredFan2.from_maximal(cones)


def colored_sigma_r(r) -> ColoredFan2:
    """Sigma_r with its exceptional ray moved to ``rho(D)`` and colored."""
    fan = build_sigma_r(r)
    b, c = fan.rays[0]
    _, s, t = egcd(b, c)
    m = ((s, t), (-c, b))  # det = s*b + t*c = 1, m (b, c) = (1, 0)
    moved = CompleteFan2(unimodular_apply(m, fan.rays))
    return colored_from_fan(moved, RHO_D)


def sigma_1() -> ColoredFan2:
    """The colored fan of C^3: cone((1,0),(0,1)) with D, plus faces."""
    return ColoredFan2.from_maximal([(((1, 0), (0, 1)), {COLOR})])


def sigma_2() -> ColoredFan2:
    """The colored fan of P^3."""
    return ColoredFan2.from_maximal([
        (((1, 0), (0, 1)), {COLOR}),
        (((1, 0), (-1, -1)), {COLOR}),
        (((0, 1), (-1, -1)), ()),
    ])
