"""Surfaces with exactly one exceptional curve, indexed by Farey rationals.

Orientation conventions (fixed here, used everywhere):

* Graph indices run counterclockwise. A one-exceptional graph with ``n >= 6``
  is put in *standard orientation* when its two non-negative vertices appear
  as ``a`` followed by ``0``.
* ``L`` blows up the edge on the counterclockwise side of the ``-1`` vertex,
  ``R`` the clockwise side. ``L`` moves to the smaller Farey child.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .circular_graph import (WeightedCircularGraph, blow_down, blow_up,
                             exceptional_vertices, is_isomorphic)
from .errors import (BadRational, IntegerInput, InternalContradiction,
                     NonPositive, OutOfRange)
from .fan2d import CompleteFan2, realize, weights_of
from .lattice import LatticeVector
from .resolve import resolve_wps

__all__ = [
    "Kind", "FareyIndex", "ClassificationResult", "gamma", "farey_value",
    "farey_path", "farey_level", "classify_surface", "build_sigma_r",
    "sigma_r_graph", "verify_wps_identification", "parse_rational",
    "standard_orientation", "F1_GRAPH",
]

F1_GRAPH = WeightedCircularGraph([1, 0, -1, 0])


class Kind(str, Enum):
    NO_EXCEPTIONAL = "NoExceptional"
    MULTIPLE_EXCEPTIONAL = "MultipleExceptional"
    F1 = "F1"
    FAREY = "FareyClassified"


def _as_path(path: Iterable[str]) -> tuple[str, ...]:
    steps = tuple(str(s).upper() for s in path)
    for s in steps:
        if s not in ("L", "R"):
            raise ValueError(f"Farey path step must be L or R, got {s!r}")
    return steps


@dataclass(frozen=True)
class FareyIndex:
    a: int
    path: tuple[str, ...] = ()

    def __post_init__(self):
        if self.a < 1:
            raise NonPositive(f"a = {self.a} < 1")
        object.__setattr__(self, "path", _as_path(self.path))

    @property
    def delta(self) -> Fraction:
        return farey_value(self.path)

    @property
    def r(self) -> Fraction:
        return self.a + self.delta

    @property
    def level(self) -> int:
        return len(self.path)


@dataclass(frozen=True)
class ClassificationResult:
    kind: Kind
    index: FareyIndex | None = None
    # (contracted vertex, tag) per blow-down step, indices in the
    # standard-orientation graph of that step
    blow_down_chain: tuple[tuple[int, str], ...] = ()
    reflected: bool = False
    exceptional_count: int = 0

    @property
    def r(self) -> Fraction | None:
        return None if self.index is None else self.index.r


def gamma(a: int) -> WeightedCircularGraph:
    """The 6-vertex root graph ``[-1, -2, a, 0, -a-1, -2]``."""
    if a < 1:
        raise NonPositive(f"a = {a} < 1")
    return WeightedCircularGraph([-1, -2, a, 0, -a - 1, -2])


def farey_value(path: Sequence[str]) -> Fraction:
    """Walk the Farey tree of ``(0, 1)`` from the root ``1/2``."""
    lo_n, lo_d, hi_n, hi_d = 0, 1, 1, 1
    for step in _as_path(path):
        m_n, m_d = lo_n + hi_n, lo_d + hi_d
        if step == "L":
            hi_n, hi_d = m_n, m_d
        else:
            lo_n, lo_d = m_n, m_d
    return Fraction(lo_n + hi_n, lo_d + hi_d)


def farey_path(delta: Fraction) -> tuple[str, ...]:
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise OutOfRange(f"{delta} is not in (0, 1)")
    lo_n, lo_d, hi_n, hi_d = 0, 1, 1, 1
    path = []
    while True:
        m = Fraction(lo_n + hi_n, lo_d + hi_d)
        if m == delta:
            return tuple(path)
        if delta < m:
            path.append("L")
            hi_n, hi_d = m.numerator, m.denominator
        else:
            path.append("R")
            lo_n, lo_d = m.numerator, m.denominator


def farey_level(delta: Fraction) -> int:
    return len(farey_path(delta))


def parse_rational(text) -> Fraction:
    """Parse ``"b/c"`` (or an int/Fraction); raise :class:`BadRational`."""
    if isinstance(text, Fraction):
        return text
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise BadRational(f"cannot parse {text!r} as a rational") from exc


def _check_r(r) -> Fraction:
    r = parse_rational(r)
    if r.denominator == 1:
        raise IntegerInput(f"r = {r} is an integer")
    if r <= 1:
        raise OutOfRange(f"r = {r} must exceed 1")
    return r


def standard_orientation(g: WeightedCircularGraph) -> tuple[WeightedCircularGraph, bool, int]:
    """Orient a one-exceptional graph (``n >= 6``) so ``a`` precedes ``0``.

    Returns ``(graph, reflected, j)`` where ``j`` is the index of the
    ``a``-vertex.
    """
    n = g.n
    nonneg = [i for i, w in enumerate(g.weights) if w >= 0]
    if len(nonneg) != 2:
        raise InternalContradiction(
            f"{g!r}: expected exactly two non-negative weights, found {len(nonneg)}")
    i, k = nonneg
    if (k - i) % n == 1:
        first, second = i, k
    elif (i - k) % n == 1:
        first, second = k, i
    else:
        raise InternalContradiction(f"{g!r}: the non-negative vertices are not adjacent")
    if g.weights[first] > 0 and g.weights[second] == 0:
        return g, False, first
    if g.weights[first] == 0 and g.weights[second] > 0:
        r = g.reflect()
        return r, True, (-second) % n
    raise InternalContradiction(f"{g!r}: the non-negative pair is not {{0, a}} with a > 0")


def _check_chain_invariant(g: WeightedCircularGraph, j: int) -> int:
    """Assert the one-exceptional structure; return the ``-1`` index."""
    ex = exceptional_vertices(g)
    if len(ex) != 1:
        raise InternalContradiction(f"{g!r}: {len(ex)} exceptional vertices in the blow-down chain")
    (e,) = ex
    n = g.n
    if sum(1 for w in g.weights if w >= -1) != 3:
        raise InternalContradiction(f"{g!r}: expected exactly three weights >= -1")
    if e in ((j - 1) % n, (j + 2) % n):
        raise InternalContradiction(f"{g!r}: -1 vertex neighbours the {{0, a}} pair")
    return e


def classify_surface(g: WeightedCircularGraph) -> ClassificationResult:
    """Recognise F1 or S_r; graphs with 0 or >= 2 exceptional vertices get a kind only."""
    realize(g)  # raises NotRealizable
    ex = exceptional_vertices(g)
    if not ex:
        return ClassificationResult(Kind.NO_EXCEPTIONAL)
    if len(ex) > 1:
        return ClassificationResult(Kind.MULTIPLE_EXCEPTIONAL, exceptional_count=len(ex))
    if g.n <= 5:
        if not is_isomorphic(g, F1_GRAPH):
            raise InternalContradiction(f"{g!r}: one -1 vertex with n <= 5 but not F1")
        return ClassificationResult(Kind.F1, exceptional_count=1)

    cur, reflected, j = standard_orientation(g)
    a = cur.weights[j]
    chain: list[tuple[int, str]] = []
    while cur.n > 6:
        e = _check_chain_invariant(cur, j)
        n = cur.n
        down = blow_down(cur, e)
        nd = n - 1
        # neighbour indices of e after deleting it
        cw, ccw = (e - 1) % n, (e + 1) % n
        cw_new = cw if cw < e else cw - 1
        ccw_new = ccw if ccw < e else ccw - 1
        ex_down = exceptional_vertices(down)
        if ex_down == {cw_new % nd}:
            tag = "L"         # contracted vertex lay counterclockwise of the old -1
        elif ex_down == {ccw_new % nd}:
            tag = "R"
        else:
            raise InternalContradiction(
                f"{cur!r}: blow-down of vertex {e} gives exceptional set {sorted(ex_down)}")
        chain.append((e, tag))
        j = j if j < e else j - 1
        cur = down
    _check_chain_invariant(cur, j)
    if not is_isomorphic(cur, gamma(a)):
        raise InternalContradiction(f"{cur!r} is not isomorphic to gamma({a})")
    path = tuple(tag for _, tag in reversed(chain))
    return ClassificationResult(Kind.FAREY, FareyIndex(a, path), tuple(chain),
                                reflected, exceptional_count=1)


def sigma_r_graph(r) -> WeightedCircularGraph:
    """Walk the blow-up tree from ``gamma(floor r)`` along the Farey path of ``{r}``."""
    r = _check_r(r)
    a = r.numerator // r.denominator
    g = gamma(a)
    for step in farey_path(r - a):
        (e,) = exceptional_vertices(g)
        g = blow_up(g, e if step == "L" else (e - 1) % g.n)
    return g


def build_sigma_r(r) -> CompleteFan2:
    """The fan of S_r, built from the blow-up tree.

    The ``a``-ray is pinned to ``(-1, 0)`` and the ``0``-ray to ``(0, -1)``.
    Rays are listed counterclockwise starting at the exceptional ray, which
    must come out as ``(b, c)`` for ``r = b/c``.
    """
    r = _check_r(r)
    g = sigma_r_graph(r)
    _, _, j = standard_orientation(g)
    fan = realize(g.rotate(j), LatticeVector(-1, 0), LatticeVector(0, -1))
    (e,) = fan.exceptional_rays()
    fan = fan.rotate(e)
    expected = LatticeVector(r.numerator, r.denominator)
    if fan.rays[0] != expected:
        raise InternalContradiction(f"exceptional ray of Sigma_{r} is {fan.rays[0]!r}, not {expected!r}")
    if fan.n != 6 + farey_level(r - r.numerator // r.denominator):
        raise InternalContradiction(f"Sigma_{r} has {fan.n} rays")
    return fan


def verify_wps_identification(r) -> bool:
    """Does the blow-up-tree fan of ``r = b/c`` coincide with the resolution of P(1, c, b)?"""
    r = _check_r(r)
    tree = build_sigma_r(r)
    wps = resolve_wps(r.denominator, r.numerator)
    return tree.rays == wps.rays
