"""The acceptance suite: each criterion returns a :class:`CriterionResult`."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .circular_graph import (WeightedCircularGraph, blow_up,
                             exceptional_vertices, is_isomorphic)
from .classify import (Kind, build_sigma_r, classify_surface, farey_level,
                       farey_value, gamma, verify_wps_identification)
from .enumeration import enumerate_classes, verify_reports
from .fan2d import (CompleteFan2, contract_ray, realize, star_subdivide,
                    sum_law_checks, weights_of)
from .horospherical import (blow_up_colored, colored_sigma_r,
                            is_complete_colored, is_minimal_colored,
                            is_smooth_colored, sigma_1, sigma_2, uncolor,
                            house_model, house_models)
from .lattice import Cone2, LatticeVector, det2
from .oracles import hull_boundary_points
from .resolve import determinant_check, minimal_resolution, resolve_wps

__all__ = ["CriterionResult", "CRITERIA", "run_all", "format_line"]


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(limit: float | None):
    def wrap(fn: Callable[[], tuple[bool, str]]):
        def run() -> tuple[bool, str, float]:
            t0 = time.perf_counter()
            ok, detail = fn()
            dt = time.perf_counter() - t0
            if limit is not None and dt >= limit:
                ok, detail = False, f"{detail}; took {dt:.2f}s, limit {limit}s"
            return ok, detail, dt
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _fails(bad: list, total: int) -> tuple[bool, str]:
    if bad:
        return False, f"{len(bad)}/{total} failed, first {bad[:3]}"
    return True, f"{total} cases"


@_timed(10.0)
def classification_completeness():
    reports = enumerate_classes(9, 6)
    checks = verify_reports(reports, 6)
    by_n = {r.n: r for r in reports}
    gammas = {tuple(sorted(gamma(a).weights)) for a in range(1, 5)}
    found6 = {tuple(sorted(w)) for w in by_n[6].one_exceptional}
    checks.append(("n=6 contains gamma(1..4)", gammas <= found6, ""))
    bad = [name for name, ok, _ in checks if not ok]
    counts = {n: by_n[n].per_a_counts.get(1) for n in (7, 8, 9)}
    return not bad, f"{len(checks)} checks, per-a counts at a=1 {counts}" + (f"; failed {bad}" if bad else "")


def _reduced_rationals(max_c: int, max_r: int):
    for c in range(2, max_c + 1):
        for b in range(c + 1, max_r * c):
            if gcd(b, c) == 1:
                yield Fraction(b, c)


@_timed(5.0)
def wps_identification():
    rs = list(_reduced_rationals(8, 8))
    return _fails([str(r) for r in rs if not verify_wps_identification(r)], len(rs))


@_timed(None)
def prop_one_half():
    bad = []
    for a in range(1, 11):
        res = classify_surface(weights_of(resolve_wps(2, 2 * a + 1)))
        if res.kind is not Kind.FAREY or res.r != Fraction(2 * a + 1, 2) or res.index.path != ():
            bad.append((a, res.kind.value, str(res.r)))
    return _fails(bad, 10)


@_timed(30.0)
def hj_determinant_identity():
    bad, total = [], 0
    for d in range(2, 61):
        for q in range(0, d):
            if gcd(q, d) != 1:
                continue
            total += 1
            cone = Cone2(LatticeVector(1, 0), LatticeVector(q, d))
            rd = minimal_resolution(cone)
            if not determinant_check(rd) or list(rd.chain) != hull_boundary_points(cone):
                bad.append((q, d))
    return _fails(bad, total)


def _sum_law_holds(f: CompleteFan2) -> bool:
    n = f.n
    w = [-det2(f.rays[i - 1], f.rays[(i + 1) % n]) for i in range(n)]
    return sum(w) == 12 - 3 * n


@_timed(None)
def weight_sum_law():
    """Recompute the law on a broad corpus; the constructor hook must have fired for each fan."""
    before = sum_law_checks()
    fans: list[CompleteFan2] = []
    for r in _reduced_rationals(6, 5):
        f = build_sigma_r(r)
        fans.append(f)
        fans.append(resolve_wps(r.denominator, r.numerator))
        fans.extend(star_subdivide(f, i) for i in range(f.n))
        fans.append(contract_ray(f, 0))
    for report in enumerate_classes(8, 3):
        fans.extend(realize(WeightedCircularGraph(w)) for w in report.one_exceptional)
    bad = [f.rays for f in fans if not _sum_law_holds(f)]
    hooked = sum_law_checks() - before
    ok, detail = _fails(bad, len(fans))
    if hooked < len(fans):
        return False, f"constructor hook fired {hooked} times for {len(fans)} fans"
    return ok, f"{detail}, constructor hook total {sum_law_checks()}"


EXAMPLE_FIGURES = {
    Fraction(3, 2): {(3, 2): -1, (1, 1): -2, (-1, 0): 1, (0, -1): 0, (1, 0): -2, (2, 1): -2},
    Fraction(5, 2): {(5, 2): -1, (2, 1): -2, (-1, 0): 2, (0, -1): 0, (1, 0): -3, (3, 1): -2},
    Fraction(7, 2): {(7, 2): -1, (3, 1): -2, (-1, 0): 3, (0, -1): 0, (1, 0): -4, (4, 1): -2},
}


@_timed(None)
def example_figures():
    bad = []
    for r, labels in EXAMPLE_FIGURES.items():
        f = build_sigma_r(r)
        got = {tuple(v): w for v, w in zip(f.rays, f.weights)}
        if got != labels:
            bad.append(str(r))
    return _fails(bad, len(EXAMPLE_FIGURES))


FAREY_LEVELS = [
    ["1/2"],
    ["1/3", "2/3"],
    ["1/4", "2/5", "3/5", "3/4"],
    ["1/5", "2/7", "3/8", "3/7", "4/7", "5/8", "5/7", "4/5"],
]


@_timed(None)
def farey_figure():
    bad = []
    for level, row in enumerate(FAREY_LEVELS):
        paths = [""]
        for _ in range(level):
            paths = [p + s for p in paths for s in "LR"]
        got = [str(farey_value(p)) for p in paths]
        if got != row:
            bad.append((level, got))
    return _fails(bad, sum(map(len, FAREY_LEVELS)))


@_timed(5.0)
def minimality_criterion():
    bad, total = [], 0
    for c in range(2, 9):
        for b in range(c + 1, 6 * c):
            if gcd(b, c) != 1:
                continue
            total += 1
            cf = colored_sigma_r(Fraction(b, c))
            if not is_minimal_colored(cf) or is_minimal_colored(uncolor(cf)):
                bad.append(f"{b}/{c}")
    return _fails(bad, total)


@_timed(None)
def appendix_examples():
    s1, s2 = sigma_1(), sigma_2()
    s2p = blow_up_colored(s2, ((1, 0),))
    checks = {
        "sigma_1 smooth": is_smooth_colored(s1),
        "sigma_1 not complete": not is_complete_colored(s1),
        "sigma_2 smooth": is_smooth_colored(s2),
        "sigma_2 complete": is_complete_colored(s2),
        "type 3 keeps cones": {c.rays for c in s2p.cones} == {c.rays for c in s2.cones},
        "type 3 drops colors": all(not c.colors for c in s2p.cones),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "all hold" if not bad else f"failed {bad}"


@_timed(10.0)
def house_models_check():
    bad, total = [], 0
    for p in range(2, 12):
        for q in range(1, 13 - p):
            if gcd(p, q) != 1:
                continue
            total += 1
            r = Fraction(p + q, p)
            lev = farey_level(r - r.numerator // r.denominator)
            f = house_model(p, q)
            if not (f.is_smooth() and f.is_complete() and len(f.rays) == 7 + lev
                    and len(f.max_cones) == 2 * (6 + lev) - 2):
                bad.append((p, q))
    fib, psi, phi = house_models(2, 1)
    counts = [(len(x.rays), len(x.max_cones)) for x in (fib, psi, phi)]
    if counts != [(8, 12), (7, 10), (7, 10)]:
        bad.append(("(2,1) triple", counts))
    ok, detail = _fails(bad, total)
    return ok, f"{detail}, (2,1) triple {counts}"


@_timed(None)
def round_trip():
    rng = random.Random(20240611)
    bad = []
    for trial in range(500):
        a = rng.randint(1, 4)
        path = [rng.choice("LR") for _ in range(rng.randint(0, 6))]
        g = gamma(a)
        for step in path:
            (e,) = exceptional_vertices(g)
            g = blow_up(g, e if step == "L" else (e - 1) % g.n)
        # present the graph in a random dihedral position
        g = g.rotate(rng.randrange(g.n))
        if rng.random() < 0.5:
            g = g.reflect()
        res = classify_surface(g)
        if res.index is None or (res.index.a, res.index.path) != (a, tuple(path)):
            bad.append((a, "".join(path)))
            continue
        if not is_isomorphic(weights_of(build_sigma_r(res.r)), g):
            bad.append((a, "".join(path), "build"))
    return _fails(bad, 500)


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "classification completeness", classification_completeness),
    (2, "P(1,c,b) identification", wps_identification),
    (3, "r = a + 1/2 resolutions", prop_one_half),
    (4, "HJ determinant identity and hull oracle", hj_determinant_identity),
    (5, "weight-sum law", weight_sum_law),
    (6, "a + 1/2 figure fixtures", example_figures),
    (7, "Farey tree fixtures", farey_figure),
    (8, "colored minimality criterion", minimality_criterion),
    (9, "colored fan examples", appendix_examples),
    (10, "house models", house_models_check),
    (11, "classify/build round trip", round_trip),
]


def run_one(number: int) -> CriterionResult:
    for num, name, fn in CRITERIA:
        if num == number:
            ok, detail, dt = fn()
            return CriterionResult(num, name, ok, detail, dt)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_one(num) for num, _, _ in CRITERIA]


def format_line(r: CriterionResult) -> str:
    status = "PASS" if r.passed else "FAIL"
    return f"[{status}] criterion {r.number:2d} {r.name}: {r.detail} ({r.seconds:.2f}s)"
