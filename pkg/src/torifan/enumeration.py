"""Exhaustive enumeration of smooth toric surfaces up to isomorphism.

Starts from P^2 and F_0, ..., F_max_a and closes under blow-ups, working on
canonical weight tuples level by level. Blow-ups only lower weights, so a
class whose largest weight is near ``max_a`` may need a seed beyond the
bound. At n = 6 only ``gamma(1 .. max_a - 1)`` is required; per-``a`` counts
beyond n = 6 are only asserted for ``a <= max_a - 2``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .circular_graph import canonical_key
from .errors import BoundsExceeded

__all__ = ["EnumerationReport", "enumerate_classes", "verify_reports", "seeds",
           "MAX_N", "MAX_A", "thread_cap"]

MAX_N = 12
MAX_A = 8


@dataclass
class EnumerationReport:
    n: int
    total_classes: int
    one_exceptional_classes: int
    per_a_counts: dict[int, int] = field(default_factory=dict)
    one_exceptional: list[tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_classes": self.total_classes,
            "one_exceptional_classes": self.one_exceptional_classes,
            "per_a_counts": {str(a): c for a, c in sorted(self.per_a_counts.items())},
        }


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("TORIFAN_THREADS", "1")))
    except ValueError:
        return 1


def seeds(max_a: int) -> list[tuple[int, ...]]:
    out = {canonical_key((1, 1, 1))}
    for a in range(max_a + 1):
        out.add(canonical_key((a, 0, -a, 0)))
    return sorted(out)


def _children(keys: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    out = set()
    for w in keys:
        n = len(w)
        for e in range(n - 1):
            child = w[:e] + (w[e] - 1, -1, w[e + 1] - 1) + w[e + 2:]
            out.add(canonical_key(child))
        out.add(canonical_key((w[0] - 1,) + w[1:n - 1] + (w[n - 1] - 1, -1)))
    return out


def _next_level(level: list[tuple[int, ...]], workers: int) -> list[tuple[int, ...]]:
    if workers <= 1 or len(level) < 2000:
        return sorted(_children(level))
    size = -(-len(level) // (4 * workers))
    chunks = [level[i:i + size] for i in range(0, len(level), size)]
    out: set[tuple[int, ...]] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_children, chunks):
            out |= part
    return sorted(out)


def _report(n: int, level: list[tuple[int, ...]]) -> EnumerationReport:
    ones = [w for w in level if w.count(-1) == 1]
    per_a: dict[int, int] = {}
    if n >= 6:
        for w in ones:
            a = max(w)
            per_a[a] = per_a.get(a, 0) + 1
    return EnumerationReport(n, len(level), len(ones), per_a, ones)


def enumerate_classes(max_n: int, max_a: int, workers: int | None = None) -> list[EnumerationReport]:
    """One report per ``n = 3 .. max_n`` (``n = 3`` holds only P^2)."""
    if not 3 <= max_n <= MAX_N:
        raise BoundsExceeded(f"max_n must be in [3, {MAX_N}], got {max_n}")
    if not 0 <= max_a <= MAX_A:
        raise BoundsExceeded(f"max_a must be in [0, {MAX_A}], got {max_a}")
    workers = thread_cap() if workers is None else max(1, workers)
    by_n: dict[int, list[tuple[int, ...]]] = {3: [], 4: []}
    for s in seeds(max_a):
        by_n[len(s)].append(s)
    reports = [_report(3, by_n[3])]
    level = sorted(by_n[4])
    reports.append(_report(4, level))
    for n in range(5, max_n + 1):
        level = _next_level(level, workers)
        reports.append(_report(n, level))
    return reports


def verify_reports(reports: list[EnumerationReport], max_a: int) -> list[tuple[str, bool, str]]:
    """Check the classification statements against an enumeration."""
    from .classify import gamma
    from .circular_graph import canonical_form

    checks = []
    by_n = {r.n: r for r in reports}
    if 3 in by_n:
        r = by_n[3]
        checks.append(("n=3: no one-exceptional class", r.one_exceptional_classes == 0,
                       f"{r.one_exceptional_classes} found"))
    if 4 in by_n:
        r = by_n[4]
        ok = r.one_exceptional == [canonical_key((1, 0, -1, 0))]
        checks.append(("n=4: exactly F1", ok, f"{r.one_exceptional}"))
    if 5 in by_n:
        r = by_n[5]
        checks.append(("n=5: no one-exceptional class", r.one_exceptional_classes == 0,
                       f"{r.one_exceptional_classes} found"))
    if 6 in by_n:
        r = by_n[6]
        gammas = {canonical_form(gamma(a)).weights for a in range(1, max_a + 2)}
        found = set(r.one_exceptional)
        inner = {canonical_form(gamma(a)).weights for a in range(1, max_a)}
        ok = found <= gammas and inner <= found
        checks.append(("n=6: one-exceptional classes are gamma(a)", ok,
                       f"a values {sorted(max(w) for w in found)}"))
    for n in sorted(by_n):
        if n < 7:
            continue
        r = by_n[n]
        bad = {a: r.per_a_counts.get(a, 0) for a in range(1, max_a - 1)
               if r.per_a_counts.get(a, 0) != 2 ** (n - 6)}
        checks.append((f"n={n}: per-a counts = 2^{n - 6} for a <= {max_a - 2}", not bad,
                       f"mismatches {bad}" if bad else f"{dict(sorted(r.per_a_counts.items()))}"))
    return checks
