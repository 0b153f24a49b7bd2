import pytest

from torifan.circular_graph import WeightedCircularGraph, canonical_form
from torifan.classify import Kind, classify_surface, gamma
from torifan.enumeration import enumerate_classes, thread_cap, verify_reports
from torifan.errors import BoundsExceeded
from torifan.fan2d import realize


def by_n(reports):
    return {r.n: r for r in reports}


def test_n5_has_no_one_exceptional_class():
    assert by_n(enumerate_classes(5, 4))[5].one_exceptional_classes == 0


def test_n6_classes_are_gammas():
    r6 = by_n(enumerate_classes(6, 4))[6]
    found = set(r6.one_exceptional)
    inner = {canonical_form(gamma(a)).weights for a in (1, 2, 3)}
    assert inner <= found
    assert all(any(canonical_form(gamma(a)).weights == w for a in range(1, 6)) for w in found)


def test_binary_tree_counts():
    reports = enumerate_classes(8, 6)
    assert by_n(reports)[8].per_a_counts[1] == 4
    assert all(ok for _, ok, _ in verify_reports(reports, 6))


def test_small_levels():
    reports = by_n(enumerate_classes(5, 3))
    assert reports[3].total_classes == 1 and reports[3].one_exceptional_classes == 0
    assert reports[4].one_exceptional == [canonical_form(WeightedCircularGraph([1, 0, -1, 0])).weights]


def test_every_class_is_realizable_and_classifiable():
    for report in enumerate_classes(8, 3):
        for w in report.one_exceptional:
            g = WeightedCircularGraph(w)
            realize(g)
            if report.n >= 6:
                assert classify_surface(g).kind is Kind.FAREY


def test_bounds():
    with pytest.raises(BoundsExceeded):
        enumerate_classes(13, 4)
    with pytest.raises(BoundsExceeded):
        enumerate_classes(8, 9)
    with pytest.raises(BoundsExceeded):
        enumerate_classes(2, 4)


def test_results_independent_of_workers():
    # the n = 11 level exceeds the pool threshold, so workers=2 really forks
    serial = enumerate_classes(12, 4, workers=1)
    parallel = enumerate_classes(12, 4, workers=2)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]
    assert [r.one_exceptional for r in serial] == [r.one_exceptional for r in parallel]


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("TORIFAN_THREADS", "3")
    assert thread_cap() == 3
    monkeypatch.setenv("TORIFAN_THREADS", "junk")
    assert thread_cap() == 1
    monkeypatch.delenv("TORIFAN_THREADS")
    assert thread_cap() == 1


def test_report_dict_is_sorted():
    d = by_n(enumerate_classes(9, 5))[9].to_dict()
    assert list(d["per_a_counts"]) == sorted(d["per_a_counts"], key=int)
