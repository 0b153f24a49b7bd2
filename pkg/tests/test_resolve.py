from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torifan.classify import farey_level
from torifan.errors import NotCoprime, OutOfRange, WrongOrientation
from torifan.fan2d import CompleteFan2
from torifan.lattice import Cone2, LatticeVector, det2
from torifan.oracles import hull_boundary_points
from torifan.resolve import (ResolutionData, determinant_check,
                             minimal_resolution, resolve_wps, tridiagonal_det,
                             wps_fan, wps_resolution)
from fractions import Fraction

V = LatticeVector


def cone(a, b):
    return Cone2(V(*a), V(*b))


@pytest.mark.parametrize("c, rays, si", [
    (((1, 0), (0, 1)), [], []),
    (((0, -1), (3, 2)), [(1, 0), (2, 1)], [-2, -2]),
    (((3, 2), (-1, 0)), [(1, 1)], [-2]),
])
def test_minimal_resolution_examples(c, rays, si):
    rd = minimal_resolution(cone(*c))
    assert list(rd.interior_rays) == [V(*v) for v in rays]
    assert list(rd.self_intersections) == si
    assert determinant_check(rd)


def test_wrong_orientation():
    with pytest.raises(WrongOrientation):
        minimal_resolution(cone((3, 2), (0, -1)))


@pytest.mark.parametrize("diag, d", [([-2, -2], 3), ([-2], -2), ([], 1)])
def test_tridiagonal_det_examples(diag, d):
    assert tridiagonal_det(diag) == d


def test_determinant_check_examples():
    assert determinant_check(ResolutionData(cone((1, 0), (1, 3)), (V(1, 1), V(1, 2)), (-2, -2)))
    assert determinant_check(ResolutionData(cone((1, 0), (1, 2)), (V(1, 1),), (-2,)))
    assert determinant_check(ResolutionData(cone((1, 0), (0, 1)), (), ()))
    assert not determinant_check(ResolutionData(cone((1, 0), (1, 3)), (V(1, 1),), (-2,)))


@pytest.mark.parametrize("c, b, rays", [
    (1, 1, [(1, 1), (-1, 0), (0, -1)]),
    (2, 3, [(3, 2), (-1, 0), (0, -1)]),
    (2, 7, [(7, 2), (-1, 0), (0, -1)]),
])
def test_wps_fan(c, b, rays):
    assert list(wps_fan(c, b)) == [V(*v) for v in rays]


def test_wps_fan_relation():
    for a in range(1, 11):
        nu1, nx, ny = wps_fan(2, 2 * a + 1)
        assert nu1 + (2 * a + 1) * nx + 2 * ny == V(0, 0)


def test_wps_errors():
    with pytest.raises(NotCoprime):
        resolve_wps(2, 4)
    with pytest.raises(OutOfRange):
        resolve_wps(3, 2)


def test_resolve_wps_examples():
    a1 = CompleteFan2([(1, 0), (2, 1), (3, 2), (1, 1), (-1, 0), (0, -1)])
    assert resolve_wps(2, 3) == a1
    assert set(resolve_wps(2, 5).rays) == {V(*v) for v in [(-1, 0), (0, -1), (1, 0), (2, 1), (3, 1), (5, 2)]}
    assert resolve_wps(3, 4).n == 7 == 6 + farey_level(Fraction(1, 3))


def test_wps_resolution_chains():
    res = wps_resolution(2, 3)
    assert res.toward_x.self_intersections == (-2,)
    assert res.toward_y.self_intersections == (-2, -2)
    assert res.fan.rays[0] == V(3, 2)


@st.composite
def cones(draw):
    d = draw(st.integers(2, 80))
    q = draw(st.integers(0, d - 1).filter(lambda q: gcd(q, d) == 1))
    return Cone2(V(1, 0), V(q, d))


@given(cones())
def test_resolution_invariants(c):
    rd = minimal_resolution(c)
    chain = rd.chain
    assert all(a <= -2 for a in rd.self_intersections)
    assert all(det2(chain[i], chain[i + 1]) == 1 for i in range(len(chain) - 1))
    for i, a in enumerate(rd.self_intersections, start=1):
        assert chain[i - 1] + chain[i + 1] + a * chain[i] == V(0, 0)
    assert tridiagonal_det(rd.self_intersections) == (-1) ** rd.k * c.det
    assert list(chain) == hull_boundary_points(c)


def test_hj_sweep_small():
    for d in range(2, 25):
        for q in range(d):
            if gcd(q, d) == 1:
                c = Cone2(V(1, 0), V(q, d))
                rd = minimal_resolution(c)
                assert determinant_check(rd)
                assert list(rd.chain) == hull_boundary_points(c)


def test_resolution_of_skew_cones():
    # generators not of the form (1,0)
    for a, b in [((3, 2), (-1, 0)), ((0, -1), (7, 3)), ((2, 5), (-3, 1))]:
        c = cone(a, b)
        assert list(minimal_resolution(c).chain) == hull_boundary_points(c)
