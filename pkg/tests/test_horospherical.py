from fractions import Fraction
from math import gcd

import pytest

from torifan.circular_graph import blow_down, is_isomorphic
from torifan.classify import build_sigma_r, farey_level
from torifan.errors import (InvalidFan, InvalidTarget, MissingStructure, NotCoprime,
                            NotOneExceptional, PEqualsOne, TypeMismatch)
from torifan.fan2d import CompleteFan2, star_subdivide, weights_of
from torifan.horospherical import (COLOR, RHO_D, ColoredCone, ColoredFan2, Fan3,
                                   FibrationFan, blow_up_colored, build_fibration_fan,
                                   colored_from_fan, colored_sigma_r, contract_phi,
                                   contract_psi, house_model, house_models,
                                   is_complete_colored, is_minimal_colored,
                                   is_smooth_colored, sigma_1, sigma_2, uncolor)
from torifan.lattice import LatticeVector, LatticeVector3, det3

V = LatticeVector
F = Fraction


def test_sigma_examples():
    s1, s2 = sigma_1(), sigma_2()
    assert is_smooth_colored(s1) and not is_complete_colored(s1)
    assert is_smooth_colored(s2) and is_complete_colored(s2)
    assert len(s2.maximal_cones()) == 3
    assert {tuple(c.rays) for c in s2.cones_of_dim(2) if c.colored} == {
        (V(-1, -1), V(1, 0)), (V(1, 0), V(0, 1))}


def test_colored_ray_must_be_a_generator_for_smoothness():
    f = ColoredFan2.from_maximal([(((1, -1), (0, 1)), {COLOR})])
    assert not is_smooth_colored(f)


def test_color_outside_cone_rejected():
    with pytest.raises(InvalidFan):
        ColoredCone(((2, 1), (0, 1)), {COLOR})


def test_incompatible_cones_rejected():
    with pytest.raises(InvalidFan):
        ColoredFan2.from_maximal([(((1, 0), (0, 1)), ()), (((1, 1), (-1, 0)), ())])


def test_missing_face_rejected():
    with pytest.raises(InvalidFan):
        ColoredFan2([ColoredCone(((1, 0), (0, 1)))])


def test_face_colors_are_induced():
    faces = ColoredCone(((1, 0), (0, 1)), {COLOR}).faces()
    by_rays = {f.rays: f.colored for f in faces}
    assert by_rays[(V(1, 0),)] and not by_rays[(V(0, 1),)] and not by_rays[()]


def test_uncolor():
    s2p = uncolor(sigma_2())
    assert all(not c.colors for c in s2p.cones)
    assert uncolor(s2p) == s2p
    cf = colored_sigma_r(F(3, 2))
    assert uncolor(cf) == colored_from_fan(cf.underlying_fan())


def test_blow_up_type_3():
    s2 = sigma_2()
    s2p = blow_up_colored(s2, ((1, 0),))
    assert s2p == uncolor(s2)
    assert {c.rays for c in s2p.cones} == {c.rays for c in s2.cones}
    # re-attaching the color undoes it
    assert colored_from_fan(s2p.underlying_fan(), RHO_D) == s2


def test_blow_up_type_2_is_star_subdivision():
    base = CompleteFan2([(1, 0), (0, 1), (-1, 0), (0, -1)])
    f = blow_up_colored(colored_from_fan(base), ((1, 0), (0, 1)))
    assert f.underlying_fan() == star_subdivide(base, 0)
    assert all(not c.colors for c in f.cones)


def test_blow_up_type_1():
    f = blow_up_colored(sigma_1(), ((0, 1), (1, 0)))
    two = {(c.rays, c.colored) for c in f.cones_of_dim(2)}
    assert two == {((V(1, 1), V(0, 1)), False), ((V(1, 0), V(1, 1)), True)}


def test_blow_up_errors():
    with pytest.raises(InvalidTarget):
        blow_up_colored(sigma_2(), ((0, 1),))
    with pytest.raises(InvalidTarget):
        blow_up_colored(sigma_2(), ((1, 0), (1, 1)))
    wide = ColoredFan2.from_maximal([(((1, -1), (1, 1)), {COLOR})])
    with pytest.raises(TypeMismatch):
        blow_up_colored(wide, ((1, -1), (1, 1)))


def test_minimality_examples():
    cf = colored_sigma_r(F(3, 2))
    assert is_minimal_colored(cf)
    assert not is_minimal_colored(uncolor(cf))
    p2 = colored_from_fan(CompleteFan2([(1, 0), (0, 1), (-1, -1)]), RHO_D)
    assert is_minimal_colored(p2)


def test_colored_sigma_r_shape():
    cf = colored_sigma_r(F(3, 2))
    assert len(cf.rays()) == 6
    assert cf.colored_rays() == [RHO_D]
    fan = cf.underlying_fan()
    assert fan.weights[fan.index(RHO_D)] == -1
    assert is_complete_colored(colored_sigma_r(F(4, 3)))


def test_colored_sweep():
    for c in range(2, 9):
        for b in range(c + 1, 6 * c):
            if gcd(b, c) != 1:
                continue
            cf = colored_sigma_r(F(b, c))
            plain = uncolor(cf)
            assert is_complete_colored(cf) and is_smooth_colored(cf) and is_minimal_colored(cf)
            assert is_complete_colored(plain) and is_smooth_colored(plain)
            assert not is_minimal_colored(plain)


def test_fibration_fan_of_sigma_three_halves():
    fib = build_fibration_fan(build_sigma_r(F(3, 2)))
    assert (len(fib.rays), len(fib.max_cones)) == (8, 12)
    assert fib.is_smooth() and fib.is_complete()
    assert all(n == 2 for n in fib.facets().values())
    nu1, nup, nupp = (fib.rays[fib.role(k)] for k in ("nu1", "nu'", "nu''"))
    assert nu1 == nup + nupp == LatticeVector3(1, 1, 0)
    assert fib.euler_characteristic() == 2


def test_fibration_needs_one_exceptional():
    with pytest.raises(NotOneExceptional):
        build_fibration_fan(CompleteFan2([(1, 0), (0, 1), (-1, -1)]))


def _fiber_fan(f3: FibrationFan) -> CompleteFan2:
    ip = f3.role("nu'")
    succ = {}
    for c in f3.max_cones:
        if ip in c:
            i, j = (k for k in c if k != ip)
            u, v = f3.rays[i], f3.rays[j]
            if det3(u, v, f3.rays[ip]) < 0:
                u, v = v, u
            succ[u] = v
    start = min(succ)
    cyc = [start]
    while succ[cyc[-1]] != start:
        cyc.append(succ[cyc[-1]])
    return CompleteFan2([(v.x, v.y) for v in cyc])


def test_psi_contraction():
    fib, psi, phi = house_models(2, 1)
    assert (len(psi.rays), len(psi.max_cones)) == (7, 10)
    assert psi.is_smooth() and psi.is_complete()
    i2, inn, ip = psi.role("nu2"), psi.role("nun"), psi.role("nu'")
    assert abs(det3(psi.rays[ip], psi.rays[i2], psi.rays[inn])) == 1
    before = weights_of(_fiber_fan(fib))
    (e,) = [i for i, w in enumerate(before.weights) if w == -1]
    assert weights_of(_fiber_fan(psi)).n == before.n - 1
    assert is_isomorphic(weights_of(_fiber_fan(psi)), blow_down(before, e))


def test_phi_contraction():
    fib, psi, phi = house_models(2, 1)
    assert (len(phi.rays), len(phi.max_cones)) == (7, 10)
    assert phi.is_smooth() and phi.is_complete()
    ip, ipp = phi.role("nu'"), phi.role("nu''")
    assert tuple(sorted((ip, ipp))) in phi.edges()
    for k in ("nu2", "nun"):
        assert abs(det3(phi.rays[ip], phi.rays[ipp], phi.rays[phi.role(k)])) == 1
    assert phi != psi
    assert phi.roles["nu1"] is None
    with pytest.raises(MissingStructure):
        contract_phi(phi)


def test_merge_validity_is_checked():
    fib = build_fibration_fan(build_sigma_r(F(3, 2)))
    roles = dict(fib.roles)
    roles["nu2"], roles["nun"] = roles["nun"], 2
    bad = FibrationFan(fib.rays, fib.max_cones, roles)
    with pytest.raises(MissingStructure):
        contract_psi(bad)


@pytest.mark.parametrize("p, q, rays", [(2, 1, 7), (3, 1, 8), (3, 2, 8)])
def test_house_model_examples(p, q, rays):
    assert len(house_model(p, q).rays) == rays


def test_house_model_errors():
    with pytest.raises(NotCoprime):
        house_model(4, 2)
    with pytest.raises(PEqualsOne):
        house_model(1, 3)


def test_house_sweep():
    for p in range(2, 12):
        for q in range(1, 13 - p):
            if gcd(p, q) != 1:
                continue
            f = house_model(p, q)
            r = F(p + q, p)
            lev = farey_level(r - r.numerator // r.denominator)
            assert f.is_smooth() and f.is_complete()
            assert f.euler_characteristic() == 2
            assert all(n == 2 for n in f.facets().values())
            assert len(f.rays) == 7 + lev
            assert len(f.max_cones) == 2 * (6 + lev) - 2


def test_fan3_validation_and_completeness():
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    p3 = Fan3(e, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert p3.is_smooth() and p3.is_complete() and p3.euler_characteristic() == 2
    octant = Fan3(e[:3], [(0, 1, 2)])
    assert not octant.is_complete()
    with pytest.raises(InvalidFan):
        Fan3(e, [(0, 1, 1)])
    with pytest.raises(InvalidFan):
        Fan3([(2, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 2)])


def test_overlapping_cone_is_not_complete():
    # cone(0,1,4) overlaps cone(0,1,2), so the face (0,1) has three owners
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1), (1, 1, 1)]
    f = Fan3(e, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4)])
    assert not f.is_complete()
