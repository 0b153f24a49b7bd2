import json
from fractions import Fraction

import pytest
from hypothesis import given

from strategies import complete_fans, realizable_graphs
from torifan import io
from torifan.classify import build_sigma_r
from torifan.errors import ParseError
from torifan.horospherical import (ColoredFan2, blow_up_colored, colored_sigma_r,
                                   house_models, sigma_1, sigma_2)
from torifan.lattice import LatticeVector
from torifan.render import fan_dot, fan_svg, fan_tikz, render, tip_polygon


def via_text(obj):
    return json.loads(json.dumps(obj))


@given(realizable_graphs())
def test_graph_round_trip(g):
    assert io.graph_from_json(via_text(io.graph_to_json(g))) == g


@given(complete_fans())
def test_fan_round_trip(f):
    back = io.fan2_from_json(json.dumps(io.fan2_to_json(f)))
    assert back.rays == f.rays


@pytest.mark.parametrize("make", [
    sigma_1, sigma_2,
    lambda: blow_up_colored(sigma_2(), ((1, 0),)),
    lambda: blow_up_colored(sigma_1(), ((1, 0), (0, 1))),
    lambda: colored_sigma_r(Fraction(3, 2)),
    lambda: colored_sigma_r(Fraction(11, 4)),
])
def test_colored_round_trip(make):
    f = make()
    back = io.colored_from_json(json.dumps(io.colored_to_json(f)))
    assert back == f


def test_colored_lone_ray_round_trip():
    f = ColoredFan2.from_maximal([(((1, 0),), {"D"}), (((0, 1), (-1, 0)), ())])
    assert io.colored_from_json(via_text(io.colored_to_json(f))) == f


def test_colored_defaults():
    # cones default to consecutive pairs, colored cones to those touching a colored ray
    f = io.colored_from_json('{"rays": [[1,0],[0,1],[-1,-1]], "colored_rays": [0]}')
    assert f == sigma_2()


@pytest.mark.parametrize("which", [0, 1, 2])
def test_fan3_round_trip(which):
    f = house_models(3, 2)[which]
    back = io.fan3_from_json(json.dumps(io.fan3_to_json(f)))
    assert back == f and back.roles == f.roles


def test_fan3_plain_round_trip():
    from torifan.horospherical import Fan3
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    f = Fan3(e, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert io.fan3_from_json(via_text(io.fan3_to_json(f))) == f


def test_parse_error_has_position():
    with pytest.raises(ParseError) as exc:
        io.graph_from_json("[1, 2,, 3]")
    assert exc.value.position == 6
    assert exc.value.exit_code == 2


@pytest.mark.parametrize("parse, text", [
    (io.fan2_from_json, '{"rays": 3}'),
    (io.fan2_from_json, '{"ray": []}'),
    (io.fan2_from_json, '{"rays": [[1, 0, 0]]}'),
    (io.fan2_from_json, '{"rays": [[1.5, 0]]}'),
    (io.graph_from_json, '[1, "a", 3]'),
    (io.fan3_from_json, '{"rays": []}'),
])
def test_malformed_structures(parse, text):
    with pytest.raises(ParseError):
        parse(text)


def test_tip_polygon_matches_figures():
    # thin lines of the a + 1/2 figures pass through every ray tip
    f = build_sigma_r(Fraction(5, 2))
    assert tip_polygon(f) == list(f.rays)
    assert LatticeVector(1, 0) in tip_polygon(f)


def test_render_deterministic_and_complete():
    f = build_sigma_r(Fraction(7, 2))
    svg = fan_svg(f)
    assert svg == fan_svg(f)
    assert svg.startswith("<svg") and svg.count("<polygon") == 1
    assert svg.count('stroke-width="2"') == f.n
    tikz = fan_tikz(f)
    assert "(0,0) -- (7,2)" in tikz and "grid" in tikz
    dot = fan_dot(f)
    assert dot.count("--") == f.n
    assert render(f, "dot") == dot
    with pytest.raises(ValueError):
        render(f, "png")
