"""JSON interchange for graphs, 2D fans, colored fans and 3D fans."""
from __future__ import annotations

import json
from typing import Any

from .circular_graph import WeightedCircularGraph
from .errors import ParseError
from .fan2d import CompleteFan2
from .horospherical.colored import COLOR, ColoredCone, ColoredFan2, is_complete_colored
from .horospherical.threefold import Fan3, FibrationFan
from .lattice import LatticeVector

__all__ = [
    "loads", "graph_to_json", "graph_from_json", "fan2_to_json", "fan2_from_json",
    "colored_to_json", "colored_from_json", "fan3_to_json", "fan3_from_json",
]


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc


def _maybe_load(obj):
    return loads(obj) if isinstance(obj, str) else obj


def _int_list(obj, what: str, length: int | None = None) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise ParseError(f"{what} must be a list of integers, got {obj!r}")
    if length is not None and len(obj) != length:
        raise ParseError(f"{what} must have {length} entries, got {len(obj)}")
    return obj


def graph_to_json(g: WeightedCircularGraph) -> list[int]:
    return list(g.weights)


def graph_from_json(obj) -> WeightedCircularGraph:
    return WeightedCircularGraph(_int_list(_maybe_load(obj), "weights"))


def fan2_to_json(f: CompleteFan2) -> dict:
    return {"rays": [[v.x, v.y] for v in f.rays]}


def _rays2(obj) -> list[LatticeVector]:
    if not isinstance(obj, dict) or "rays" not in obj:
        raise ParseError('expected an object with a "rays" key')
    if not isinstance(obj["rays"], list):
        raise ParseError('"rays" must be a list')
    return [LatticeVector(*_int_list(v, "ray", 2)) for v in obj["rays"]]


def fan2_from_json(obj) -> CompleteFan2:
    return CompleteFan2(_rays2(_maybe_load(obj)))


def colored_to_json(f: ColoredFan2) -> dict:
    rays = f.cyclic_rays() if is_complete_colored(f) else sorted(f.rays())
    idx = {v: i for i, v in enumerate(rays)}
    two = sorted((sorted(idx[v] for v in c.rays), c.colored) for c in f.cones_of_dim(2))
    out = {
        "rays": [[v.x, v.y] for v in rays],
        "cones": [c for c, _ in two],
        "colored_rays": sorted(idx[v] for v in f.colored_rays()),
        "colored_cones": [c for c, col in two if col],
    }
    # lone colored rays or rays without 2D cones are kept explicitly
    covered = {i for c, _ in two for i in c}
    lone = sorted(i for i in range(len(rays)) if i not in covered)
    if lone:
        out["lone_rays"] = lone
    return out


def colored_from_json(obj) -> ColoredFan2:
    obj = _maybe_load(obj)
    rays = _rays2(obj)
    n = len(rays)

    def ref(i):
        if not isinstance(i, int) or not 0 <= i < n:
            raise ParseError(f"ray index {i!r} out of range")
        return rays[i]

    if "cones" in obj:
        cones = [tuple(_int_list(c, "cone", 2)) for c in obj["cones"]]
    else:
        cones = [(i, (i + 1) % n) for i in range(n)]
    colored_rays = {ref(i) for i in _int_list(obj.get("colored_rays", []), "colored_rays")}
    if "colored_cones" in obj:
        colored = {frozenset(map(ref, _int_list(c, "cone", 2))) for c in obj["colored_cones"]}
    else:
        colored = {frozenset((rays[i], rays[j])) for i, j in cones
                   if rays[i] in colored_rays or rays[j] in colored_rays}
    maximal = []
    for i, j in cones:
        pair = frozenset((ref(i), ref(j)))
        maximal.append(ColoredCone((rays[i], rays[j]), {COLOR} if pair in colored else ()))
    for i in obj.get("lone_rays", []):
        maximal.append(ColoredCone((ref(i),), {COLOR} if ref(i) in colored_rays else ()))
    return ColoredFan2.from_maximal(maximal)


def fan3_to_json(f: Fan3) -> dict:
    out = {"rays": [list(v) for v in f.rays], "max_cones": [list(c) for c in f.max_cones]}
    if isinstance(f, FibrationFan):
        out["roles"] = dict(f.roles)  # contracted roles are null
    return out


def fan3_from_json(obj) -> Fan3:
    obj = _maybe_load(obj)
    if not isinstance(obj, dict) or "rays" not in obj or "max_cones" not in obj:
        raise ParseError('expected an object with "rays" and "max_cones"')
    rays = [tuple(_int_list(v, "ray", 3)) for v in obj["rays"]]
    cones = [_int_list(c, "max_cone", 3) for c in obj["max_cones"]]
    if "roles" in obj:
        return FibrationFan(rays, cones, dict(obj["roles"]))
    return Fan3(rays, cones)
