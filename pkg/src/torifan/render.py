"""Deterministic SVG, TikZ and DOT figures of 2D fans.

Each figure shows a lattice grid, the rays from the origin, and the thin
polygon joining consecutive ray tips. Rays are labelled with their
self-intersection weights.
"""
from __future__ import annotations

from typing import Iterable

from .fan2d import CompleteFan2
from .lattice import LatticeVector

__all__ = ["tip_polygon", "fan_svg", "fan_tikz", "fan_dot", "render", "FORMATS"]

FORMATS = ("svg", "tikz", "dot")


def tip_polygon(fan: CompleteFan2) -> list[LatticeVector]:
    """Ray tips in cyclic order: the boundary of the union of the triangles (0, v_i, v_i+1)."""
    return list(fan.rays)


def _bbox(fan: CompleteFan2) -> tuple[int, int, int, int]:
    xs = [v.x for v in fan.rays] + [0]
    ys = [v.y for v in fan.rays] + [0]
    return min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1


def fan_svg(fan: CompleteFan2, scale: int = 40, highlight: Iterable[LatticeVector] = ()) -> str:
    x0, x1, y0, y1 = _bbox(fan)
    w, h = (x1 - x0) * scale, (y1 - y0) * scale
    marked = set(highlight)

    def px(v):
        x, y = v
        return (x - x0) * scale, (y1 - y) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    out.append('<g stroke="#dddddd" stroke-width="1">')
    for x in range(x0, x1 + 1):
        out.append(f'<line x1="{px((x, 0))[0]}" y1="0" x2="{px((x, 0))[0]}" y2="{h}"/>')
    for y in range(y0, y1 + 1):
        out.append(f'<line x1="0" y1="{px((0, y))[1]}" x2="{w}" y2="{px((0, y))[1]}"/>')
    out.append("</g>")
    tips = tip_polygon(fan)
    pts = " ".join(f"{px(v)[0]},{px(v)[1]}" for v in tips)
    out.append(f'<polygon points="{pts}" fill="none" stroke="#888888" stroke-width="1"/>')
    ox, oy = px((0, 0))
    for v, wt in zip(fan.rays, fan.weights):
        tx, ty = px(v)
        color = "#c00000" if v in marked or wt == -1 else "#000000"
        out.append(f'<line x1="{ox}" y1="{oy}" x2="{tx}" y2="{ty}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<circle cx="{tx}" cy="{ty}" r="3" fill="{color}"/>')
        out.append(f'<text x="{tx + 5}" y="{ty - 5}" font-size="12" font-family="sans-serif">{wt}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def fan_tikz(fan: CompleteFan2) -> str:
    x0, x1, y0, y1 = _bbox(fan)
    out = ["\\begin{tikzpicture}[scale=0.8]",
           f"  \\draw[help lines, gray!40] ({x0},{y0}) grid ({x1},{y1});"]
    tips = tip_polygon(fan)
    out.append("  \\draw[thin] " + " -- ".join(f"({v.x},{v.y})" for v in tips) + " -- cycle;")
    for v, wt in zip(fan.rays, fan.weights):
        out.append(f"  \\draw[thick, ->] (0,0) -- ({v.x},{v.y}) node[anchor=south west] {{${wt}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def fan_dot(fan: CompleteFan2) -> str:
    """The weighted circular graph of the fan."""
    n = fan.n
    out = ["graph fan {", "  layout=circo;", "  node [shape=circle];"]
    for i, (v, wt) in enumerate(zip(fan.rays, fan.weights)):
        out.append(f'  v{i} [label="{wt}", xlabel="({v.x},{v.y})"];')
    for i in range(n):
        out.append(f"  v{i} -- v{(i + 1) % n};")
    out.append("}")
    return "\n".join(out) + "\n"


def render(fan: CompleteFan2, fmt: str) -> str:
    if fmt == "svg":
        return fan_svg(fan)
    if fmt == "tikz":
        return fan_tikz(fan)
    if fmt == "dot":
        return fan_dot(fan)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
