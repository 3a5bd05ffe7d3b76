"""SVG and TikZ drawings of the triangulated junior simplex.

Layout: e_z at (0, 0), e_y at (6, 0), e_x at (3, 5.2).  Output depends only on
the fan, the annotation mode and the package version.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fan import Fan
from .ktheory import b0_report, wall_degree_table

__all__ = ["MODES", "layout", "emit_svg", "emit_tikz", "edge_labels"]

MODES = ("none", "wall-degrees", "h0-classes")
WIDTH = Fraction(6)
HEIGHT = Fraction(26, 5)

_SCALE = 100  # svg px per unit
_MARGIN = 30
_CHI = re.compile(r"chi([^\s:]+)")


def layout(point) -> tuple[Fraction, Fraction]:
    x, y, _ = point.coords
    return (WIDTH / 2 * x + WIDTH * y, HEIGHT * x)


def edge_labels(fan: Fan, mode: str) -> dict:
    """Wall endpoints -> (label text, highlighted?) for the given mode."""
    if mode not in MODES:
        raise ValueError(f"unknown annotation mode {mode!r}; expected one of {MODES}")
    if mode == "none" or not fan.walls:
        return {}
    table = wall_degree_table(fan)
    if mode == "wall-degrees":
        out = {}
        for wall, degs in zip(fan.walls, table):
            parts = [f"{chi.label}:{d}" for chi, d in degs.items() if d]
            out[wall.endpoints] = (" ".join(parts), False)
        return out
    h0 = set(b0_report(fan, degrees=False).h0) if fan.ctx.r > 1 else set()
    out = {}
    for wall, degs in zip(fan.walls, table):
        hits = [chi.label for chi, d in degs.items() if d and chi in h0]
        out[wall.endpoints] = (" ".join(hits), bool(hits))
    return out


def _version() -> str:
    from . import __version__

    return __version__


def _px(q: Fraction) -> str:
    # fixed three decimals, rounded exactly
    v = round(q * 1000)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // 1000}.{v % 1000:03d}"


def _svg_xy(p) -> tuple[str, str]:
    x, y = layout(p)
    return _px(_MARGIN + _SCALE * x), _px(_MARGIN + _SCALE * (HEIGHT - y))


def emit_svg(fan: Fan, mode: str = "none") -> bytes:
    labels = edge_labels(fan, mode)
    w = _px(2 * _MARGIN + _SCALE * WIDTH)
    h = _px(2 * _MARGIN + _SCALE * HEIGHT)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f"<!-- ghilb {_version()} group {fan.ctx.spec} mode {mode} -->",
        '<g stroke="black" stroke-width="1.5" fill="none">',
    ]
    for e in fan.edges():
        (x1, y1), (x2, y2) = (_svg_xy(p) for p in e)
        colour = ' stroke="red"' if labels.get(e, ("", False))[1] else ""
        lines.append(f'<polyline points="{x1},{y1} {x2},{y2}"{colour}/>')
    lines.append("</g>")
    lines.append('<g fill="black">')
    for p in fan.points:
        if not p.is_corner:
            x, y = _svg_xy(p)
            lines.append(f'<circle cx="{x}" cy="{y}" r="4"/>')
    lines.append("</g>")
    text = [(e, t) for e, (t, _) in labels.items() if t]
    if text:
        lines.append('<g font-family="sans-serif" font-size="11" text-anchor="middle">')
        for (p, q), t in sorted(text, key=lambda it: (it[0][0].coords, it[0][1].coords)):
            (x1, y1), (x2, y2) = layout(p), layout(q)
            mx = _px(_MARGIN + _SCALE * (x1 + x2) / 2)
            my = _px(_MARGIN + _SCALE * (HEIGHT - (y1 + y2) / 2))
            lines.append(f'<text x="{mx}" y="{my}">{t}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _tikz_num(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _tikz_xy(p) -> str:
    x, y = layout(p)
    return f"({{{_tikz_num(x)}}},{{{_tikz_num(y)}}})"


def emit_tikz(fan: Fan, mode: str = "none") -> str:
    labels = edge_labels(fan, mode)
    lines = [
        f"% ghilb {_version()} group {fan.ctx.spec} mode {mode}",
        "\\begin{tikzpicture}",
    ]
    for e in fan.edges():
        p, q = e
        style = "[red]" if labels.get(e, ("", False))[1] else ""
        lines.append(f"  \\draw{style} {_tikz_xy(p)} -- {_tikz_xy(q)};")
    for p in fan.points:
        if not p.is_corner:
            lines.append(f"  \\fill {_tikz_xy(p)} circle (1.5pt);")
    for (p, q), (t, _) in sorted(labels.items(), key=lambda it: (it[0][0].coords, it[0][1].coords)):
        if t:
            (x1, y1), (x2, y2) = layout(p), layout(q)
            mid = f"({{{_tikz_num((x1 + x2) / 2)}}},{{{_tikz_num((y1 + y2) / 2)}}})"
            tex = _CHI.sub(r"$\\chi_{\1}$", t)
            lines.append(f"  \\node[font=\\tiny, fill=white] at {mid} {{{tex}}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
