"""Deterministic SVG rendering of triangulations.

The drawing fits the point set into a 512x512 viewBox with a 5% margin and
a flipped y-axis.  Element order and number formatting are fixed, so equal
inputs give byte-identical output.  Edge colors follow the figure
conventions: black for plain edges, red for constrained edges, green for
edges that differ from a comparison triangulation.
"""

from __future__ import annotations

from .geom import PointSet
from .triangulation import EdgeKey, Triangulation

VIEW = 512.0
MARGIN = 0.05 * VIEW


def _mapper(ps: PointSet):
    xs = [p.x for p in ps]
    ys = [p.y for p in ps]
    w = max(xs) - min(xs)
    h = max(ys) - min(ys)
    span = max(w, h) or 1.0
    scale = (VIEW - 2.0 * MARGIN) / span
    x0 = min(xs) - (span - w) / 2.0
    y0 = min(ys) - (span - h) / 2.0

    def to_px(p):
        return (MARGIN + (p.x - x0) * scale, VIEW - MARGIN - (p.y - y0) * scale)

    return to_px


def _f(v: float) -> str:
    return f"{v:.3f}"


def render_svg(
    t: Triangulation,
    constrained: set[EdgeKey] | frozenset[EdgeKey] = frozenset(),
    diff: set[EdgeKey] | frozenset[EdgeKey] = frozenset(),
) -> str:
    ps = t.point_set
    to_px = _mapper(ps)
    constrained = {(min(e), max(e)) for e in constrained}
    diff = {(min(e), max(e)) for e in diff}
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {VIEW:g} {VIEW:g}" width="{VIEW:g}" height="{VIEW:g}">'
    ]
    # plain edges first, then diff markings, then constraints on top
    for group, color, width in (
        (sorted(e for e in t.edges() if e not in constrained and e not in diff), "black", 1.5),
        (sorted(e for e in diff if e not in constrained), "green", 2.5),
        (sorted(constrained), "red", 2.5),
    ):
        for i, j in group:
            x1, y1 = to_px(ps[i])
            x2, y2 = to_px(ps[j])
            lines.append(
                f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                f'stroke="{color}" stroke-width="{width:g}"/>'
            )
    for p in ps:
        x, y = to_px(p)
        lines.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="4" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
