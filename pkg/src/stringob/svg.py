"""Deterministic SVG rendering of drawings."""

from __future__ import annotations

from typing import Iterable
from xml.sax.saxutils import escape

from .drawing import Drawing, crossing_points


def export_svg(d: Drawing, highlight: Iterable[tuple[int, int]] = (), size: int = 480,
               margin: int = 24, labels: bool = True, vertex_labels=None) -> str:
    """Render edges as polylines and vertices as labelled dots.

    ``highlight`` lists edge-index pairs whose crossing points are marked.
    Coordinates are exact until the final float conversion for display.
    """
    pts = list(d.vertex_pos) + [p for path in d.edge_path for p in path]
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        x0, y0 = min(xs), min(ys)
        span = max(max(xs) - x0, max(ys) - y0) or 1
    else:
        x0 = y0 = 0
        span = 1
    k = (size - 2 * margin) / span

    def xy(p) -> str:
        # y axis flipped so the picture matches the usual orientation
        return f"{float(margin + (p[0] - x0) * k):.3f},{float(size - margin - (p[1] - y0) * k):.3f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for i, path in enumerate(d.edge_path):
        u, v = d.graph.edges[i]
        out.append(f'<polyline class="edge" data-edge="{u}-{v}" fill="none" stroke="black" '
                   f'stroke-width="1" points="{" ".join(xy(p) for p in path)}"/>')
    for i, j in highlight:
        for p in crossing_points(d, i, j):
            x, y = xy(p).split(",")
            out.append(f'<circle class="crossing" cx="{x}" cy="{y}" r="4" fill="none" stroke="red" '
                       f'stroke-width="1.5"/>')
    for v, p in enumerate(d.vertex_pos):
        x, y = xy(p).split(",")
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3" fill="black"/>')
        if labels:
            text = str(vertex_labels[v]) if vertex_labels is not None else str(v)
            out.append(f'<text x="{float(x) + 5:.3f}" y="{float(y) - 5:.3f}" font-size="10">'
                       f'{escape(text)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
