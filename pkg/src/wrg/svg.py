"""Static SVG drawings of scenes and graphs."""

from __future__ import annotations

import math
from typing import Iterable, Mapping
from xml.sax.saxutils import quoteattr

from .geometry import Scene
from .graph import Graph

CANVAS = 480
MARGIN = 24
RADIUS = 5


def _mapper(coords: list[tuple[float, float]]):
    if not coords:
        return lambda x, y: (CANVAS / 2, CANVAS / 2)
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    unit = (CANVAS - 2 * MARGIN) / span
    x0, y0 = min(xs), min(ys)
    # svg y grows downward
    return lambda x, y: (MARGIN + (x - x0) * unit, CANVAS - MARGIN - (y - y0) * unit)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _document(body: Iterable[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">\n'
        f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>\n'
    )
    return head + "".join(line + "\n" for line in body) + "</svg>\n"


def _vertex(pid, x, y) -> str:
    return f'<circle class="vertex" id={quoteattr(pid)} cx="{_fmt(x)}" cy="{_fmt(y)}" r="{RADIUS}" fill="black"/>'


def _witness(pid, x, y, sign) -> str:
    r = RADIUS + 1
    d = r / math.sqrt(2)
    if sign == "+":
        marks = (
            f'<line x1="{_fmt(x - d)}" y1="{_fmt(y - d)}" x2="{_fmt(x + d)}" y2="{_fmt(y + d)}" stroke="black"/>'
            f'<line x1="{_fmt(x - d)}" y1="{_fmt(y + d)}" x2="{_fmt(x + d)}" y2="{_fmt(y - d)}" stroke="black"/>'
        )
        cls = "witness-pos"
    else:
        marks = f'<line x1="{_fmt(x - r)}" y1="{_fmt(y)}" x2="{_fmt(x + r)}" y2="{_fmt(y)}" stroke="black"/>'
        cls = "witness-neg"
    return (
        f'<g class="{cls}" id={quoteattr(pid)}>'
        f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{r}" fill="white" stroke="black"/>{marks}</g>'
    )


def _segment(a, b) -> str:
    return (
        f'<line class="edge" x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" '
        'stroke="gray" stroke-width="1.5"/>'
    )


def render_svg(scene: Scene, graph: Graph | None = None, vertex_map: Mapping[str, str] | None = None) -> str:
    """Draw ``scene``; ``graph`` edges (through ``vertex_map``) become segments."""
    els = scene.elements()
    to_canvas = _mapper([(p.x, p.y) for p in els])
    where = {p.id: to_canvas(p.x, p.y) for p in els}
    body = []
    if graph is not None:
        vm = vertex_map or {v: v for v in graph.vertices}
        for u, v in graph.sorted_edges():
            body.append(_segment(where[vm[u]], where[vm[v]]))
    for p in sorted(scene.points, key=lambda p: p.id):
        body.append(_vertex(p.id, *where[p.id]))
    for sign, ws in (("+", scene.pos_witnesses), ("-", scene.neg_witnesses)):
        for w in sorted(ws, key=lambda p: p.id):
            body.append(_witness(w.id, *where[w.id], sign))
    return _document(body)


def render_graph_svg(graph: Graph) -> str:
    """Draw a bare graph with its vertices evenly spaced on a circle."""
    verts = sorted(graph.vertices)
    n = len(verts)
    center = CANVAS / 2
    radius = CANVAS / 2 - MARGIN
    where = {}
    for i, v in enumerate(verts):
        angle = 2 * math.pi * i / max(n, 1)
        where[v] = (center + radius * math.cos(angle), center - radius * math.sin(angle))
    body = [_segment(where[u], where[v]) for u, v in graph.sorted_edges()]
    body += [_vertex(v, *where[v]) for v in verts]
    return _document(body)
