"""Realizing graphs with exactly two non-trivial components."""

from __future__ import annotations

from ..analyze import nontrivial_components
from ..errors import NotCointerval, NotTwoComponents
from ..geometry import PlanePoint, Scene
from ..graph import Graph
from .cointerval import recognize_cointerval
from .models import Realization, fresh_names, verified
from .staircase import intervals_to_staircase


def realize_two_components(g: Graph) -> Realization:
    """Two staircases in opposite quadrants, isolated vertices in between.

    Component 1 is reflected so its witness chain runs down the line
    x + y = K with its vertices below the line; component 2 is its point
    mirror image in quadrant III. A component that is not co-interval
    proves the graph is not a positive WRG.
    """
    comps = nontrivial_components(g)
    if len(comps) != 2:
        raise NotTwoComponents(f"expected two non-trivial components, found {len(comps)}")
    stairs = []
    for idx, comp in enumerate(comps, 1):
        sub = g.induced(comp)
        model = recognize_cointerval(sub)
        if model is None:
            raise NotCointerval(idx, comp)
        stairs.append(intervals_to_staircase(model).scene)

    isolated = sorted(g.isolated())
    # isolated points sit on a short diagonal inside (-unit, unit)^2
    unit = len(isolated) + 1
    reach = max(max(p.x, p.y) for s in stairs for p in s.elements())
    k = unit * (reach + 1)

    taken = set(g.vertices)
    w1 = fresh_names("s", len(stairs[0].pos_witnesses), taken)
    w2 = fresh_names("t", len(stairs[1].pos_witnesses), taken | set(w1))
    points, witnesses = [], []
    for p in stairs[0].points:
        points.append(PlanePoint(p.id, unit * p.x, k - unit * p.y))
    for name, w in zip(w1, stairs[0].pos_witnesses):
        witnesses.append(PlanePoint(name, unit * w.x, k - unit * w.y))
    for p in stairs[1].points:
        points.append(PlanePoint(p.id, -unit * p.x, unit * p.y - k))
    for name, w in zip(w2, stairs[1].pos_witnesses):
        witnesses.append(PlanePoint(name, -unit * w.x, unit * w.y - k))
    offset = len(isolated) // 2
    for i, v in enumerate(isolated):
        points.append(PlanePoint(v, i - offset, i - offset))

    real = Realization(Scene(points, witnesses), {v: v for v in g.vertices})
    return verified(real, g)
