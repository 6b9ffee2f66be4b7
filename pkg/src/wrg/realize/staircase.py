"""Staircase scenes and their interval models, plus join composition."""

from __future__ import annotations

import bisect

from ..analyze import detect_staircase_type, minimize_witnesses
from ..errors import DuplicateId, NotStaircase
from ..geometry import PlanePoint, Quadrant, Scene, rotate_ccw
from .models import IntervalModel, Realization, fresh_names, model_from_endpoints, verified

# counter-clockwise quarter turns that carry each staircase type to type IV
_TURNS_TO_IV = {Quadrant.IV: 0, Quadrant.III: 1, Quadrant.II: 2, Quadrant.I: 3}


def intervals_to_staircase(m: IntervalModel) -> Realization:
    """Type-IV staircase whose graph joins exactly the disjoint intervals."""
    ends = sorted(e for ab in m.intervals.values() for e in ab)
    rank = {e: r for r, e in enumerate(ends, 1)}
    verts = sorted(m.intervals)
    points = [PlanePoint(v, 2 * rank[m.intervals[v][0]], 2 * rank[m.intervals[v][1]]) for v in verts]
    names = fresh_names("w", max(len(ends) - 1, 0), verts)
    witnesses = [PlanePoint(name, 2 * r + 1, 2 * r + 1) for r, name in enumerate(names, 1)]
    real = Realization(Scene(points, witnesses), {v: v for v in verts})
    g = m.intersection_graph().complement()
    return verified(real, g)


def staircase_to_intervals(scene: Scene) -> IntervalModel:
    """Interval model of the complement of a staircase scene's graph.

    Each vertex gets the chain positions from the first witness to its right
    up to the first witness above it (an artificial witness closes the chain).
    """
    if scene.neg_witnesses:
        raise NotStaircase("staircases carry positive witnesses only")
    types = detect_staircase_type(scene)
    if not types:
        scene = minimize_witnesses(scene)
        types = detect_staircase_type(scene)
    if not types:
        raise NotStaircase("witnesses do not form a staircase of any type")
    kind = Quadrant.IV if Quadrant.IV in types else sorted(types, key=lambda t: t.value)[0]
    scene = rotate_ccw(scene, _TURNS_TO_IV[kind])

    chain = sorted(scene.witnesses, key=lambda w: w.x)
    xs = [w.x for w in chain]
    ys = [w.y for w in chain]
    spans = {}
    for v in scene.points:
        first_right = bisect.bisect_right(xs, v.x)
        first_above = bisect.bisect_right(ys, v.y)
        spans[v.id] = (first_right, first_above)
    return model_from_endpoints(spans)


def _shift(scene: Scene, dx: int, dy: int) -> Scene:
    return scene.transformed(lambda x, y: (x + dx, y + dy))


def compose_join(a: Scene, b: Scene) -> Scene:
    """Realize the join of two type-IV staircases with one new witness.

    ``a`` lands in quadrant I of a witness at the origin and ``b`` in
    quadrant III, so the new witness sees every cross pair. Vertex ids must
    be disjoint; witnesses are renamed.
    """
    ids_a = {p.id for p in a.points}
    ids_b = {p.id for p in b.points}
    if ids_a & ids_b:
        raise DuplicateId(f"scenes share vertex ids {sorted(ids_a & ids_b)[:3]}")
    if a.elements():
        a = _shift(a, 1 - min(p.x for p in a.elements()), 1 - min(p.y for p in a.elements()))
    if b.elements():
        b = _shift(b, -1 - max(p.x for p in b.elements()), -1 - max(p.y for p in b.elements()))
    chain = [*b.pos_witnesses, PlanePoint("", 0, 0), *a.pos_witnesses]
    names = fresh_names("w", len(chain), ids_a | ids_b)
    return Scene(a.points + b.points, [w.moved(w.x, w.y, id=name) for w, name in zip(chain, names)])
