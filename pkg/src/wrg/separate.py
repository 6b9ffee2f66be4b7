"""Mutually empty boxes versus linear separability of two point classes."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from importlib import resources
from typing import Mapping, Sequence

from .build import build_oracle
from .errors import BudgetExhausted
from .geometry import PlanePoint, Scene
from .io import points_from_json, points_to_json


@dataclass(frozen=True)
class TwoClassInstance:
    class_a: tuple[PlanePoint, ...]
    class_b: tuple[PlanePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_a", tuple(self.class_a))
        object.__setattr__(self, "class_b", tuple(self.class_b))
        Scene(self.class_a + self.class_b)

    def swapped(self) -> "TwoClassInstance":
        return TwoClassInstance(self.class_b, self.class_a)

    def to_json(self) -> dict:
        return {"a": points_to_json(self.class_a), "b": points_to_json(self.class_b)}

    @classmethod
    def from_json(cls, data: Mapping) -> "TwoClassInstance":
        a = list(data["a"])
        both = points_from_json(a + list(data["b"]))
        return cls(both[: len(a)], both[len(a) :])


def _complete(points, witnesses) -> bool:
    n = len(points)
    g = build_oracle(Scene(points, (), witnesses), "negative")
    return len(g.edges) == n * (n - 1) // 2


def mutual_complete(inst: TwoClassInstance) -> bool:
    """No box spanned by one class contains a point of the other."""
    return _complete(inst.class_a, inst.class_b) and _complete(inst.class_b, inst.class_a)


# -- separability ---------------------------------------------------------------


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Hull vertices counter-clockwise (monotone chain, collinear points dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _candidate_normals(a_pts, b_pts):
    """Directions containing the normal of the widest separating strip.

    The widest strip is fixed either by a closest vertex pair (normal along
    their difference) or by a hull edge (normal perpendicular to it).
    """
    seen = set()
    for (x0, y0), (x1, y1) in itertools.product(a_pts, b_pts):
        seen.add((x1 - x0, y1 - y0))
    for hull in (convex_hull(a_pts), convex_hull(b_pts)):
        for (x0, y0), (x1, y1) in zip(hull, hull[1:] + hull[:1]):
            seen.add((y1 - y0, x0 - x1))
            seen.add((y0 - y1, x1 - x0))
    seen.discard((0, 0))
    return sorted(seen)


def linearly_separable(inst: TwoClassInstance) -> tuple[int, int, int] | None:
    """Integers (a, b, c) with a*x + b*y < c on class A and > c on class B, or None."""
    a_pts = [(p.x, p.y) for p in inst.class_a]
    b_pts = [(p.x, p.y) for p in inst.class_b]
    if not a_pts or not b_pts:
        xs = [x for x, _ in a_pts + b_pts] or [0]
        return (1, 0, min(xs) - 1) if a_pts == [] else (1, 0, max(xs) + 1)
    for nx, ny in _candidate_normals(a_pts, b_pts):
        top_a = max(nx * x + ny * y for x, y in a_pts)
        low_b = min(nx * x + ny * y for x, y in b_pts)
        if top_a < low_b:
            # doubling keeps the midpoint integral
            return (2 * nx, 2 * ny, top_a + low_b)
    return None


# -- counterexample search ------------------------------------------------------------


def _random_instance(rnd: random.Random) -> TwoClassInstance:
    na, nb = rnd.randint(2, 6), rnd.randint(2, 6)
    n = na + nb
    xs = rnd.sample(range(1, n + 1), n)
    ys = rnd.sample(range(1, n + 1), n)
    pts = [(x, y) for x, y in zip(xs, ys)]
    a = [PlanePoint(f"a{i}", *pts[i - 1]) for i in range(1, na + 1)]
    b = [PlanePoint(f"b{i}", *pts[na + i - 1]) for i in range(1, nb + 1)]
    return TwoClassInstance(a, b)


def is_counterexample(inst: TwoClassInstance) -> bool:
    return mutual_complete(inst) and linearly_separable(inst) is None


def search_counterexample(seed: int, budget: int) -> TwoClassInstance:
    """Seeded random search on small rank grids, at most ``budget`` samples."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    rnd = random.Random(seed)
    for _ in range(budget):
        inst = _random_instance(rnd)
        if is_counterexample(inst):
            return inst
    raise BudgetExhausted(f"no counterexample in {budget} samples")


def stored_counterexample() -> TwoClassInstance:
    """The shipped instance: mutually complete, yet not linearly separable."""
    text = resources.files("wrg").joinpath("data/mng_counterexample.json").read_text()
    return TwoClassInstance.from_json(json.loads(text))
