"""Witness sets that make the graph complete, and matching lower bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .build import build_oracle
from .errors import CapExceeded, NotDisjoint, RealizationFailed, TooFewPoints
from .geometry import OpenBox, PlanePoint, Scene, _ranks, box_of
from .io import points_to_json


@dataclass(frozen=True)
class StabbingCertificate:
    instance: tuple[PlanePoint, ...]
    lower_bound_boxes: tuple[OpenBox, ...] | None = None
    upper_witnesses: tuple[PlanePoint, ...] | None = None
    lower: int = 0
    upper: int | None = None

    def to_json(self) -> dict:
        return {
            "instance": points_to_json(self.instance),
            "boxes": None if self.lower_bound_boxes is None else [b.to_json() for b in self.lower_bound_boxes],
            "witnesses": None if self.upper_witnesses is None else points_to_json(self.upper_witnesses),
            "lower": self.lower,
            "upper": self.upper,
        }


def _frontier_flags(points: Sequence[PlanePoint]) -> list[tuple[bool, bool]]:
    """For each point: (upper-left quadrant occupied, lower-left occupied)."""
    order = sorted(range(len(points)), key=lambda i: points[i].x)
    flags = [(False, False)] * len(points)
    lo = hi = None
    for i in order:
        y = points[i].y
        flags[i] = (hi is not None and hi > y, lo is not None and lo < y)
        lo = y if lo is None else min(lo, y)
        hi = y if hi is None else max(hi, y)
    return flags


def stab_construct(points: Sequence[PlanePoint]) -> Scene:
    """Witnesses making every pair adjacent, on a scaled copy of ``points``.

    Every point gets a witness just up-left of it when some point lies
    up-left, and one just down-left when some point lies down-left. The
    returned scene holds the points scaled by a common factor; the graph
    is unchanged by scaling, and the scale leaves room for distinct offsets.
    """
    points = list(points)
    if len(points) < 2:
        raise TooFewPoints("need at least two points")
    Scene(points)  # general position check
    flags = _frontier_flags(points)
    count = sum(a + b for a, b in flags)
    scale = 4 * (len(points) + count)
    scaled = [p.moved(scale * p.x, scale * p.y) for p in points]
    witnesses = []
    t = 0
    for p, (upper_left, lower_left) in zip(scaled, flags):
        if upper_left:
            t += 1
            witnesses.append(PlanePoint(f"s{t}", p.x - t, p.y + t))
        if lower_left:
            t += 1
            witnesses.append(PlanePoint(f"s{t}", p.x - t, p.y - t))
    scene = Scene(scaled, witnesses)
    g = build_oracle(scene, "positive")
    n = len(points)
    if len(g.edges) != n * (n - 1) // 2:
        raise RealizationFailed("construction left a pair unwitnessed")
    return scene


def grid_instance(k: int) -> list[PlanePoint]:
    """A k-by-k grid turned slightly clockwise, in exact integers."""
    if k < 2:
        raise ValueError("k must be at least 2")
    d = 10 * k * k
    return [PlanePoint(f"g{i}_{j}", i * d + j, j * d - i) for i in range(1, k + 1) for j in range(1, k + 1)]


def _grid_neighbor_pairs(k: int) -> list[tuple[int, int]]:
    idx = lambda i, j: (i - 1) * k + (j - 1)  # noqa: E731
    pairs = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i < k:
                pairs.append((idx(i, j), idx(i + 1, j)))
            if j < k:
                pairs.append((idx(i, j), idx(i, j + 1)))
    return pairs


def disjoint_certificate(points: Sequence[PlanePoint], k: int) -> StabbingCertificate:
    """Lower bound from the boxes of grid neighbours, checked pairwise disjoint."""
    points = list(points)
    if len(points) != k * k:
        raise ValueError("expected the k*k points of grid_instance(k)")
    boxes = [box_of(points[a], points[b]) for a, b in _grid_neighbor_pairs(k)]
    for (i, b1), (j, b2) in itertools.combinations(enumerate(boxes), 2):
        if b1.overlaps(b2):
            raise NotDisjoint(i, j)
    # a witness lies in at most one of these boxes, and each needs one
    return StabbingCertificate(tuple(points), tuple(boxes), None, len(boxes), None)


def certificate_for_grid(k: int) -> StabbingCertificate:
    points = grid_instance(k)
    lower = disjoint_certificate(points, k)
    upper = stab_construct(points)
    return StabbingCertificate(
        lower.instance, lower.lower_bound_boxes, upper.pos_witnesses, lower.lower, len(upper.pos_witnesses)
    )


# -- exact minimum ----------------------------------------------------------------


def _box_masks(points: Sequence[PlanePoint]) -> tuple[list[int], int]:
    """Per pair, the bitmask of rank-space cells inside its box."""
    n = len(points)
    xr = _ranks([p.x for p in points])
    yr = _ranks([p.y for p in points])
    side = n - 1
    masks = []
    for a, b in itertools.combinations(range(n), 2):
        x0, x1 = sorted((xr[a], xr[b]))
        y0, y1 = sorted((yr[a], yr[b]))
        m = 0
        for cx in range(x0, x1):
            for cy in range(y0, y1):
                m |= 1 << ((cx - 1) * side + (cy - 1))
        masks.append(m)
    return masks, side * side


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _packing_bound(masks: list[int]) -> int:
    # greedy pairwise-disjoint selection, smallest boxes first
    used = 0
    count = 0
    for m in sorted(masks, key=_popcount):
        if not m & used:
            used |= m
            count += 1
    return count


def _greedy_cover(masks: list[int], cells: int) -> int:
    left = list(masks)
    count = 0
    while left:
        best = max(range(cells), key=lambda c: sum(m >> c & 1 for m in left))
        left = [m for m in left if not m >> best & 1]
        count += 1
    return count


def stab_exact(points: Sequence[PlanePoint], cap: int = 10**6) -> int:
    """Minimum number of witnesses making the graph on ``points`` complete.

    Minimum hitting set of the pair boxes by rank-space cells, by branch and
    bound. Raises CapExceeded after ``cap`` search nodes.
    """
    points = list(points)
    if len(points) < 2:
        raise TooFewPoints("need at least two points")
    Scene(points)
    masks, cells = _box_masks(points)
    # boxes containing another box are hit whenever the smaller one is
    masks = sorted(set(masks), key=_popcount)
    masks = [m for i, m in enumerate(masks) if not any(o & m == o for o in masks[:i])]
    best = _greedy_cover(masks, cells)
    nodes = 0

    def search(left: list[int], chosen: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > cap:
            raise CapExceeded(f"search exceeded {cap} nodes")
        if not left:
            best = min(best, chosen)
            return
        if chosen + _packing_bound(left) >= best:
            return
        target = min(left, key=_popcount)
        rest = target
        while rest:
            c = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            search([m for m in left if not m >> c & 1], chosen + 1)

    search(masks, 0)
    return best
