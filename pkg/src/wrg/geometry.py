"""Exact planar primitives over integer coordinates.

Everything here is order-theoretic: boxes are open, containment is strict,
and no floating point enters a geometric decision.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from typing import Iterable, Mapping, Sequence

from .errors import CoordinateOverflow, DegenerateBox, DuplicateCoordinate, DuplicateId, WRGError

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class PlanePoint:
    id: str
    x: int
    y: int

    def moved(self, x: int, y: int, id: str | None = None) -> "PlanePoint":
        return PlanePoint(self.id if id is None else id, x, y)


@dataclass(frozen=True)
class OpenBox:
    """The open rectangle (x_lo, x_hi) x (y_lo, y_hi)."""

    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int

    def __post_init__(self):
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise DegenerateBox(f"empty box ({self.x_lo},{self.x_hi})x({self.y_lo},{self.y_hi})")

    def contains(self, w: PlanePoint) -> bool:
        return self.x_lo < w.x < self.x_hi and self.y_lo < w.y < self.y_hi

    def overlaps(self, other: "OpenBox") -> bool:
        """True iff the two open boxes share interior points."""
        return (
            self.x_lo < other.x_hi
            and other.x_lo < self.x_hi
            and self.y_lo < other.y_hi
            and other.y_lo < self.y_hi
        )

    def to_json(self) -> list[int]:
        return [self.x_lo, self.x_hi, self.y_lo, self.y_hi]


class Quadrant(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    def opposite(self) -> "Quadrant":
        return _OPPOSITE[self]


_OPPOSITE = {
    Quadrant.I: Quadrant.III,
    Quadrant.II: Quadrant.IV,
    Quadrant.III: Quadrant.I,
    Quadrant.IV: Quadrant.II,
}


def box_of(p: PlanePoint, q: PlanePoint) -> OpenBox:
    if p.x == q.x or p.y == q.y:
        raise DegenerateBox(f"{p.id!r} and {q.id!r} share a coordinate")
    return OpenBox(min(p.x, q.x), max(p.x, q.x), min(p.y, q.y), max(p.y, q.y))


def box_contains(b: OpenBox, w: PlanePoint) -> bool:
    return b.contains(w)


def quadrant_of(center: PlanePoint, other: PlanePoint) -> Quadrant:
    if center.x == other.x or center.y == other.y:
        raise DegenerateBox(f"{center.id!r} and {other.id!r} share a coordinate")
    if other.x > center.x:
        return Quadrant.I if other.y > center.y else Quadrant.IV
    return Quadrant.II if other.y > center.y else Quadrant.III


def _check_general_position(elements: Sequence[PlanePoint]) -> None:
    seen_ids: set[str] = set()
    seen_x: dict[int, str] = {}
    seen_y: dict[int, str] = {}
    for p in elements:
        if p.id in seen_ids:
            raise DuplicateId(f"identifier {p.id!r} used twice")
        seen_ids.add(p.id)
        if p.x in seen_x:
            raise DuplicateCoordinate("x", seen_x[p.x], p.id)
        if p.y in seen_y:
            raise DuplicateCoordinate("y", seen_y[p.y], p.id)
        seen_x[p.x] = p.id
        seen_y[p.y] = p.id


@dataclass(frozen=True)
class Scene:
    """Vertices plus signed witnesses, validated for general position."""

    points: tuple[PlanePoint, ...] = ()
    pos_witnesses: tuple[PlanePoint, ...] = ()
    neg_witnesses: tuple[PlanePoint, ...] = ()

    def __post_init__(self):
        for name in ("points", "pos_witnesses", "neg_witnesses"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for p in self.elements():
            if not isinstance(p.x, int) or not isinstance(p.y, int):
                raise WRGError(f"non-integer coordinate on {p.id!r}; use normalize_scene")
            if abs(p.x) > INT64_MAX or abs(p.y) > INT64_MAX:
                raise CoordinateOverflow(f"coordinate of {p.id!r} exceeds 64-bit range")
        _check_general_position(self.elements())

    def elements(self) -> tuple[PlanePoint, ...]:
        return self.points + self.pos_witnesses + self.neg_witnesses

    @property
    def witnesses(self) -> tuple[PlanePoint, ...]:
        return self.pos_witnesses + self.neg_witnesses

    def point(self, pid: str) -> PlanePoint:
        for p in self.elements():
            if p.id == pid:
                return p
        raise KeyError(pid)

    def transformed(self, fn) -> "Scene":
        """Apply ``fn(x, y) -> (x, y)`` to every element."""

        def move(ps):
            return tuple(p.moved(*fn(p.x, p.y)) for p in ps)

        return Scene(move(self.points), move(self.pos_witnesses), move(self.neg_witnesses))

    def with_points(self, points: Iterable[PlanePoint]) -> "Scene":
        return Scene(tuple(points), self.pos_witnesses, self.neg_witnesses)

    def with_witnesses(self, pos: Iterable[PlanePoint] = (), neg: Iterable[PlanePoint] = ()) -> "Scene":
        return Scene(self.points, tuple(pos), tuple(neg))


def rotate_ccw(scene: Scene, times: int = 1) -> Scene:
    """Rotate by multiples of 90 degrees; quadrant I goes to II and so on."""
    for _ in range(times % 4):
        scene = scene.transformed(lambda x, y: (-y, x))
    return scene


# -- normalization -----------------------------------------------------------


@dataclass(frozen=True)
class NormalizedScene:
    scene: Scene
    scale: int
    x_order: tuple[str, ...] = field(default=())
    y_order: tuple[str, ...] = field(default=())


def _to_decimal(value) -> Decimal:
    if isinstance(value, float):
        value = repr(value)
    try:
        d = Decimal(str(value))
    except InvalidOperation as exc:
        raise WRGError(f"not a number: {value!r}") from exc
    if not d.is_finite():
        raise WRGError(f"not a finite number: {value!r}")
    return d


def _raw_items(raw) -> tuple[list, list, list]:
    if isinstance(raw, Scene):
        return list(raw.points), list(raw.pos_witnesses), list(raw.neg_witnesses)
    pts = [(p["id"], p["x"], p["y"]) for p in raw.get("points", [])]
    pos, neg = [], []
    for w in raw.get("witnesses", []):
        (neg if w.get("sign", "+") == "-" else pos).append((w["id"], w["x"], w["y"]))
    for key, bucket in (("pos_witnesses", pos), ("neg_witnesses", neg)):
        bucket.extend((w["id"], w["x"], w["y"]) for w in raw.get(key, []))
    return pts, pos, neg


def normalize_scene(raw: Scene | Mapping, tie_break: bool = False) -> NormalizedScene:
    """Scale decimal coordinates to integers and verify general position.

    ``raw`` is a :class:`Scene` or a mapping in the scene JSON layout.
    Coordinates are multiplied by the smallest power of ten that clears every
    fractional part. With ``tie_break`` the result is re-expressed in rank
    space, ties broken by input order instead of being rejected.
    """
    groups = _raw_items(raw)
    groups = [[(p.id, p.x, p.y) if isinstance(p, PlanePoint) else p for p in g] for g in groups]
    flat = [item for g in groups for item in g]
    ids = [str(i) for i, _, _ in flat]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise DuplicateId(f"identifier {dup!r} used twice")

    decs = [(_to_decimal(x), _to_decimal(y)) for _, x, y in flat]
    exponent = 0
    for dx, dy in decs:
        for d in (dx, dy):
            exponent = max(exponent, -d.normalize().as_tuple().exponent)
    scale = 10**exponent
    coords = []
    for dx, dy in decs:
        x, y = dx * scale, dy * scale
        if x != x.to_integral_value() or y != y.to_integral_value():
            raise WRGError("scaling failed to clear fractional parts")
        coords.append((int(x), int(y)))
    for (pid, _, _), (x, y) in zip(flat, coords):
        if abs(x) > INT64_MAX or abs(y) > INT64_MAX:
            raise CoordinateOverflow(f"coordinate of {pid!r} exceeds 64-bit range after x{scale}")

    if tie_break:
        xr = _ranks([c[0] for c in coords])
        yr = _ranks([c[1] for c in coords])
        coords = list(zip(xr, yr))
        scale = 1

    made = [PlanePoint(str(pid), x, y) for (pid, _, _), (x, y) in zip(flat, coords)]
    n0, n1 = len(groups[0]), len(groups[1])
    scene = Scene(tuple(made[:n0]), tuple(made[n0 : n0 + n1]), tuple(made[n0 + n1 :]))
    els = scene.elements()
    return NormalizedScene(
        scene,
        scale,
        tuple(p.id for p in sorted(els, key=lambda p: p.x)),
        tuple(p.id for p in sorted(els, key=lambda p: p.y)),
    )


def _ranks(values: Sequence[int]) -> list[int]:
    # stable: equal values are ordered by input index
    order = sorted(range(len(values)), key=lambda i: (values[i], i))
    rank = [0] * len(values)
    for r, i in enumerate(order, 1):
        rank[i] = r
    return rank


def rank_space(scene: Scene) -> Scene:
    """Replace coordinates by ranks 1..N over all elements; the graph is unchanged."""
    els = scene.elements()
    xr = _ranks([p.x for p in els])
    yr = _ranks([p.y for p in els])
    ranked = iter(p.moved(x, y) for p, x, y in zip(els, xr, yr))
    n0, n1 = len(scene.points), len(scene.pos_witnesses)
    return Scene(
        tuple(next(ranked) for _ in range(n0)),
        tuple(next(ranked) for _ in range(n1)),
        tuple(ranked),
    )


# -- chains ------------------------------------------------------------------


def longest_monotone_chain(points: Sequence[PlanePoint], direction: str = "ascending") -> list[PlanePoint]:
    """Longest chain increasing in x and monotone in y, by patience sorting."""
    if direction not in ("ascending", "descending"):
        raise ValueError(f"unknown direction {direction!r}")
    sign = 1 if direction == "ascending" else -1
    pts = sorted(points, key=lambda p: p.x)
    tails: list[int] = []
    tail_idx: list[int] = []
    prev = [-1] * len(pts)
    for i, p in enumerate(pts):
        key = sign * p.y
        k = bisect.bisect_left(tails, key)
        if k == len(tails):
            tails.append(key)
            tail_idx.append(i)
        else:
            tails[k] = key
            tail_idx[k] = i
        prev[i] = tail_idx[k - 1] if k else -1
    chain = []
    i = tail_idx[-1] if tail_idx else -1
    while i >= 0:
        chain.append(pts[i])
        i = prev[i]
    return chain[::-1]


def is_chain(points: Sequence[PlanePoint], direction: str) -> bool:
    pts = sorted(points, key=lambda p: p.x)
    if direction == "ascending":
        return all(a.y < b.y for a, b in zip(pts, pts[1:]))
    return all(a.y > b.y for a, b in zip(pts, pts[1:]))
