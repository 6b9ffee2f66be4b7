"""Result types shared by the realizers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..build import build_oracle
from ..errors import InvalidModel, RealizationFailed
from ..geometry import Scene
from ..graph import Graph, edge


@dataclass(frozen=True)
class IntervalModel:
    """Closed intervals with 2n pairwise distinct integer endpoints."""

    intervals: Mapping[str, tuple[int, int]]

    def __post_init__(self):
        ivs = {str(v): (int(a), int(b)) for v, (a, b) in dict(self.intervals).items()}
        ends = []
        for v, (a, b) in ivs.items():
            if not a < b:
                raise InvalidModel(f"interval of {v!r} has left >= right")
            ends += [a, b]
        if len(set(ends)) != len(ends):
            raise InvalidModel("interval endpoints are not pairwise distinct")
        object.__setattr__(self, "intervals", ivs)

    def intersection_graph(self) -> Graph:
        items = sorted(self.intervals.items())
        es = set()
        for i, (u, (a, b)) in enumerate(items):
            for v, (c, d) in items[i + 1 :]:
                if a <= d and c <= b:
                    es.add(edge(u, v))
        return Graph(tuple(v for v, _ in items), frozenset(es))

    def to_json(self) -> dict:
        return {"intervals": {v: list(self.intervals[v]) for v in sorted(self.intervals)}}

    @classmethod
    def from_json(cls, data: Mapping) -> "IntervalModel":
        return cls({v: tuple(iv) for v, iv in data["intervals"].items()})


def model_from_endpoints(spans: Mapping[str, tuple]) -> IntervalModel:
    """Turn intervals with possibly shared endpoints into a distinct-endpoint model.

    At a shared value left endpoints come first, so touching intervals keep
    intersecting.
    """
    events = []
    for v, (a, b) in spans.items():
        events.append((a, 0, v))
        events.append((b, 1, v))
    events.sort()
    out: dict[str, list[int]] = {v: [0, 0] for v in spans}
    for rank, (_, side, v) in enumerate(events, 1):
        out[v][side] = rank
    return IntervalModel({v: tuple(ab) for v, ab in out.items()})


@dataclass(frozen=True)
class Realization:
    """A scene plus the map from graph vertices to scene point ids."""

    scene: Scene
    vertex_map: Mapping[str, str]
    mode: str = "positive"
    notes: dict = field(default_factory=dict, compare=False)

    def rebuilt_graph(self) -> Graph:
        """The scene's graph, relabeled back to the source vertex names."""
        built = build_oracle(self.scene, self.mode)
        back = {pid: v for v, pid in self.vertex_map.items()}
        return built.relabeled(back)

    def to_json(self) -> dict:
        from ..io import scene_to_json

        return {
            "mode": self.mode,
            "scene": scene_to_json(self.scene),
            "vertex_map": {v: self.vertex_map[v] for v in sorted(self.vertex_map)},
        }


def verified(real: Realization, g: Graph) -> Realization:
    """Return ``real`` after checking that it rebuilds ``g`` exactly."""
    if set(real.vertex_map) != set(g.vertices) or len(set(real.vertex_map.values())) != len(g.vertices):
        raise RealizationFailed("vertex map is not a bijection onto the graph")
    if {p.id for p in real.scene.points} != set(real.vertex_map.values()):
        raise RealizationFailed("vertex map does not cover the scene points")
    rebuilt = real.rebuilt_graph()
    if rebuilt.edges != g.edges:
        missing = sorted(g.edges - rebuilt.edges)[:3]
        extra = sorted(rebuilt.edges - g.edges)[:3]
        raise RealizationFailed(f"rebuilt graph differs: missing {missing}, extra {extra}")
    return real


def fresh_names(prefix: str, count: int, taken) -> list[str]:
    """``count`` identifiers ``prefix1, prefix2, ...`` avoiding ``taken``."""
    taken = set(taken)
    tag = prefix
    while any(name.startswith(tag) for name in taken):
        tag += "_"
    return [f"{tag}{i}" for i in range(1, count + 1)]
