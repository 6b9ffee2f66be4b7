"""Combinatorial graphs over string identifiers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

Edge = tuple[str, str]


def edge(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``edges`` holds canonical pairs ``(u, v)`` with ``u < v``. ``slope`` is
    filled by geometric builds and maps each edge to ``"+"`` or ``"-"``.
    """

    vertices: tuple[str, ...]
    edges: frozenset = frozenset()
    slope: Mapping[Edge, str] | None = field(default=None, compare=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex")
        object.__setattr__(self, "vertices", verts)
        vs = set(verts)
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge {u!r}-{v!r} uses an unknown vertex")
            canon.add(edge(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def _trusted(cls, vertices: tuple, edges: frozenset, slope=None) -> "Graph":
        # caller guarantees canonical, valid edges
        g = object.__new__(cls)
        object.__setattr__(g, "vertices", vertices)
        object.__setattr__(g, "edges", edges)
        object.__setattr__(g, "slope", slope)
        return g

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        return cls(tuple(vertices), frozenset(edges))

    def __len__(self):
        return len(self.vertices)

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: str, v: str) -> bool:
        return edge(u, v) in self.edges

    def complement(self) -> "Graph":
        pairs = itertools.combinations(self.vertices, 2)
        return Graph(self.vertices, frozenset(edge(u, v) for u, v in pairs if edge(u, v) not in self.edges))

    def induced(self, keep: Iterable[str]) -> "Graph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        es = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        slope = None if self.slope is None else {e: s for e, s in self.slope.items() if e in es}
        return Graph(verts, es, slope)

    def relabeled(self, mapping: Mapping[str, str]) -> "Graph":
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            frozenset(edge(mapping[u], mapping[v]) for u, v in self.edges),
        )

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def isolated(self) -> list[str]:
        touched = {v for e in self.edges for v in e}
        return [v for v in self.vertices if v not in touched]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        out = {"vertices": sorted(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}
        if self.slope is not None:
            out["slope"] = {f"{u}|{v}": self.slope[(u, v)] for u, v in self.sorted_edges()}
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "Graph":
        edges = frozenset(edge(str(u), str(v)) for u, v in data.get("edges", []))
        slope = None
        if "slope" in data:
            slope = {}
            for key, s in data["slope"].items():
                u, v = key.split("|")
                slope[edge(u, v)] = s
        return cls(tuple(str(v) for v in data.get("vertices", [])), edges, slope)


def disjoint_union(*graphs: Graph) -> Graph:
    verts = tuple(v for g in graphs for v in g.vertices)
    return Graph(verts, frozenset(e for g in graphs for e in g.edges))


def join(g1: Graph, g2: Graph) -> Graph:
    cross = {edge(u, v) for u in g1.vertices for v in g2.vertices}
    return Graph(g1.vertices + g2.vertices, g1.edges | g2.edges | cross)


def path_graph(n: int, prefix: str = "p") -> Graph:
    vs = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    return Graph(vs, frozenset(edge(a, b) for a, b in zip(vs, vs[1:])))


def cycle_graph(n: int, prefix: str = "c") -> Graph:
    vs = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    return Graph(vs, frozenset(edge(vs[i], vs[(i + 1) % n]) for i in range(n)))


def complete_graph(n: int, prefix: str = "k") -> Graph:
    vs = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    return Graph(vs, frozenset(edge(a, b) for a, b in itertools.combinations(vs, 2)))


def empty_graph(n: int, prefix: str = "e") -> Graph:
    return Graph(tuple(f"{prefix}{i}" for i in range(1, n + 1)))
