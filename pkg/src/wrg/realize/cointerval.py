"""Co-interval recognition through the complement's clique path."""

from __future__ import annotations

from functools import lru_cache

from ..graph import Graph
from .models import IntervalModel, model_from_endpoints


def perfect_elimination_order(g: Graph) -> list[str] | None:
    """A perfect elimination order of ``g``, or None when g is not chordal.

    Maximum cardinality search visits vertices in reverse elimination order;
    the order is then checked directly.
    """
    adj = g.adjacency()
    weight = {v: 0 for v in g.vertices}
    visited: list[str] = []
    left = set(g.vertices)
    while left:
        v = max(sorted(left), key=lambda u: weight[u])
        left.discard(v)
        visited.append(v)
        for w in adj[v]:
            if w in left:
                weight[w] += 1
    order = visited[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(w != parent and w not in adj[parent] for w in later):
            return None
    return order


def maximal_cliques_chordal(g: Graph, order: list[str]) -> list[frozenset]:
    """Maximal cliques of a chordal graph from its elimination order."""
    adj = g.adjacency()
    pos = {v: i for i, v in enumerate(order)}
    cands = [frozenset([v, *(w for w in adj[v] if pos[w] > pos[v])]) for v in order]
    cands = sorted(set(cands), key=len, reverse=True)
    cliques: list[frozenset] = []
    for c in cands:
        if not any(c <= d for d in cliques):
            cliques.append(c)
    return sorted(cliques, key=lambda c: sorted(c))


def clique_path(cliques: list[frozenset]) -> list[int] | None:
    """Order the cliques so that each vertex occupies a consecutive run."""
    m = len(cliques)
    if m == 0:
        return []

    @lru_cache(maxsize=None)
    def extend(placed: int, last: int):
        if placed == (1 << m) - 1:
            return ()
        seen = set()
        for i in range(m):
            if placed >> i & 1:
                seen |= cliques[i]
        closed = seen - cliques[last]
        for i in range(m):
            if placed >> i & 1 or cliques[i] & closed:
                continue
            rest = extend(placed | 1 << i, i)
            if rest is not None:
                return (i,) + rest
        return None

    for first in range(m):
        rest = extend(1 << first, first)
        if rest is not None:
            return [first, *rest]
    return None


def interval_model(h: Graph) -> IntervalModel | None:
    """Interval model of ``h`` itself, or None if h is not an interval graph."""
    if not h.vertices:
        return IntervalModel({})
    order = perfect_elimination_order(h)
    if order is None:
        return None
    cliques = maximal_cliques_chordal(h, order)
    path = clique_path(cliques)
    if path is None:
        return None
    first: dict[str, int] = {}
    last: dict[str, int] = {}
    for slot, ci in enumerate(path):
        for v in cliques[ci]:
            first.setdefault(v, slot)
            last[v] = slot
    # touching clique runs share a slot, so they must keep intersecting
    model = model_from_endpoints({v: (first[v], last[v]) for v in h.vertices})
    if model.intersection_graph().edges != h.edges:
        return None
    return model


def recognize_cointerval(g: Graph) -> IntervalModel | None:
    """Interval model of the complement of ``g`` (adjacent iff disjoint), or None."""
    model = interval_model(g.complement())
    if model is None:
        return None
    # certificate: disjointness must reproduce g exactly
    if model.intersection_graph().complement().edges != g.edges:
        return None
    return model
