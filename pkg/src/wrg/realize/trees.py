"""Trees without three independent edges, drawn from two fixed templates.

Each template is a small labeled point set in rank space plus witness cells.
Template vertices whose role is "a bag of leaves" may be replaced by any
number of twins: copies placed next to each other, with no witness
coordinate between them, see exactly the same witnesses. Unused template
vertices are dropped, which yields the induced subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..analyze import find_independent_triple
from ..errors import NotATree, TemplateMismatch
from ..geometry import PlanePoint, Scene
from ..graph import Graph
from .models import Realization, fresh_names, verified


@dataclass(frozen=True)
class Template:
    # role -> (x rank, y rank)
    ranks: dict
    # witness cells; cell c lies between ranks c-1 and c
    cells: tuple
    leaf_roles: frozenset


# r - a - u with leaf bags R on r, A on a, U on u, plus r - b with leaf bag B.
# Covers every triple-free tree of diameter at most five.
SHALLOW = Template(
    ranks={"r": (2, 7), "a": (5, 0), "b": (7, 5), "u": (0, 3), "R": (6, 2), "A": (1, 4), "B": (3, 6), "U": (4, 1)},
    cells=((1, 2), (2, 1), (5, 7), (7, 6)),
    leaf_roles=frozenset("RABU"),
)

# r with exactly two children a and b; a has leaf bag A and one child a2
# with leaf bag A2, symmetrically for b. Covers diameter six.
DEEP = Template(
    ranks={
        "r": (2, 2), "a": (8, 6), "b": (5, 8), "a2": (6, 0), "b2": (0, 4),
        "A": (3, 1), "A2": (7, 3), "B": (1, 5), "B2": (4, 7),
    },
    cells=((1, 7), (3, 8), (7, 1), (8, 3)),
    leaf_roles=frozenset({"A", "A2", "B", "B2"}),
)


@dataclass(frozen=True)
class IndependentTriple:
    """Three pairwise independent edges: proof that no realization exists."""

    edges: tuple

    def to_json(self) -> dict:
        return {"certificate": "IndependentTriple", "edges": [list(e) for e in self.edges]}


def _check_tree(t: Graph) -> dict[str, set[str]]:
    n = len(t.vertices)
    if n == 0 or len(t.edges) != n - 1:
        raise NotATree("a tree on n vertices has n-1 edges and n >= 1")
    adj = t.adjacency()
    seen = {t.vertices[0]}
    stack = [t.vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise NotATree("graph is not connected")
    return adj


def _children(adj, v, parent):
    return sorted(w for w in adj[v] if w != parent)


def _leaf_bag(adj, v, parent):
    """Children of v when all of them are leaves, else None."""
    kids = _children(adj, v, parent)
    return kids if all(len(adj[k]) == 1 for k in kids) else None


def _split_hub(adj, v, parent):
    """Split v's children into leaves and at most one star-shaped child.

    Returns (leaves, star_child or None, star_leaves) or None.
    """
    leaves, stars = [], []
    for k in _children(adj, v, parent):
        if len(adj[k]) == 1:
            leaves.append(k)
        else:
            bag = _leaf_bag(adj, k, v)
            if bag is None:
                return None
            stars.append((k, bag))
    if len(stars) > 1:
        return None
    star, bag = stars[0] if stars else (None, [])
    return leaves, star, bag


def _match_shallow(adj, root) -> dict | None:
    kids = _children(adj, root, None)
    leaves = [k for k in kids if len(adj[k]) == 1]
    inner = [k for k in kids if len(adj[k]) > 1]
    if len(inner) > 2:
        return None
    roles = {"r": [root], "R": leaves}
    # the deeper child plays a, the star-shaped one plays b
    for a_first in (inner, inner[::-1]):
        assign = dict(roles)
        ok = True
        for role, k in zip(("a", "b"), a_first):
            if role == "a":
                split = _split_hub(adj, k, root)
                if split is None:
                    ok = False
                    break
                a_leaves, u, u_leaves = split
                assign.update(a=[k], A=a_leaves, u=[u] if u else [], U=u_leaves)
            else:
                bag = _leaf_bag(adj, k, root)
                if bag is None:
                    ok = False
                    break
                assign.update(b=[k], B=bag)
        if ok:
            return assign
    return None


def _match_deep(adj, root) -> dict | None:
    kids = _children(adj, root, None)
    if len(kids) != 2:
        return None
    assign = {"r": [root]}
    for (hub, inner, bag), k in zip((("a", "a2", "A2"), ("b", "b2", "B2")), kids):
        split = _split_hub(adj, k, root)
        if split is None:
            return None
        leaves, star, star_leaves = split
        assign.update({hub: [k], hub.upper(): leaves, inner: [star] if star else [], bag: star_leaves})
    return assign


def _place(template: Template, assign: dict) -> tuple[list[PlanePoint], int]:
    spread = max(len(vs) for vs in assign.values()) + 1
    # each rank slot gets room for a run of twins strictly left of its witnesses
    step = 2 * spread
    points = []
    for role, members in assign.items():
        rx, ry = template.ranks[role]
        for j, v in enumerate(members):
            points.append(PlanePoint(v, step * (rx + 1) + j, step * (ry + 1) + j))
    return points, step


def realize_tree(t: Graph):
    """A positive realization of tree ``t`` or its independent-triple certificate."""
    adj = _check_tree(t)
    triple = find_independent_triple(t)
    if triple is not None:
        return IndependentTriple(tuple(triple))
    for template, matcher in ((SHALLOW, _match_shallow), (DEEP, _match_deep)):
        for root in sorted(t.vertices):
            assign = matcher(adj, root)
            if assign is None:
                continue
            assign = {role: vs for role, vs in assign.items() if vs}
            points, step = _place(template, assign)
            names = fresh_names("w", len(template.cells), t.vertices)
            witnesses = [
                PlanePoint(name, step * cx + step // 2, step * cy + step // 2)
                for name, (cx, cy) in zip(names, template.cells)
            ]
            real = Realization(Scene(points, witnesses), {v: v for v in t.vertices})
            return verified(real, t)
    raise TemplateMismatch("triple-free tree fits no template")
