"""Structural analysis of (candidate) witness rectangle graphs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .build import build_oracle
from .errors import DisconnectedInput, WRGError
from .geometry import Quadrant, Scene, is_chain, quadrant_of
from .graph import Graph, edge


def nontrivial_components(g: Graph) -> list[set[str]]:
    """Connected components with at least one edge, ordered by smallest id."""
    adj = g.adjacency()
    seen: set[str] = set()
    comps = []
    for v in sorted(g.vertices):
        if v in seen or not adj[v]:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _bfs(adj, source, allowed) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph, component=None) -> int:
    """Largest shortest-path distance inside ``component`` (default: all of g)."""
    comp = set(g.vertices if component is None else component)
    if not comp:
        return 0
    adj = g.adjacency()
    best = 0
    for v in comp:
        dist = _bfs(adj, v, comp)
        if len(dist) != len(comp):
            raise DisconnectedInput("component is not connected")
        best = max(best, max(dist.values()))
    return best


def independent(g_adj, e, f) -> bool:
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    return not ({c, d} & g_adj[a] or {c, d} & g_adj[b])


def find_independent_triple(g: Graph):
    """Three pairwise independent edges, or None."""
    adj = g.adjacency()
    edges = g.sorted_edges()
    m = len(edges)
    # bitset of later edges independent of each edge
    indep = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if independent(adj, edges[i], edges[j]):
                indep[i] |= 1 << j
    for i in range(m):
        rest = indep[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            common = indep[i] & indep[j]
            if common:
                k = (common & -common).bit_length() - 1
                return edges[i], edges[j], edges[k]
    return None


@dataclass(frozen=True)
class Exceeds:
    """Domination number is larger than ``cap``."""

    cap: int

    def __str__(self):
        return f">{self.cap}"


def _closed_neighborhoods(g: Graph) -> tuple[list[str], list[int]]:
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    masks = [1 << i for i in range(len(verts))]
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return verts, masks


def minimum_dominating_set(g: Graph, cap: int | None = None) -> list[str] | None:
    verts, masks = _closed_neighborhoods(g)
    n = len(verts)
    full = (1 << n) - 1
    if n == 0:
        return []
    cap = n if cap is None else cap

    def search(covered, budget, chosen):
        if covered == full:
            return chosen
        if budget == 0:
            return None
        # some vertex of N[v] must be chosen for the first undominated v
        missing = ~covered & full
        v = (missing & -missing).bit_length() - 1
        options = masks[v]
        # try the candidates covering most new vertices first
        cands = []
        while options:
            u = (options & -options).bit_length() - 1
            options &= options - 1
            cands.append(u)
        cands.sort(key=lambda u: -bin(masks[u] & missing).count("1"))
        for u in cands:
            found = search(covered | masks[u], budget - 1, chosen + [u])
            if found is not None:
                return found
        return None

    for size in range(1, cap + 1):
        found = search(0, size, [])
        if found is not None:
            return [verts[i] for i in found]
    return None


def domination_number(g: Graph, cap: int | None = None):
    """Exact domination number by iterative deepening, or ``Exceeds(cap)``."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    best = minimum_dominating_set(g, cap)
    if best is None:
        return Exceeds(cap)
    return len(best)


# -- witness minimization -----------------------------------------------------------


def witnessed_pairs(scene: Scene, w) -> set[tuple[str, str]]:
    """Vertex pairs whose box contains ``w``: quadrant I x III and II x IV."""
    quads = {q: [] for q in Quadrant}
    for p in scene.points:
        quads[quadrant_of(w, p)].append(p.id)
    pairs = set()
    for a, b in ((Quadrant.I, Quadrant.III), (Quadrant.II, Quadrant.IV)):
        for u in quads[a]:
            for v in quads[b]:
                pairs.add(edge(u, v))
    return pairs


def minimize_witnesses(scene: Scene) -> Scene:
    """Drop redundant witnesses in input order until none can be dropped.

    The graph is unchanged and no single remaining witness is removable.
    """
    if scene.neg_witnesses:
        raise WRGError("witness minimization is defined for positive scenes")
    witnesses = list(scene.pos_witnesses)
    covers = [witnessed_pairs(scene, w) for w in witnesses]
    count: dict[tuple[str, str], int] = {}
    for c in covers:
        for e in c:
            count[e] = count.get(e, 0) + 1
    alive = [True] * len(witnesses)
    changed = True
    while changed:
        changed = False
        for i, c in enumerate(covers):
            if alive[i] and all(count[e] >= 2 for e in c):
                alive[i] = False
                changed = True
                for e in c:
                    count[e] -= 1
    return scene.with_witnesses([w for w, keep in zip(witnesses, alive) if keep])


# -- staircases ---------------------------------------------------------------------

_CHAIN = {
    Quadrant.I: "descending",
    Quadrant.II: "ascending",
    Quadrant.III: "descending",
    Quadrant.IV: "ascending",
}


def detect_staircase_type(scene: Scene) -> set[Quadrant]:
    """Staircase types the (minimized) scene satisfies.

    Type t needs the witnesses to form the chain that t prescribes
    (ascending for II and IV, descending for I and III) and quadrant t of
    every witness to be free of vertices.
    """
    ws = scene.witnesses
    types = set()
    for t, direction in _CHAIN.items():
        if not is_chain(ws, direction):
            continue
        if all(quadrant_of(w, p) is not t for w in ws for p in scene.points):
            types.add(t)
    return types


# -- necessary conditions -----------------------------------------------------------


@dataclass
class FeasibilityReport:
    nontrivial_component_count: int
    diameters: dict[int, int]
    independent_triple: tuple | None
    domination_number_or_cap: object
    violations: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "fail" if self.violations else "pass"

    def to_json(self) -> dict:
        dom = self.domination_number_or_cap
        return {
            "verdict": self.verdict,
            "violations": list(self.violations),
            "nontrivial_component_count": self.nontrivial_component_count,
            "diameters": {str(k): v for k, v in self.diameters.items()},
            "independent_triple": None
            if self.independent_triple is None
            else [list(e) for e in self.independent_triple],
            "domination_number": dom if isinstance(dom, int) else str(dom),
        }


def feasibility_report(g: Graph) -> FeasibilityReport:
    """Check the necessary conditions for being a positive WRG.

    A ``fail`` verdict certifies non-realizability. A ``pass`` proves nothing:
    the conditions are necessary only.
    """
    comps = nontrivial_components(g)
    diams = {i: diameter(g, c) for i, c in enumerate(comps)}
    triple = find_independent_triple(g)
    # induced subgraphs of WRGs are WRGs, so drop isolated vertices first
    core = g.induced(set().union(*comps)) if comps else Graph(())
    dom = domination_number(core, cap=5)

    violations = []
    if len(comps) > 2:
        violations.append("components>2")
    if len(comps) == 2 and any(d > 3 for d in diams.values()):
        violations.append("diameter>3")
    if len(comps) == 1 and diams[0] > 6:
        violations.append("diameter>6")
    if triple is not None:
        violations.append("independent-triple")
    if isinstance(dom, Exceeds):
        violations.append("domination>4")
    elif dom > 4:
        violations.append("domination>4")
    return FeasibilityReport(len(comps), diams, triple, dom, violations)


def gen_supernova(c: int) -> Graph:
    """K_c with one pendant leaf on every clique vertex."""
    if c < 1:
        raise ValueError("c must be at least 1")
    core = [f"k{i}" for i in range(1, c + 1)]
    leaves = [f"l{i}" for i in range(1, c + 1)]
    edges = {edge(a, b) for a, b in itertools.combinations(core, 2)}
    edges |= {edge(a, b) for a, b in zip(core, leaves)}
    return Graph(tuple(core + leaves), frozenset(edges))


def positive_graph(scene: Scene) -> Graph:
    return build_oracle(scene, "positive")
