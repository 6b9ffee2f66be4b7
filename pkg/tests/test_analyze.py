import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from wrg.analyze import (
    Exceeds,
    detect_staircase_type,
    diameter,
    domination_number,
    feasibility_report,
    find_independent_triple,
    gen_supernova,
    minimize_witnesses,
    nontrivial_components,
    witnessed_pairs,
)
from wrg.build import build_oracle
from wrg.errors import DisconnectedInput
from wrg.geometry import PlanePoint, Quadrant, Scene, quadrant_of
from wrg.graph import Graph, complete_graph, cycle_graph, disjoint_union, edge, empty_graph, path_graph

from oracles import all_graphs_up_to, brute_domination, brute_has_triple, random_scene, to_nx


def spider(legs):
    es, vs = [], ["c"]
    for i, length in enumerate(legs):
        prev = "c"
        for j in range(length):
            v = f"l{i}_{j}"
            vs.append(v)
            es.append((prev, v))
            prev = v
    return Graph.from_edges(vs, es)


def test_components():
    assert nontrivial_components(empty_graph(5)) == []
    g = disjoint_union(path_graph(4, "a"), path_graph(4, "b"), empty_graph(1, "z"))
    assert sorted(map(len, nontrivial_components(g))) == [4, 4]


def test_worked_scene_is_connected():
    g = Graph.from_edges("abcd", [("a", "b"), ("a", "d"), ("b", "d"), ("c", "d")])
    assert nontrivial_components(g) == [set("abcd")]


def test_diameters():
    assert diameter(path_graph(2)) == 1
    assert diameter(path_graph(7)) == 6
    assert diameter(cycle_graph(4)) == 2
    with pytest.raises(DisconnectedInput):
        diameter(disjoint_union(path_graph(2, "a"), path_graph(2, "b")))


def test_independent_triples():
    three_k2 = disjoint_union(path_graph(2, "a"), path_graph(2, "b"), path_graph(2, "c"))
    assert find_independent_triple(three_k2) is not None
    triple = find_independent_triple(spider([2, 2, 2]))
    assert set(triple) == {("l0_0", "l0_1"), ("l1_0", "l1_1"), ("l2_0", "l2_1")}
    assert find_independent_triple(path_graph(7)) is None


def test_domination_values():
    assert domination_number(complete_graph(6)) == 1
    assert domination_number(path_graph(4)) == 2
    assert domination_number(gen_supernova(6)) == 6
    assert domination_number(gen_supernova(6), cap=5) == Exceeds(5)
    assert str(Exceeds(5)) == ">5"
    with pytest.raises(ValueError):
        domination_number(path_graph(3), cap=0)


def test_supernova_shape():
    assert gen_supernova(1).edges == {("k1", "l1")}
    six = gen_supernova(6)
    assert len(six.vertices) == 12 and len(six.edges) == 21
    assert nx.is_isomorphic(to_nx(gen_supernova(2)), to_nx(path_graph(4)))


def test_feasibility_examples():
    rep = feasibility_report(gen_supernova(6))
    assert rep.verdict == "fail" and "domination>4" in rep.violations
    three_k2 = disjoint_union(path_graph(2, "a"), path_graph(2, "b"), path_graph(2, "c"))
    rep = feasibility_report(three_k2)
    assert set(rep.violations) == {"components>2", "independent-triple"}
    rep = feasibility_report(disjoint_union(path_graph(4, "a"), path_graph(4, "b")))
    assert rep.verdict == "pass" and rep.domination_number_or_cap == 4
    assert rep.to_json()["verdict"] == "pass"


def test_minimize_examples():
    pts = [PlanePoint("p", 0, 0), PlanePoint("q", 10, 10)]
    twice = Scene(pts, [PlanePoint("u", 3, 4), PlanePoint("v", 5, 6)])
    assert [w.id for w in minimize_witnesses(twice).pos_witnesses] == ["v"]
    # quadrants II and III of w hold no vertex, so it witnesses nothing
    idle = Scene(pts + [PlanePoint("r", 12, 1)], [PlanePoint("w", -5, 5), PlanePoint("x", 11, 2)])
    kept = minimize_witnesses(idle)
    assert [w.id for w in kept.pos_witnesses] == ["x"]
    assert minimize_witnesses(kept) == kept


def test_staircase_types():
    one = Scene([PlanePoint("a", 3, 3), PlanePoint("b", 1, 1)], [PlanePoint("w", 2, 2)])
    assert detect_staircase_type(one) == {Quadrant.II, Quadrant.IV}
    # descending chain with every vertex to its upper right: quadrant III of each witness is empty
    down = Scene(
        [PlanePoint("a", 5, 6), PlanePoint("b", 7, 4)],
        [PlanePoint("w1", 1, 5), PlanePoint("w2", 3, 3), PlanePoint("w3", 6, 1)],
    )
    assert Quadrant.III in detect_staircase_type(down)
    assert detect_staircase_type(down) <= {Quadrant.I, Quadrant.III}


@st.composite
def positive_scenes(draw, max_n=12, max_m=8):
    seed = draw(st.integers(0, 2**32))
    rnd = random.Random(seed)
    return random_scene(rnd, draw(st.integers(0, max_n)), draw(st.integers(0, max_m)))


@given(positive_scenes())
def test_minimize_keeps_graph_and_is_minimal(scene):
    g = build_oracle(scene)
    m = minimize_witnesses(scene)
    assert build_oracle(m).edges == g.edges
    assert minimize_witnesses(m) == m
    for w in m.pos_witnesses:
        fewer = m.with_witnesses([v for v in m.pos_witnesses if v != w])
        assert build_oracle(fewer).edges != g.edges


@given(positive_scenes())
def test_minimal_witnesses_have_no_two_adjacent_empty_quadrants(scene):
    m = minimize_witnesses(scene)
    order = [Quadrant.I, Quadrant.II, Quadrant.III, Quadrant.IV]
    for w in m.pos_witnesses:
        occupied = {quadrant_of(w, p) for p in m.points}
        for a, b in zip(order, order[1:] + order[:1]):
            assert a in occupied or b in occupied


@given(positive_scenes())
def test_witnessed_pairs_match_oracle(scene):
    union = set()
    for w in scene.pos_witnesses:
        union |= witnessed_pairs(scene, w)
    assert union == build_oracle(scene).edges


@settings(max_examples=60)
@given(positive_scenes(max_n=14, max_m=10))
def test_necessary_conditions_hold_for_every_scene(scene):
    g = build_oracle(scene)
    rep = feasibility_report(g)
    assert rep.verdict == "pass", rep.violations


@given(positive_scenes())
def test_same_slope_independent_edges_do_not_cross_or_share(scene):
    g = build_oracle(scene)
    where = {p.id: p for p in scene.points}
    adj = g.adjacency()

    def box(e):
        p, q = where[e[0]], where[e[1]]
        return min(p.x, q.x), max(p.x, q.x), min(p.y, q.y), max(p.y, q.y)

    def inside(b, w):
        return b[0] < w.x < b[1] and b[2] < w.y < b[3]

    for e, f in itertools.combinations(g.sorted_edges(), 2):
        if g.slope[e] != g.slope[f] or set(e) & set(f):
            continue
        if any(v in adj[u] for u in e for v in f):
            continue
        be, bf = box(e), box(f)
        assert not any(inside(be, w) and inside(bf, w) for w in scene.pos_witnesses)
        # crossing: one box spans the other horizontally and is spanned vertically
        crosses = (be[0] < bf[0] and bf[1] < be[1] and bf[2] < be[2] and be[3] < bf[3]) or (
            bf[0] < be[0] and be[1] < bf[1] and be[2] < bf[2] and bf[3] < be[3]
        )
        assert not crosses


def test_structural_checks_match_brute_force_on_small_graphs():
    for g in all_graphs_up_to(6):
        assert (find_independent_triple(g) is not None) == brute_has_triple(g)
        assert domination_number(g) == brute_domination(g)
        comps = nontrivial_components(g)
        h = to_nx(g)
        ref = [c for c in nx.connected_components(h) if len(c) > 1]
        assert sorted(map(sorted, comps)) == sorted(map(sorted, ref))
        for c in comps:
            assert diameter(g, c) == nx.diameter(h.subgraph(c))


def test_staircase_domination_is_at_most_two():
    from wrg.realize import intervals_to_staircase, recognize_cointerval

    for g in all_graphs_up_to(6):
        if len(nontrivial_components(g)) != 1 or g.isolated():
            continue
        model = recognize_cointerval(g)
        if model is None:
            continue
        scene = intervals_to_staircase(model).scene
        assert domination_number(build_oracle(scene)) <= 2


def test_domination_at_most_four_without_isolated_vertices():
    rnd = random.Random(11)
    for _ in range(200):
        g = build_oracle(random_scene(rnd, rnd.randint(2, 14), rnd.randint(1, 8)))
        if g.isolated():
            continue
        assert domination_number(g) <= 4


def test_edge_helper_is_symmetric():
    assert edge("b", "a") == edge("a", "b") == ("a", "b")
