import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from wrg.analyze import detect_staircase_type, diameter, find_independent_triple, minimize_witnesses, nontrivial_components
from wrg.build import build_oracle
from wrg.errors import InvalidModel, NotATree, NotCointerval, NotStaircase, NotTwoComponents
from wrg.geometry import PlanePoint, Quadrant, Scene, rotate_ccw
from wrg.graph import Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, join, path_graph
from wrg.realize import (
    IndependentTriple,
    IntervalModel,
    compose_join,
    intervals_to_staircase,
    realize_pm,
    realize_tree,
    realize_two_components,
    recognize_cointerval,
    staircase_to_intervals,
)

from oracles import all_graphs_up_to, all_trees_up_to, from_nx, is_interval_graph, score, to_nx


# -- co-interval recognition ----------------------------------------------------------


def test_recognition_examples():
    k5 = recognize_cointerval(complete_graph(5))
    assert k5 is not None and not k5.intersection_graph().complement().edges ^ complete_graph(5).edges
    assert recognize_cointerval(cycle_graph(5)) is None
    p4 = recognize_cointerval(path_graph(4))
    assert p4.intersection_graph().complement().edges == path_graph(4).edges
    assert recognize_cointerval(cycle_graph(4)) is not None


def test_interval_model_validation():
    with pytest.raises(InvalidModel):
        IntervalModel({"a": (1, 3), "b": (3, 5)})
    with pytest.raises(InvalidModel):
        IntervalModel({"a": (4, 3)})
    m = IntervalModel({"a": (1, 3), "b": (2, 5)})
    assert IntervalModel.from_json(m.to_json()) == m


def test_recognition_agrees_with_endpoint_search():
    for g in all_graphs_up_to(6):
        model = recognize_cointerval(g)
        assert (model is not None) == is_interval_graph(g.complement()), g
        if model is not None:
            assert model.intersection_graph().complement().edges == g.edges


# -- staircases -------------------------------------------------------------------------


def test_two_intervals():
    apart = intervals_to_staircase(IntervalModel({"a": (1, 2), "b": (3, 4)}))
    assert apart.rebuilt_graph().edges == {("a", "b")}
    crossing = intervals_to_staircase(IntervalModel({"a": (1, 3), "b": (2, 4)}))
    assert crossing.rebuilt_graph().edges == set()


def test_staircase_is_type_four_and_round_trips():
    m = recognize_cointerval(path_graph(4))
    real = intervals_to_staircase(m)
    assert real.rebuilt_graph().edges == path_graph(4).edges
    assert Quadrant.IV in detect_staircase_type(minimize_witnesses(real.scene))
    back = staircase_to_intervals(real.scene)
    assert back.intersection_graph().edges == m.intersection_graph().edges


def test_single_vertex_staircase():
    m = staircase_to_intervals(Scene([PlanePoint("v", 0, 0)]))
    assert list(m.intervals) == ["v"]


def test_rotated_staircases_read_back():
    g = path_graph(4)
    scene = intervals_to_staircase(recognize_cointerval(g)).scene
    for turns in range(4):
        m = staircase_to_intervals(rotate_ccw(scene, turns))
        assert m.intersection_graph().complement().edges == g.edges


def test_not_a_staircase():
    # ascending and descending witnesses mixed, vertices all around
    scene = Scene(
        [PlanePoint("a", 0, 0), PlanePoint("b", 10, 10), PlanePoint("c", 1, 11), PlanePoint("d", 11, 1)],
        [PlanePoint("u", 3, 3), PlanePoint("v", 7, 4), PlanePoint("w", 5, 8)],
    )
    with pytest.raises(NotStaircase):
        staircase_to_intervals(scene)


@settings(max_examples=60)
@given(st.integers(1, 8), st.integers(0, 2**32))
def test_random_cointerval_scenes(n, seed):
    rnd = random.Random(seed)
    ends = rnd.sample(range(100), 2 * n)
    model = IntervalModel({f"v{i}": tuple(sorted(ends[2 * i : 2 * i + 2])) for i in range(n)})
    real = intervals_to_staircase(model)
    g = real.rebuilt_graph()
    assert g.edges == model.intersection_graph().complement().edges
    back = staircase_to_intervals(real.scene)
    assert back.intersection_graph().complement().edges == g.edges


def _stair(g):
    return intervals_to_staircase(recognize_cointerval(g)).scene


def test_join_examples():
    k1a, k1b = _stair(empty_graph(1, "a")), _stair(empty_graph(1, "b"))
    assert build_oracle(compose_join(k1a, k1b)).edges == {("a1", "b1")}
    c4 = build_oracle(compose_join(_stair(empty_graph(2, "a")), _stair(empty_graph(2, "b"))))
    assert nx.is_isomorphic(to_nx(c4), nx.cycle_graph(4))
    k3 = build_oracle(compose_join(_stair(complete_graph(2, "a")), k1b))
    assert len(k3.edges) == 3


def test_join_keeps_type_four():
    scene = compose_join(_stair(path_graph(4, "a")), _stair(cycle_graph(4, "b")))
    assert Quadrant.IV in detect_staircase_type(scene)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_join_identity(seed):
    rnd = random.Random(seed)
    graphs = [g for g in all_graphs_up_to(4) if recognize_cointerval(g) is not None]
    g1 = rnd.choice(graphs)
    g2 = rnd.choice(graphs)
    g1 = g1.relabeled({v: f"a{v}" for v in g1.vertices})
    g2 = g2.relabeled({v: f"b{v}" for v in g2.vertices})
    joined = build_oracle(compose_join(_stair(g1), _stair(g2)))
    assert joined.edges == join(g1, g2).edges


# -- two components -----------------------------------------------------------------------


def test_two_paths():
    g = disjoint_union(path_graph(4, "a"), path_graph(4, "b"))
    rebuilt = realize_two_components(g).rebuilt_graph()
    assert rebuilt.edges == g.edges
    assert [diameter(rebuilt, c) for c in nontrivial_components(rebuilt)] == [3, 3]


def test_non_cointerval_component():
    g = disjoint_union(cycle_graph(5, "a"), complete_graph(3, "b"))
    with pytest.raises(NotCointerval) as info:
        realize_two_components(g)
    assert info.value.component == 1


def test_isolated_vertices_stay_isolated():
    g = disjoint_union(path_graph(2, "a"), path_graph(2, "b"), empty_graph(3, "z"))
    real = realize_two_components(g)
    assert len(real.scene.points) == 7
    rebuilt = real.rebuilt_graph()
    assert sorted(rebuilt.isolated()) == ["z1", "z2", "z3"]


def test_wrong_component_count():
    with pytest.raises(NotTwoComponents):
        realize_two_components(path_graph(4))


def test_cluster_placement():
    g = disjoint_union(path_graph(4, "a"), cycle_graph(4, "b"), empty_graph(2, "z"))
    scene = realize_two_components(g).scene
    k = max(w.x + w.y for w in scene.pos_witnesses)
    upper = [w for w in scene.pos_witnesses if w.x + w.y == k]
    lower = [w for w in scene.pos_witnesses if w.x + w.y == -k]
    assert len(upper) + len(lower) == len(scene.pos_witnesses)
    comps = {frozenset(c) for c in nontrivial_components(g)}
    for p in scene.points:
        if p.id.startswith("z"):
            assert -k < p.x + p.y < k
        elif p.x > 0:
            assert p.y > 0 and p.x + p.y < k
        else:
            assert p.y < 0 and p.x + p.y > -k
    assert len(comps) == 2


# -- trees -------------------------------------------------------------------------------


def test_tree_examples():
    star = from_nx(nx.star_graph(7))
    assert realize_tree(star).rebuilt_graph().edges == star.edges
    p7 = realize_tree(path_graph(7))
    assert diameter(p7.rebuilt_graph()) == 6
    spider = Graph.from_edges(
        ["c", "a1", "a2", "b1", "b2", "d1", "d2"],
        [("c", "a1"), ("a1", "a2"), ("c", "b1"), ("b1", "b2"), ("c", "d1"), ("d1", "d2")],
    )
    cert = realize_tree(spider)
    assert isinstance(cert, IndependentTriple)
    assert set(cert.edges) == {("a1", "a2"), ("b1", "b2"), ("d1", "d2")}


def test_tree_errors():
    with pytest.raises(NotATree):
        realize_tree(cycle_graph(4))
    with pytest.raises(NotATree):
        realize_tree(disjoint_union(path_graph(2, "a"), path_graph(1, "b")))


def test_tree_with_many_twins():
    # every leaf bag of the deep template well populated
    edges = [("r", "a"), ("r", "b"), ("a", "a2"), ("b", "b2")]
    edges += [("a", f"x{i}") for i in range(5)] + [("a2", f"y{i}") for i in range(7)]
    edges += [("b", f"s{i}") for i in range(3)] + [("b2", f"t{i}") for i in range(6)]
    t = Graph.from_edges({v for e in edges for v in e}, edges)
    real = realize_tree(t)
    assert real.rebuilt_graph().edges == t.edges
    assert diameter(real.rebuilt_graph()) == 6


def test_trees_up_to_eight():
    for t in all_trees_up_to(8):
        res = realize_tree(t)
        if find_independent_triple(t) is None:
            assert res.rebuilt_graph().edges == t.edges
        else:
            assert isinstance(res, IndependentTriple)


# -- mixed signs --------------------------------------------------------------------------


def _cells(real):
    spacing = real.notes["spacing"]
    return [(w.x // spacing, w.y // spacing) for w in real.scene.witnesses]


def test_pm_examples():
    k2 = realize_pm(complete_graph(2))
    assert len(k2.scene.pos_witnesses) == 1 and not k2.scene.neg_witnesses
    assert not realize_pm(empty_graph(5)).scene.witnesses
    c4 = realize_pm(cycle_graph(4))
    assert len(c4.scene.witnesses) == 9
    assert (len(c4.scene.pos_witnesses), len(c4.scene.neg_witnesses)) == (5, 4)


def test_pm_c4_trace():
    real = realize_pm(cycle_graph(4))
    s = real.notes["spacing"]
    signs = {(w.x // s, w.y // s): "+" for w in real.scene.pos_witnesses}
    signs.update({(w.x // s, w.y // s): "-" for w in real.scene.neg_witnesses})
    # cells are 1-based grid squares: diagonal for gap 1, corner squares otherwise
    assert signs == {
        (1, 1): "+", (2, 2): "+", (3, 3): "+",
        (1, 2): "-", (2, 1): "-", (2, 3): "-", (3, 2): "-",
        (1, 3): "+", (3, 1): "+",
    }


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 2**32))
def test_pm_random(n, density, seed):
    rnd = random.Random(seed)
    g = from_nx(nx.gnp_random_graph(n, density, seed=rnd.randrange(2**31)))
    real = realize_pm(g)
    assert real.rebuilt_graph().edges == g.edges
    assert len(real.scene.witnesses) <= (n - 1) ** 2
    cells = _cells(real)
    assert len(cells) == len(set(cells))
    for i, p in enumerate(real.scene.points):
        for q in real.scene.points[i + 1 :]:
            assert score(real.scene, p, q) in (0, 1)


def test_pm_custom_order():
    g = path_graph(5)
    order = ["p3", "p1", "p5", "p2", "p4"]
    real = realize_pm(g, order)
    assert [p.id for p in real.scene.points] == order
    assert real.rebuilt_graph().edges == g.edges
    with pytest.raises(ValueError):
        realize_pm(g, order[:-1])


def test_realization_json_shape():
    data = realize_pm(path_graph(3)).to_json()
    assert set(data) == {"mode", "scene", "vertex_map"}
    assert data["mode"] == "mixed"
