import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from strongcolor import (
    Drawing,
    Graph,
    InputError,
    contract_matching,
    edges_conflict,
    is_matching,
    is_strong_matching,
    split_by_drawing,
)
from strongcolor.instances import cube_graph, cycle_graph, complete_graph, path_graph, quad_optimal

import brute


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def graph_and_matching(draw, max_n=8):
    g = draw(graphs(max_n))
    order = draw(st.permutations(range(g.edge_count)))
    used, m = set(), []
    for e in order:
        u, v = g.edges[e]
        if u not in used and v not in used and draw(st.booleans()):
            m.append(e)
            used |= {u, v}
    return g, m


def test_graph_rejects_loops_duplicates_and_bad_ids():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_edge_ids_are_list_positions():
    g = Graph(4, [(2, 3), (0, 1), (1, 2)])
    assert g.edge_id(3, 2) == 0
    assert g.edge_id(1, 0) == 1
    assert g.degree(2) == 2 and g.max_degree() == 2


def test_path_end_edges_conflict():
    g = path_graph(4)
    assert edges_conflict(g, 0, 2)


def test_c6_opposite_edges_do_not_conflict():
    g = cycle_graph(6)  # edges i -> i+1
    assert not edges_conflict(g, 0, 3)
    assert edges_conflict(g, 0, 2)


def test_k5_all_pairs_conflict():
    g = complete_graph(5)
    assert all(edges_conflict(g, e, f) for e, f in itertools.combinations(range(10), 2))


def test_conflict_rejects_bad_ids():
    g = path_graph(3)
    with pytest.raises(InputError):
        edges_conflict(g, 0, 5)
    with pytest.raises(InputError):
        edges_conflict(g, 1, 1)


def test_conflict_matches_line_graph_distance_on_all_small_graphs():
    # every labelled graph on up to 5 vertices, plus a random sample on 6
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            ours = {(e, f) for e, f in itertools.combinations(range(g.edge_count), 2) if edges_conflict(g, e, f)}
            assert ours == brute.conflict_by_line_graph(g)
    rng = random.Random(6)
    pairs = list(itertools.combinations(range(6), 2))
    for _ in range(3000):
        g = Graph(6, [p for p in pairs if rng.random() < 0.5])
        ours = {(e, f) for e, f in itertools.combinations(range(g.edge_count), 2) if edges_conflict(g, e, f)}
        assert ours == brute.conflict_by_line_graph(g)


def test_contract_one_cycle_edge_gives_triangle():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    gm = contract_matching(g, [0])
    assert gm.vertex_count == 3
    assert sorted(k for _, _, k in gm.weighted_edges()) == [1, 1, 1]


def test_contract_perfect_matching_of_c4():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    gm = contract_matching(g, [0, 2])
    assert gm.vertex_count == 2
    assert list(gm.weighted_edges()) == [(0, 1, 2)]


def test_contract_k4_edge():
    g = complete_graph(4)
    e = g.edge_id(0, 1)
    gm = contract_matching(g, [e])
    x = gm.contracted_vertex(e)
    others = [v for v in gm.vertices() if v != x]
    assert gm.vertex_count == 3 and gm.edge_count == 5
    assert [gm.mult(x, v) for v in others] == [2, 2]
    assert gm.mult(*others) == 1


def test_contract_rejects_non_matching():
    with pytest.raises(InputError):
        contract_matching(path_graph(3), [0, 1])


@settings(max_examples=300, deadline=None)
@given(graph_and_matching())
def test_contraction_counts_and_origin(gm_pair):
    g, m = gm_pair
    gm = contract_matching(g, m)
    assert gm.vertex_count + len(m) == g.vertex_count
    assert gm.edge_count == g.edge_count - len(m)
    assert all(u != v for u, v, _ in gm.weighted_edges())
    covered = []
    for o in gm.origin:
        covered += [o.id] if o.kind == "vertex" else list(g.edges[o.id])
    assert sorted(covered) == list(range(g.vertex_count))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_conflict_is_symmetric(g):
    for e, f in itertools.combinations(range(g.edge_count), 2):
        assert edges_conflict(g, e, f) == edges_conflict(g, f, e)


def test_strong_matching_predicates():
    g = cycle_graph(6)
    assert is_matching(g, [0, 2, 4]) and not is_strong_matching(g, [0, 2, 4])
    assert is_strong_matching(g, [0, 3])
    assert not is_matching(g, [0, 1])


def test_split_with_empty_drawing():
    g = cube_graph()
    h1, h2 = split_by_drawing(g, Drawing(()))
    assert h1.edges == g.edges and h2.edge_count == 0
    assert h2.vertex_count == g.vertex_count


def test_split_cube_with_one_crossing_pair():
    q = cube_graph()
    face = (0, 1, 3, 2)  # 0-1-3-2 is a face of the cube as generated
    assert all(q.has_edge(face[i], face[(i + 1) % 4]) for i in range(4))
    g = Graph(8, list(q.edges) + [(0, 3), (1, 2)])
    h1, h2 = split_by_drawing(g, Drawing.of([(12, 13)]))
    assert h1.edges == q.edges
    assert sorted(h2.edges) == [(0, 3), (1, 2)]


def test_split_quad_optimal_cube():
    g, d = quad_optimal("cube")
    h1, h2 = split_by_drawing(g, d)
    assert (h1.edge_count, h2.edge_count) == (12, 12)


def test_drawing_validation():
    g = Graph(4, [(0, 1), (2, 3), (1, 2), (0, 3)])
    with pytest.raises(InputError):
        split_by_drawing(g, Drawing.of([(0, 9)]))
    with pytest.raises(InputError):
        split_by_drawing(g, Drawing.of([(0, 1), (1, 2)]))
    with pytest.raises(InputError):
        split_by_drawing(g, Drawing.of([(0, 2)]))  # shares vertex 1
