import random

import pytest
from hypothesis import given, settings

from strongcolor import (
    Graph,
    InputError,
    NotBipartiteError,
    Status,
    bipartite_edge_color,
    chromatic_number,
    contract_matching,
    degeneracy_coloring,
    degeneracy_order,
    edge_color_best,
    edge_color_target,
    exact_chromatic,
    greedy_vertex_color,
    verify_proper_edge,
    verify_proper_vertex,
    vizing_edge_color,
)
from strongcolor.instances import (
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    petersen_graph,
    random_bipartite,
    random_simple,
)

import brute
from test_graph import graph_and_matching, graphs


def test_greedy_on_tree_uses_two_colors():
    g = Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    vc = greedy_vertex_color(g, degeneracy_order(g).ordering)
    assert vc.color_count == 2 and not verify_proper_vertex(g, vc)


def test_greedy_k5_uses_five():
    g = complete_graph(5)
    assert greedy_vertex_color(g, list(range(5))).color_count == 5


@settings(max_examples=200, deadline=None)
@given(graph_and_matching(max_n=9))
def test_degeneracy_greedy_bound(pair):
    g, m = pair
    for h in (g, contract_matching(g, m)):
        vc = degeneracy_coloring(h)
        assert not verify_proper_vertex(h, vc)
        assert vc.color_count <= degeneracy_order(h, multiplicity=False).degeneracy + 1


def test_exact_chromatic_examples():
    assert exact_chromatic(cycle_graph(5), 2).status is Status.IMPOSSIBLE
    res = exact_chromatic(cycle_graph(5), 3)
    assert res.found and not verify_proper_vertex(cycle_graph(5), res.coloring)
    assert exact_chromatic(petersen_graph(), 3).found
    assert exact_chromatic(complete_graph(6), 5).status is Status.IMPOSSIBLE


def test_exact_chromatic_reports_exhaustion():
    g = random_simple(40, 0.5, 1)
    res = exact_chromatic(g, 4, node_limit=50)
    assert res.status in (Status.EXHAUSTED, Status.IMPOSSIBLE)
    assert chromatic_number(g, node_limit=50) == (None, None)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_number_matches_subset_dp(g):
    k, vc = chromatic_number(g)
    assert k == brute.chromatic_number(g.vertex_count, g.edges)
    assert not verify_proper_vertex(g, vc)


def test_vizing_examples():
    assert vizing_edge_color(cycle_graph(5)).color_count == 3
    ec = vizing_edge_color(complete_graph(4))
    assert ec.color_count <= 4 and not verify_proper_edge(complete_graph(4), ec)
    assert edge_color_target(complete_graph(4), 3).found


def test_vizing_is_deterministic():
    g = random_simple(25, 0.3, 11)
    assert vizing_edge_color(g).colors == vizing_edge_color(g).colors


@settings(max_examples=500, deadline=None)
@given(graphs(max_n=9))
def test_vizing_property(g):
    ec = vizing_edge_color(g)
    assert not verify_proper_edge(g, ec)
    assert ec.color_count <= g.max_degree() + 1
    for cls in ec.class_list:
        assert len({x for e in cls for x in g.edges[e]}) == 2 * len(cls)


def test_konig_examples():
    assert bipartite_edge_color(complete_bipartite(3, 3)).color_count == 3
    assert bipartite_edge_color(cycle_graph(6)).color_count == 2
    ec = bipartite_edge_color(cube_graph())
    assert ec.color_count == 3 and not verify_proper_edge(cube_graph(), ec)


def test_konig_rejects_odd_cycle_with_witness():
    g = cycle_graph(5)
    with pytest.raises(NotBipartiteError) as info:
        bipartite_edge_color(g)
    cyc = info.value.cycle
    assert len(cyc) % 2 == 1
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_konig_random():
    rng = random.Random(4)
    for _ in range(200):
        g = random_bipartite(rng.randint(1, 10), rng.randint(1, 10), rng.random(), rng.getrandbits(32))
        ec = bipartite_edge_color(g)
        assert not verify_proper_edge(g, ec)
        assert ec.color_count == g.max_degree()


def test_target_examples():
    assert edge_color_target(petersen_graph(), 3).status is Status.IMPOSSIBLE
    g = cube_graph()
    res = edge_color_target(g, 3)
    assert res.found and res.coloring.color_count == 3
    with pytest.raises(InputError):
        edge_color_target(g, 2)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_target_decides_class(g):
    if g.edge_count == 0:
        return
    res = edge_color_target(g, g.max_degree(), node_limit=10**6)
    assert res.status is not Status.EXHAUSTED
    assert res.found == brute.is_class_one(g)
    if res.found:
        assert not verify_proper_edge(g, res.coloring)


def test_delta_at_least_twice_degeneracy_is_class_one():
    rng = random.Random(7)
    tried = 0
    for _ in range(400):
        g = random_simple(rng.randint(6, 14), rng.uniform(0.1, 0.35), rng.getrandbits(32))
        d = degeneracy_order(g).degeneracy
        if g.edge_count == 0 or g.max_degree() < 2 * d:
            continue
        tried += 1
        res = edge_color_target(g, g.max_degree(), node_limit=200_000)
        if res.status is Status.EXHAUSTED:
            continue  # inconclusive, never a failure
        assert res.found
    assert tried > 20


def test_edge_color_best_is_proper():
    for g in (petersen_graph(), complete_graph(5), cube_graph(), random_simple(20, 0.3, 5)):
        ec = edge_color_best(g)
        assert not verify_proper_edge(g, ec)
        assert ec.color_count <= g.max_degree() + 1
