import json

import pytest
from hypothesis import given, settings, strategies as st

from strongcolor import (
    FAMILIES,
    Drawing,
    Graph,
    InputError,
    InstanceError,
    ParseError,
    emit_coloring,
    emit_instance,
    generate,
    is_ab_graph,
    parse_coloring,
    parse_instance,
)
from strongcolor.strong import check_ic, check_optimal

from test_graph import graphs

CUBE = "8 12\n" + "".join(f"{a} {b}\n" for a, b in [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
])


def test_parse_triangle():
    g, d = parse_instance("3 3\n0 1\n1 2\n2 0\n")
    assert g.edges == ((0, 1), (1, 2), (2, 0)) and d is None


def test_parse_cube_with_crossing():
    text = CUBE.replace("8 12", "8 14").replace("6 7\n", "6 7\n0 3\n1 2\n") + "crossings 1\n12 13\n"
    g, d = parse_instance(text)
    assert g.edge_count == 14 and d.crossing_pairs == ((12, 13),)


def test_comments_and_blank_lines():
    g, _ = parse_instance("# triangle\n3 3  # header\n\n0 1\n1 2 # middle\n2 0\n")
    assert g.edge_count == 3


def test_crossing_sharing_endpoint_is_semantic_error():
    with pytest.raises(InstanceError):
        parse_instance("3 2\n0 1\n1 2\ncrossings 1\n0 1\n")


def test_duplicate_edge_is_semantic_error():
    with pytest.raises(InstanceError):
        parse_instance("3 2\n0 1\n1 0\n")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3 x\n", 1, 3),
        ("3 2\n0 1\n", 3, 1),
        ("3 1\n0 1 2\n", 2, 1),
        ("3 1\n0 -1\n", 2, 3),
        ("3 1\n0 1\nbogus\n", 3, 1),
        ("", 1, 1),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_json_mirror():
    g, d = generate("quad-optimal")
    text = emit_instance(g, d, "json")
    assert json.loads(text)["vertices"] == 8
    assert parse_instance(text) == (g, d)
    with pytest.raises(ParseError):
        parse_instance('{"vertices": 2', "json")
    with pytest.raises(InstanceError):
        parse_instance('{"vertices": 2, "edges": [[0, 0]]}')


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.sampled_from(["text", "json"]))
def test_round_trip(g, fmt):
    text = emit_instance(g, None, fmt)
    assert parse_instance(text) == (g, None)
    assert emit_instance(*parse_instance(text), fmt) == text


def test_round_trip_with_drawing_is_byte_identical():
    g, d = generate("one-planar", {"n": 20}, 4)
    text = emit_instance(g, d)
    assert emit_instance(*parse_instance(text)) == text


def test_coloring_files():
    assert parse_coloring(emit_coloring([2, 0, 1]), 3) == [2, 0, 1]
    assert parse_coloring("1 5\n", 3) == [None, 5, None]
    with pytest.raises(InstanceError):
        parse_coloring("0 1\n0 2\n", 2)
    with pytest.raises(InstanceError):
        parse_coloring("7 1\n", 2)


def test_h_delta_sizes():
    for delta in (5, 6, 9):
        g, d = generate("h-delta", {"delta": delta})
        assert g.max_degree() == delta
        assert g.edge_count == 10 + 5 * (delta - 4) == 5 * delta - 10
        assert g.vertex_count == 5 + 5 * (delta - 4)
        check_ic(g, d)


def test_quad_optimal_from_cube():
    g, d = generate("quad-optimal", {"base": "cube"})
    assert (g.vertex_count, g.edge_count) == (8, 24) == (8, 4 * 8 - 8)
    check_optimal(g, d)


@pytest.mark.parametrize("k", [3, 4, 5, 7])
def test_quad_optimal_pseudo_double_wheel(k):
    g, d = generate("quad-optimal", {"base": "pdw", "k": k})
    assert g.edge_count == 4 * g.vertex_count - 8
    assert g.max_degree() == 2 * k
    check_optimal(g, d)


def test_random_planar_is_planar_sparse():
    g, _ = generate("random-planar", {"n": 20}, 1)
    assert g.vertex_count == 20 and g.edge_count == 3 * 20 - 6
    assert is_ab_graph(g, 3, 6, 3).holds


@pytest.mark.parametrize("seed", range(5))
def test_one_planar_and_ic_generators(seed):
    g, d = generate("one-planar", {"n": 30, "max_degree": 10}, seed)
    assert g.max_degree() <= 10 and d.crossing_pairs
    assert is_ab_graph(g, 4, 8, 3).holds
    g, d = generate("ic-planar", {"n": 30}, seed)
    check_ic(g, d)


def test_generators_are_deterministic():
    for fam in ("one-planar", "ic-planar", "random-planar", "random-simple"):
        assert generate(fam, {}, 9) == generate(fam, {}, 9)


def test_every_family_generates():
    for fam in FAMILIES:
        g, _ = generate(fam, {}, 0)
        assert isinstance(g, Graph)


def test_bad_parameters():
    with pytest.raises(InputError):
        generate("h-delta", {"delta": "x"})
    with pytest.raises(InputError):
        generate("nope")
    with pytest.raises(InputError):
        generate("random-planar", {"n": 2})


def test_empty_drawing_round_trip():
    g = Graph(2, [(0, 1)])
    text = emit_instance(g, Drawing(()))
    assert text.endswith("crossings 0\n")
    assert parse_instance(text)[1] == Drawing(())
