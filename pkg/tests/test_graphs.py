"""Graph model, edge-list format, connectivity, bipartiteness, odd walks."""

import random

import pytest

from siglap import (
    ETParams,
    Graph,
    ParseError,
    build_et,
    degrees,
    emit_edge_list,
    is_bipartite,
    is_connected,
    odd_walk_length,
    parse_edge_list,
    vector,
)

from graphgen import (
    all_graphs,
    brute_odd_walk_length,
    cycle,
    path,
    random_connected_nonbipartite,
)


# Graph invariants

def test_graph_rejects_loops():
    with pytest.raises(ValueError):
        Graph(3, ((0, 0),))


def test_graph_rejects_duplicates():
    with pytest.raises(ValueError):
        Graph(3, ((0, 1), (1, 0)))


def test_graph_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))


def test_graph_normalizes_edge_pairs():
    g = Graph(3, ((2, 0), (1, 0)))
    assert g.edges == ((0, 2), (0, 1))


# parsing

def test_parse_triangle():
    g = parse_edge_list("1 2\n2 3\n3 1\n")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))


def test_parse_et_937_matches_family_definition():
    text = "\n".join(
        ["1 2", "2 3", "3 1", "3 4", "4 5", "5 6", "6 7", "7 8", "8 9", "9 3"]
    )
    assert parse_edge_list(text) == build_et(ETParams(3, 7))


def test_parse_loop_reports_line():
    with pytest.raises(ParseError, match="line 1"):
        parse_edge_list("1 1\n")


def test_parse_duplicate_reports_line():
    with pytest.raises(ParseError, match="line 3"):
        parse_edge_list("1 2\n2 3\n2 1\n")


def test_parse_non_integer_token():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("1 2\nx 3\n")


def test_parse_index_below_one():
    with pytest.raises(ParseError, match="line 1"):
        parse_edge_list("0 2\n")


def test_parse_comments_blanks_and_header():
    g = parse_edge_list("# a triangle plus an isolated vertex\n\nn 4\n1 2\n2 3\n3 1\n")
    assert g.n == 4
    assert g.m == 3


def test_parse_index_exceeding_header():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("n 3\n2 4\n")


def test_parse_empty_input_rejected():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing here\n")


def test_emit_parse_round_trip():
    rng = random.Random(5)
    corpus = [cycle(4), cycle(5), path(6), build_et(ETParams(3, 4))]
    corpus += [random_connected_nonbipartite(rng, 4, 7) for _ in range(10)]
    for g in corpus:
        assert parse_edge_list(emit_edge_list(g)) == g


# connectivity / bipartiteness

def test_is_connected_k3():
    assert is_connected(Graph(3, ((0, 1), (1, 2), (2, 0))))


def test_is_connected_two_disjoint_edges():
    assert not is_connected(Graph(4, ((0, 1), (2, 3))))


def test_is_connected_et():
    assert is_connected(build_et(ETParams(3, 7)))


def test_is_bipartite_c4_sides():
    ok, side = is_bipartite(cycle(4))
    assert ok
    assert side == [1, -1, 1, -1]
    for u, v in cycle(4).edges:
        assert side[u] * side[v] == -1


def test_is_bipartite_k3():
    ok, side = is_bipartite(Graph(3, ((0, 1), (1, 2), (2, 0))))
    assert not ok and side is None


def test_is_bipartite_et():
    assert not is_bipartite(build_et(ETParams(3, 7)))[0]


# degrees

def test_degrees_k3():
    assert degrees(Graph(3, ((0, 1), (1, 2), (2, 0)))) == vector([2, 2, 2])


def test_degrees_et_937():
    assert degrees(build_et(ETParams(3, 7))) == vector([2, 2, 4, 2, 2, 2, 2, 2, 2])


def test_degrees_single_edge():
    assert degrees(Graph(2, ((0, 1),))) == vector([1, 1])


# odd closed walks

def test_odd_walk_c5():
    for u in range(5):
        assert odd_walk_length(cycle(5), u) == 5


def test_odd_walk_c4_infinite():
    for u in range(4):
        assert odd_walk_length(cycle(4), u) is None


def test_odd_walk_et_937_v8():
    # the 7-cycle through v8 ties the triangle detour 2 + 3 + 2
    assert odd_walk_length(build_et(ETParams(3, 7)), 7) == 7


def test_odd_walk_out_of_range():
    with pytest.raises(ValueError):
        odd_walk_length(cycle(4), 4)


def test_odd_walk_matches_brute_force():
    rng = random.Random(3)
    graphs = [cycle(5), cycle(7), build_et(ETParams(3, 5))]
    graphs += [random_connected_nonbipartite(rng, 4, 7) for _ in range(8)]
    for g in graphs:
        for u in range(g.n):
            assert odd_walk_length(g, u) == brute_odd_walk_length(g, u)


def test_bipartite_iff_all_odd_walks_infinite_exhaustive():
    for n in range(1, 6):
        for g in all_graphs(n):
            walks_infinite = all(odd_walk_length(g, u) is None for u in range(g.n))
            assert walks_infinite == is_bipartite(g)[0]
