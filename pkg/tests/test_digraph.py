import numpy as np
import pytest
from hypothesis import given, strategies as st

from sinkrank import (
    adjacency_matrix,
    best_response_digraph,
    brute_force_scc,
    digraph_from_adjacency,
    new_digraph,
    scc_decompose,
    sink_equilibria,
    to_dot,
)
from sinkrank.errors import IndexOutOfRangeError, NonBinaryEntryError, NonSquareError

from conftest import random_digraph


def test_edge_endpoint_validation():
    with pytest.raises(IndexOutOfRangeError):
        new_digraph(2, [(0, 2)])
    with pytest.raises(IndexOutOfRangeError):
        new_digraph(2, [(0, 1)], node_names=["only-one"])


def test_scc_on_best_response_digraph(mutual_pair_game):
    g = best_response_digraph(mutual_pair_game)
    blocks = scc_decompose(g)
    assert sorted(map(sorted, blocks)) == [[0, 1], [2]]


def test_scc_no_edges_gives_singletons():
    g = new_digraph(3, [])
    assert sorted(map(sorted, scc_decompose(g))) == [[0], [1], [2]]


def test_scc_condensation_order():
    for seed in range(30):
        g = random_digraph(10, seed)
        blocks = scc_decompose(g)
        position = {}
        for i, block in enumerate(blocks):
            for node in block:
                position[node] = i
        for u, v in g.edges:
            assert position[u] <= position[v], "edge runs from a later block to an earlier one"


def test_scc_matches_brute_force():
    for seed in range(200):
        g = random_digraph(12, seed)
        fast = {frozenset(b) for b in scc_decompose(g)}
        slow = {frozenset(b) for b in brute_force_scc(g)}
        assert fast == slow


def test_sink_equilibria_fixture(mutual_pair_game):
    ses = sink_equilibria(best_response_digraph(mutual_pair_game))
    assert [sorted(c) for c in ses.components] == [[0, 1]]


def test_sink_equilibria_nine_game(nine_game):
    ses = sink_equilibria(best_response_digraph(nine_game))
    assert sorted(tuple(sorted(c)) for c in ses.components) == [(0, 1, 2), (5, 6, 7)]


def test_sink_equilibria_lone_node():
    ses = sink_equilibria(new_digraph(1, []))
    assert ses.components == (frozenset({0}),)


def test_sink_equilibria_never_empty():
    for seed in range(50):
        g = random_digraph(8, seed)
        ses = sink_equilibria(g)
        assert ses.components
        for block in ses.components:
            for u, v in g.edges:
                if u in block:
                    assert v in block


def test_adjacency_matrix_fixture(mutual_pair_game):
    g = best_response_digraph(mutual_pair_game)
    expected = np.array([[1, 1, 0], [1, 1, 0], [0, 1, 1]])
    assert np.array_equal(adjacency_matrix(g), expected)


def test_adjacency_matrix_empty():
    g = new_digraph(3, [])
    assert not adjacency_matrix(g).any()


def test_digraph_from_adjacency_basics():
    g = digraph_from_adjacency([[0, 1], [0, 0]])
    assert g.edges == frozenset({(0, 1)})
    loops = digraph_from_adjacency(np.eye(3, dtype=int))
    assert loops.edges == frozenset({(0, 0), (1, 1), (2, 2)})


def test_digraph_from_adjacency_validation():
    with pytest.raises(NonSquareError):
        digraph_from_adjacency([[0, 1]])
    with pytest.raises(NonBinaryEntryError):
        digraph_from_adjacency([[0, 2], [0, 0]])


def test_adjacency_of_nine_game_graph_recovers_sinks(nine_game):
    g = best_response_digraph(nine_game)
    rebuilt = digraph_from_adjacency(adjacency_matrix(g))
    ses = sink_equilibria(rebuilt)
    assert sorted(tuple(sorted(c)) for c in ses.components) == [(0, 1, 2), (5, 6, 7)]


@given(st.integers(1, 8), st.integers(0, 10_000))
def test_adjacency_round_trip(node_count, seed):
    g = random_digraph(node_count, seed)
    assert digraph_from_adjacency(adjacency_matrix(g)) == g


def test_to_dot_contains_edges_and_is_deterministic():
    g = new_digraph(2, [(0, 1)])
    text = to_dot(g)
    assert '"s1" -> "s2";' in text
    assert text == to_dot(g)


def test_to_dot_highlight(mutual_pair_game):
    g = best_response_digraph(mutual_pair_game)
    text = to_dot(g, highlight=sink_equilibria(g))
    lines = text.splitlines()
    assert any('"s1"' in ln and "fillcolor" in ln for ln in lines)
    assert any('"s2"' in ln and "fillcolor" in ln for ln in lines)
    assert not any('"s3"' in ln and "fillcolor" in ln for ln in lines)


def test_to_dot_omit_self_loops():
    g = new_digraph(2, [(0, 0), (0, 1)])
    assert '"s1" -> "s1";' in to_dot(g)
    assert '"s1" -> "s1";' not in to_dot(g, omit_self_loops=True)
