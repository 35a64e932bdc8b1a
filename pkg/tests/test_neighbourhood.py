from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chaindec.bigraph import BipartiteGraph, Side, bipartite_complement, connected_components
from chaindec.errors import CompleteInput, DisconnectedInput, NotQuasiThreshold
from chaindec.fixtures import C6, G8, P7, P8
from chaindec.neighbourhood import (
    SimpleGraph,
    brute_force_quasi_threshold_witness,
    is_complete_graph,
    neighbourhood_graph,
    quasi_threshold_witness,
    universal_clique_cutset,
)
from chaindec.oracle import iter_class
from chaindec.patterns import is_p7_free

from conftest import bipartite_graphs


@st.composite
def simple_graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return SimpleGraph(range(1, n + 1), edges)


def test_neighbourhood_graph_g8_left():
    h = neighbourhood_graph(G8, Side.LEFT)
    assert h.vertices == {1, 2, 3, 4}
    assert h.edges == {(1, 2), (1, 4), (2, 4), (3, 4)}


def test_neighbourhood_graph_p7_left_is_a_path():
    h = neighbourhood_graph(P7, Side.LEFT)
    assert h.vertices == {1, 3, 5, 7}
    assert h.edges == {(1, 3), (3, 5), (5, 7)}


def test_neighbourhood_graph_edgeless():
    edgeless = BipartiteGraph(C6.side)
    assert neighbourhood_graph(edgeless, Side.LEFT).edges == frozenset()


def test_is_complete_graph_examples():
    assert is_complete_graph(SimpleGraph({1, 2, 3}, {(1, 2), (2, 3), (1, 3)}))
    assert not is_complete_graph(neighbourhood_graph(G8, Side.LEFT))
    assert is_complete_graph(SimpleGraph({1}))


def test_qt_witness_examples():
    w = quasi_threshold_witness(SimpleGraph({1, 2, 3, 4}, {(1, 2), (2, 3), (3, 4)}))
    assert w.kind == "P4"
    assert quasi_threshold_witness(neighbourhood_graph(G8, Side.LEFT)) is None
    w = quasi_threshold_witness(neighbourhood_graph(P8, Side.LEFT))
    assert w.kind == "P4" and set(w.vertices) == {1, 3, 5, 7}
    w = quasi_threshold_witness(SimpleGraph({1, 2, 3, 4}, {(1, 2), (2, 3), (3, 4), (4, 1)}))
    assert w.kind == "C4"


def _witness_is_genuine(h, w):
    a, b, c, d = w.vertices
    edges = {frozenset(e) for e in combinations(w.vertices, 2) if h.has_edge(*e)}
    path = {frozenset((a, b)), frozenset((b, c)), frozenset((c, d))}
    if w.kind == "P4":
        return edges == path
    return edges == path | {frozenset((d, a))}


@settings(max_examples=300, deadline=None)
@given(simple_graphs())
def test_qt_witness_agrees_with_brute_force(h):
    fast = quasi_threshold_witness(h)
    slow = brute_force_quasi_threshold_witness(h)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert _witness_is_genuine(h, fast)
        assert _witness_is_genuine(h, slow)


def test_cutset_on_p3():
    q, parts = universal_clique_cutset(SimpleGraph({1, 2, 3}, {(1, 2), (2, 3)}))
    assert q == {2}
    assert parts == [{1}, {3}]


def test_cutset_on_g8_left():
    q, parts = universal_clique_cutset(neighbourhood_graph(G8, Side.LEFT))
    assert q == {4}
    assert parts == [{1, 2}, {3}]


def test_cutset_errors():
    with pytest.raises(CompleteInput):
        universal_clique_cutset(SimpleGraph({1, 2, 3}, {(1, 2), (2, 3), (1, 3)}))
    with pytest.raises(DisconnectedInput):
        universal_clique_cutset(SimpleGraph({1, 2, 3}, {(1, 2)}))
    with pytest.raises(NotQuasiThreshold) as info:
        universal_clique_cutset(neighbourhood_graph(P7, Side.LEFT))
    assert info.value.witness.kind == "P4"


@settings(max_examples=300, deadline=None)
@given(simple_graphs(max_n=8))
def test_cutset_contract(h):
    if len(h) == 0 or len(connected_components(h)) != 1 or is_complete_graph(h):
        return
    if quasi_threshold_witness(h) is not None:
        return
    q, parts = universal_clique_cutset(h)
    assert q and len(parts) >= 2
    assert all(h.has_edge(a, b) for a, b in combinations(q, 2))
    for part in parts:
        assert all(h.has_edge(x, y) for x in q for y in part)
    for i, p1 in enumerate(parts):
        for p2 in parts[i + 1:]:
            assert not any(h.has_edge(x, y) for x in p1 for y in p2)
    assert [min(p) for p in parts] == sorted(min(p) for p in parts)


@pytest.mark.parametrize("n", range(1, 7))
def test_neighbourhood_graphs_of_class_are_quasi_threshold(n):
    for g in iter_class(n):
        for side in Side:
            assert quasi_threshold_witness(neighbourhood_graph(g, side)) is None


@settings(max_examples=300, deadline=None)
@given(bipartite_graphs(min_n=3, max_n=11))
def test_neighbourhood_graphs_of_p7_free_graphs(g):
    if not is_p7_free(g):
        return
    for side in Side:
        assert quasi_threshold_witness(neighbourhood_graph(g, side)) is None
    h = bipartite_complement(g)
    if len(connected_components(g)) == 1 and len(connected_components(h)) == 1:
        graphs = [neighbourhood_graph(g, Side.LEFT), neighbourhood_graph(g, Side.RIGHT), neighbourhood_graph(h, Side.LEFT)]
        assert not all(is_complete_graph(x) for x in graphs)
