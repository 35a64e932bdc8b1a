import random

import pytest
from hypothesis import given, settings, strategies as st

from chaindec.bigraph import Side, bipartite_complement, induced_subgraph
from chaindec.chain import Handedness, validate_chain
from chaindec.dectree import (
    Chain,
    CoChain,
    CoUnion,
    Leaf,
    TreeMetrics,
    Union,
    build_tree,
    decode_tree,
    iter_nodes,
    leaf_bound,
    node_bound,
    tree_metrics,
    verify_2decomposition,
)
from chaindec.errors import InducedP7Found, MalformedTree, NotDecomposable, NotQuasiThreshold
from chaindec.fixtures import G8, K2, P7, SIX, TWO_K2
from chaindec.oracle import iter_class, random_p7free
from chaindec.patterns import is_p7_free

from conftest import bipartite_graphs
from strategies import planted_chain

L, R = Side.LEFT, Side.RIGHT


def test_two_k2_tree_shape():
    t = build_tree(TWO_K2)
    assert t == Union(CoUnion(Leaf(1, L), Leaf(2, R)), CoUnion(Leaf(3, L), Leaf(4, R)))
    assert tree_metrics(t).nodes == 7
    assert tree_metrics(t).leaves == 4


def test_g8_root_is_chain():
    t = build_tree(G8)
    assert type(t) is Chain
    assert (t.k, t.v1, t.v2, t.handedness) == (2, 7, 5, Handedness.LEFT)
    assert decode_tree(t.first) == induced_subgraph(G8, {1, 2, 4, 5, 6, 7, 8})
    assert decode_tree(t.second) == induced_subgraph(G8, {3, 5, 7})


def test_p7_is_rejected():
    with pytest.raises(NotQuasiThreshold):
        build_tree(P7)
    with pytest.raises(InducedP7Found) as info:
        build_tree(P7, check_p7=True)
    assert info.value.witness == (1, 2, 3, 4, 5, 6, 7)


def test_empty_graph_rejected():
    from chaindec.bigraph import empty_graph

    with pytest.raises(ValueError):
        build_tree(empty_graph())


def test_decode_examples():
    assert decode_tree(build_tree(G8)) == G8
    assert decode_tree(build_tree(TWO_K2)) == TWO_K2
    g = decode_tree(Leaf(1, L))
    assert g.vertices == {1} and g.side_of(1) is L


def test_metrics_and_bounds():
    assert tree_metrics(Leaf(1, L)) == TreeMetrics(1, 1)
    m = tree_metrics(build_tree(TWO_K2))
    assert m.nodes <= node_bound(4) == 15
    assert m.leaves <= leaf_bound(4) == 8
    assert tree_metrics(build_tree(G8)).nodes <= node_bound(8) == 47


def test_leaf_bound_small_sets():
    assert leaf_bound(1) == 1
    assert leaf_bound(2) == 2
    assert leaf_bound(5) == 12


def test_2decomposition_g8():
    report = verify_2decomposition(build_tree(G8), G8.vertices)
    assert report.ok
    t = build_tree(G8)
    sets_first = decode_tree(t.first).vertices
    sets_second = decode_tree(t.second).vertices
    assert sets_first & sets_second == {5, 7}
    assert report.overlaps[0] == (0, 2)


def test_2decomposition_two_k2():
    report = verify_2decomposition(build_tree(TWO_K2))
    assert report.ok
    assert report.max_overlap == 0


def test_2decomposition_negative():
    t = Union(Leaf(1, L), Leaf(2, R))
    report = verify_2decomposition(t, {1, 2, 3})
    assert not report.ok
    assert any(v.startswith("clause 3(a)") for v in report.violations)


def test_2decomposition_no_private_element():
    t = Union(Union(Leaf(1, L), Leaf(2, R)), Leaf(2, R))
    report = verify_2decomposition(t)
    assert any(v.startswith("clause 3(c)") for v in report.violations)


def test_decode_rejects_overlapping_union():
    with pytest.raises(MalformedTree):
        decode_tree(Union(Leaf(1, L), Leaf(1, L)))


def test_decode_rejects_bad_markers():
    t = build_tree(G8)
    with pytest.raises(MalformedTree):
        decode_tree(Chain(t.k, 99, t.v2, t.handedness, t.first, t.second))
    with pytest.raises(MalformedTree):
        decode_tree(Chain(t.k, t.v1, t.v1, t.handedness, t.first, t.second))
    with pytest.raises(MalformedTree):
        decode_tree(Chain(1, t.v1, t.v2, t.handedness, t.first, t.second))
    # children in the wrong order break the smallest-label rule
    with pytest.raises(MalformedTree):
        decode_tree(Chain(t.k, t.v2, t.v1, t.handedness, t.second, t.first))
    with pytest.raises(MalformedTree):
        decode_tree(Chain(5, t.v1, t.v2, t.handedness, t.first, t.second))


def test_not_decomposable_outside_class():
    from chaindec.fixtures import cycle

    # C10 and its bipartite complement are connected; its neighbourhood graphs are 5-cycles
    with pytest.raises((NotDecomposable, NotQuasiThreshold)):
        build_tree(cycle(10))


def _chain_marker_property(t):
    """v1's neighbourhood in the first child's A/C part is A minus A_1."""
    for node in iter_nodes(t):
        if not isinstance(node, Chain):
            continue
        dec = node.decomposition
        f1 = decode_tree(node.first)
        u_side = node.handedness.part
        nbrs_in_u = f1.neighbours(node.v1) & f1.part(u_side)
        assert nbrs_in_u == dec.all_A - dec.A[0]
        assert node.v1 in dec.D[0] and node.v2 in dec.B[0]
        others = (f1.vertices | decode_tree(node.second).vertices) - {node.v1, node.v2}
        assert min(others) in f1.vertices


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_round_trip(n):
    for g in iter_class(n):
        t = build_tree(g)
        assert decode_tree(t) == g
        assert verify_2decomposition(t, g.vertices).ok
        if n >= 3:
            m = tree_metrics(t)
            assert m.nodes <= node_bound(n)
            assert m.leaves <= leaf_bound(n)


@pytest.mark.parametrize("n", range(7, 15))
def test_sampled_round_trip(n):
    for i in range(60):
        g = random_p7free(n, (0.2, 0.35, 0.5, 0.65, 0.8)[i % 5], seed=77 * n + i)
        t = build_tree(g)
        assert decode_tree(t) == g
        assert verify_2decomposition(t, g.vertices).ok
        assert tree_metrics(t).nodes <= node_bound(n)
        _chain_marker_property(t)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9), st.integers(2, 5), st.sampled_from(list(Handedness)), st.booleans())
def test_planted_graphs_round_trip(seed, k, handedness, complemented):
    rng = random.Random(seed)
    g, _ = planted_chain(rng, k, max_block=2, p=rng.random(), handedness=handedness)
    if complemented:
        g = bipartite_complement(g)
    if not is_p7_free(g):
        return
    t = build_tree(g)
    assert decode_tree(t) == g
    report = verify_2decomposition(t, g.vertices)
    assert report.ok and report.max_overlap <= 2
    _chain_marker_property(t)
    for node in iter_nodes(t):
        if isinstance(node, Chain):
            graph = decode_tree(node)
            if isinstance(node, CoChain):
                graph = bipartite_complement(graph)
            assert validate_chain(graph, node.decomposition) == []


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs(min_n=1, max_n=10))
def test_rules_are_total_on_class(g):
    if not is_p7_free(g):
        return
    t = build_tree(g)
    assert decode_tree(t) == g


def test_six_vertex_graph_is_a_co_union():
    t = build_tree(SIX)
    assert type(t) is CoUnion
    assert decode_tree(t) == SIX
    assert decode_tree(build_tree(K2)) == K2
