from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chaindec.bigraph import induced_subgraph
from chaindec.fixtures import C6, G8, P7, P8, TWO_K2, path
from chaindec.patterns import find_induced_path, is_induced_path, is_p7_free

from conftest import bipartite_graphs


def naive_least_induced_path(g, k):
    """Least chordless k-path by checking every k-subset for path shape."""
    best = None
    for subset in combinations(sorted(g.vertices), k):
        sub = induced_subgraph(g, subset)
        degs = {v: len(sub.neighbours(v)) for v in subset}
        if sub.m != k - 1 or max(degs.values()) > 2:
            continue
        if k == 1:
            orders = [subset]
        else:
            ends = [v for v, d in degs.items() if d == 1]
            if len(ends) != 2:
                continue
            orders = []
            for start in ends:
                seq = [start]
                while len(seq) < k:
                    nxt = [w for w in sub.neighbours(seq[-1]) if w not in seq]
                    if not nxt:
                        break
                    seq.append(nxt[0])
                if len(seq) == k:
                    orders.append(tuple(seq))
        for seq in orders:
            if best is None or seq < best:
                best = seq
    return best


def test_p7_witness_is_the_path():
    assert find_induced_path(P7, 7).vertices == (1, 2, 3, 4, 5, 6, 7)


def test_g8_has_no_p7_but_a_p6():
    assert find_induced_path(G8, 7) is None
    w = find_induced_path(G8, 6)
    assert w.vertices == (3, 7, 4, 5, 2, 6)
    assert is_induced_path(G8, w.vertices)


def test_is_p7_free_examples():
    assert not is_p7_free(P7)
    assert is_p7_free(TWO_K2)
    assert is_p7_free(C6)
    assert not is_p7_free(P8)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        find_induced_path(G8, 0)


def test_single_vertex_path():
    assert find_induced_path(G8, 1).vertices == (1,)


def test_is_induced_path_rejects_chords():
    assert not is_induced_path(C6, (1, 2, 3, 4, 5, 6))
    assert is_induced_path(C6, (1, 2, 3, 4, 5))
    assert not is_induced_path(C6, (1, 3))


@settings(max_examples=150, deadline=None)
@given(bipartite_graphs(max_n=8), st.integers(1, 8))
def test_agrees_with_subset_oracle(g, k):
    w = find_induced_path(g, k)
    expected = naive_least_induced_path(g, k)
    assert (w.vertices if w else None) == expected


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_n=9), st.integers(1, 9))
def test_witness_is_chordless(g, k):
    w = find_induced_path(g, k)
    if w is not None:
        assert len(w) == k
        assert is_induced_path(g, w.vertices)


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_n=9), st.integers(2, 8))
def test_monotone_in_k(g, k):
    if find_induced_path(g, k) is None:
        assert find_induced_path(g, k + 1) is None


@pytest.mark.parametrize("n", range(1, 12))
def test_paths_contain_themselves(n):
    assert find_induced_path(path(n), n).vertices == tuple(range(1, n + 1))
