"""Brute-force ground truth at small n.

Labelled graphs on n vertices are the integers 0 .. 2**C(n,2) - 1, bit p
standing for the p-th vertex pair in lexicographic order. Work splits into
integer ranges whose results merge by addition, so counting and checking
can run in a process pool.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .bigraph import BipartiteGraph, Side, bipartite_complement, is_connected
from .chain import validate_chain
from .codec import decode_stream, encode_tree, envelope_bits
from .dectree import (
    Chain,
    CoChain,
    build_tree,
    decode_tree,
    iter_nodes,
    leaf_bound,
    node_bound,
    tree_metrics,
    verify_2decomposition,
)
from .errors import CapExceeded, ChainDecError, RejectionBudgetExceeded
from .neighbourhood import is_complete_graph, neighbourhood_graph, quasi_threshold_witness
from .patterns import find_induced_path

log = logging.getLogger(__name__)

DEFAULT_CAP = 7
CHUNK = 1 << 16
P7_COPIES = 2520  # 7!/2 labelled copies of P7 on 7 vertices


@dataclass(frozen=True)
class ClassCount:
    n: int
    value: int


# -- enumeration -----------------------------------------------------------------

def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _mono_masks(n: int) -> np.ndarray:
    """For each 2-colouring with vertex 1 fixed, the mask of same-colour pairs."""
    pairs = vertex_pairs(n)
    masks = []
    for colouring in range(1 << max(n - 1, 0)):
        colour = [0] + [(colouring >> i) & 1 for i in range(n - 1)]
        m = 0
        for p, (u, v) in enumerate(pairs):
            if colour[u - 1] == colour[v - 1]:
                m |= 1 << p
        masks.append(m)
    return np.array(sorted(set(masks)), dtype=np.int64)


def bipartite_masks(n: int, lo: int, hi: int) -> np.ndarray:
    """Masks in [lo, hi) whose graph is 2-colourable."""
    if n <= 1:
        return np.arange(lo, hi, dtype=np.int64)
    mono = _mono_masks(n)
    keep = []
    for start in range(lo, hi, CHUNK):
        block = np.arange(start, min(hi, start + CHUNK), dtype=np.int64)
        ok = np.zeros(block.shape, dtype=bool)
        for m in mono:
            ok |= (block & m) == 0
        keep.append(block[ok])
    return np.concatenate(keep) if keep else np.empty(0, dtype=np.int64)


def mask_adjacency(n: int, mask: int) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for p, (u, v) in enumerate(vertex_pairs(n)):
        if (mask >> p) & 1:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def canonical_bipartition(adj: dict[int, set[int]]) -> dict[int, Side] | None:
    """BFS 2-colouring per component with the smallest label on the left; None if odd cycle."""
    side: dict[int, Side] = {}
    for start in sorted(adj):
        if start in side:
            continue
        side[start] = Side.LEFT
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in side:
                    side[w] = side[v].other
                    queue.append(w)
                elif side[w] is side[v]:
                    return None
    return side


def graph_from_mask(n: int, mask: int) -> BipartiteGraph | None:
    adj = mask_adjacency(n, mask)
    side = canonical_bipartition(adj)
    if side is None:
        return None
    return BipartiteGraph._raw(side, {v: frozenset(ns) for v, ns in adj.items()})


class _AdjView:
    # minimal graph protocol for the path search on raw adjacency dicts
    def __init__(self, adj):
        self._adj = adj
        self.vertices = frozenset(adj)

    def neighbours(self, v):
        return self._adj[v]


def _has_p7(n: int, mask: int) -> bool:
    # an induced P7 needs 7 vertices and 6 edges
    if n < 7 or mask.bit_count() < 6:
        return False
    return find_induced_path(_AdjView(mask_adjacency(n, mask)), 7) is not None


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = max(CHUNK, -(-total // max(parts, 1)))
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")


def _count_range(args) -> int:
    n, lo, hi, p7_filter = args
    masks = bipartite_masks(n, lo, hi)
    if not p7_filter or n < 7:
        return int(masks.size)
    return sum(1 for m in masks.tolist() if not _has_p7(n, m))


def _map(fn, jobs: list, workers: int) -> Iterator:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(fn, jobs)
    else:
        yield from map(fn, jobs)


def count_class(n: int, cap: int = DEFAULT_CAP, p7_filter: bool = True, workers: int = 1) -> ClassCount:
    """Number of labelled P7-free bipartite graphs on n vertices (plain bipartite without the filter)."""
    _check_cap(n, cap)
    total = 1 << comb(n, 2)
    jobs = [(n, lo, hi, p7_filter) for lo, hi in _ranges(total, workers)]
    return ClassCount(n, sum(_map(_count_range, jobs, workers)))


def bipartite_count(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> int:
    return count_class(n, cap, p7_filter=False, workers=workers).value


def iter_class(n: int, cap: int = DEFAULT_CAP, lo: int = 0, hi: int | None = None) -> Iterator[BipartiteGraph]:
    """Every P7-free bipartite graph on 1..n, with the canonical bipartition."""
    _check_cap(n, cap)
    hi = (1 << comb(n, 2)) if hi is None else hi
    for m in bipartite_masks(n, lo, hi).tolist():
        if not _has_p7(n, m):
            yield graph_from_mask(n, m)


# -- verification -------------------------------------------------------------------

@dataclass
class GraphCheck:
    failures: list[str] = field(default_factory=list)
    nodes: int = 0
    leaves: int = 0
    bits: int = 0
    chain_nodes: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_graph(g: BipartiteGraph) -> GraphCheck:
    """Run the whole pipeline on one graph and collect every failed property."""
    check = GraphCheck()
    fail = check.failures.append
    n = g.n

    for side in (Side.LEFT, Side.RIGHT):
        w = quasi_threshold_witness(neighbourhood_graph(g, side))
        if w is not None:
            fail(f"neighbourhood graph of {side.name} side has induced {w.kind} {list(w.vertices)}")
    h = bipartite_complement(g)
    if n >= 3 and is_connected(g) and is_connected(h):
        if all(
            is_complete_graph(x)
            for x in (neighbourhood_graph(g, Side.LEFT), neighbourhood_graph(g, Side.RIGHT), neighbourhood_graph(h, Side.LEFT))
        ):
            fail("G_U, G_W and H_U are all complete")

    try:
        t = build_tree(g, check_p7=True)
    except ChainDecError as exc:
        fail(f"build_tree: {type(exc).__name__}: {exc}")
        return check

    try:
        if decode_tree(t) != g:
            fail("decode_tree(build_tree(G)) != G")
    except ChainDecError as exc:
        fail(f"decode_tree: {type(exc).__name__}: {exc}")

    for node in iter_nodes(t):
        if not isinstance(node, Chain):
            continue
        check.chain_nodes += 1
        graph = decode_tree(node)
        if isinstance(node, CoChain):
            graph = bipartite_complement(graph)
        dec = node.decomposition
        if dec is None:
            fail("chain node without its decomposition")
            continue
        bad = validate_chain(graph, dec)
        if bad:
            fail(f"chain axiom violated at node ({node.k},{node.v1},{node.v2}): {bad[0]}")

    metrics = tree_metrics(t)
    check.nodes, check.leaves = metrics.nodes, metrics.leaves
    if n >= 3:
        if metrics.nodes > node_bound(n):
            fail(f"{metrics.nodes} nodes > 8n-17 = {node_bound(n)}")
        if metrics.leaves > leaf_bound(n):
            fail(f"{metrics.leaves} leaves > 4(n-2) = {leaf_bound(n)}")

    report = verify_2decomposition(t, g.vertices)
    for v in report.violations:
        fail(f"2-decomposition: {v}")
    if report.max_overlap > 2:
        fail(f"child overlap {report.max_overlap} > 2")

    label_range = max(g.vertices)
    stream = encode_tree(t, label_range)
    check.bits = stream.length
    if decode_stream(stream) != t:
        fail("decode_stream(encode_tree(T)) != T")
    if label_range >= 3 and stream.length > envelope_bits(label_range):
        fail(f"{stream.length} bits > envelope {envelope_bits(label_range)}")
    return check


@dataclass
class VerificationReport:
    n: int
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    max_nodes: int = 0
    max_bits: int = 0
    chain_nodes: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, g: BipartiteGraph, check: GraphCheck) -> None:
        self.checked += 1
        self.max_nodes = max(self.max_nodes, check.nodes)
        self.max_bits = max(self.max_bits, check.bits)
        self.chain_nodes += check.chain_nodes
        for msg in check.failures:
            self.failures.append((describe(g), msg))

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.max_nodes = max(self.max_nodes, other.max_nodes)
        self.max_bits = max(self.max_bits, other.max_bits)
        self.chain_nodes += other.chain_nodes
        return self

    def summary(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "failures": len(self.failures),
            "max_nodes": self.max_nodes,
            "max_bits": self.max_bits,
            "chain_nodes": self.chain_nodes,
        }

    def lines(self) -> list[str]:
        out = [
            f"n={self.n} checked={self.checked} failures={len(self.failures)} "
            f"max_nodes={self.max_nodes} max_bits={self.max_bits} chain_nodes={self.chain_nodes}"
        ]
        out += [f"FAIL {graph}: {msg}" for graph, msg in self.failures]
        return out


def describe(g: BipartiteGraph) -> str:
    verts = sorted(g.vertices)
    sides = "".join(g.side[v].value for v in verts)
    return f"{sides} {g.sorted_edges()}"


def verify_corpus(graphs: Iterable[BipartiteGraph], n: int = 0) -> VerificationReport:
    report = VerificationReport(n)
    for g in graphs:
        report.add(g, verify_graph(g))
    return report


def _verify_range(args) -> VerificationReport:
    n, lo, hi = args
    return verify_corpus(iter_class(n, cap=n, lo=lo, hi=hi), n)


def verify_class(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Run :func:`verify_graph` on every labelled P7-free bipartite graph on n vertices."""
    _check_cap(n, cap)
    total = 1 << comb(n, 2)
    jobs = [(n, lo, hi) for lo, hi in _ranges(total, workers)]
    report = VerificationReport(n)
    for part in _map(_verify_range, jobs, workers):
        report.merge(part)
    log.info("verified n=%d: %d graphs, %d failures", n, report.checked, len(report.failures))
    return report


# -- sampling ---------------------------------------------------------------------------

def random_bipartite(n: int, edge_prob: float | Fraction, rng: random.Random) -> BipartiteGraph:
    side = {v: Side.LEFT if rng.random() < 0.5 else Side.RIGHT for v in range(1, n + 1)}
    edges = [
        (u, v)
        for u, v in combinations(range(1, n + 1), 2)
        if side[u] is not side[v] and rng.random() < edge_prob
    ]
    return BipartiteGraph(side, edges)


def random_p7free(
    n: int, edge_prob: float | Fraction, seed: int, max_rejects: int = 10_000
) -> BipartiteGraph:
    """Rejection-sample a P7-free bipartite graph; the same seed gives the same graph."""
    if not 0 <= edge_prob <= 1:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(max_rejects + 1):
        g = random_bipartite(n, edge_prob, rng)
        if find_induced_path(g, 7) is None:
            return g
    raise RejectionBudgetExceeded(f"no P7-free sample after {max_rejects} rejections (n={n}, p={edge_prob})")
