"""Neighbourhood graphs of the two parts and their quasi-threshold structure."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .bigraph import BipartiteGraph, Side, connected_components
from .errors import CompleteInput, DisconnectedInput, NotQuasiThreshold, UnknownVertex


class SimpleGraph:
    """An undirected simple graph with integer vertices."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in adj:
                raise UnknownVertex(u)
            if v not in adj:
                raise UnknownVertex(v)
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @classmethod
    def _raw(cls, adj: dict[int, frozenset[int]]) -> SimpleGraph:
        h = object.__new__(cls)
        h._adj = adj
        return h

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def neighbours(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, ns in self._adj.items() for v in ns if u < v)

    def subgraph(self, s: Iterable[int]) -> SimpleGraph:
        s = frozenset(s)
        return SimpleGraph._raw({v: self._adj[v] & s for v in s})

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={sorted(self._adj)}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class QuasiThresholdWitness:
    """An induced P4 (``vertices`` in path order) or C4 (in cyclic order)."""

    kind: str
    vertices: tuple[int, int, int, int]


def neighbourhood_graph(g: BipartiteGraph, side: Side) -> SimpleGraph:
    """Graph on one part of ``g``; two vertices are adjacent iff they share a neighbour."""
    part = [v for v, s in g.side.items() if s is side]
    adj: dict[int, set[int]] = {v: set() for v in part}
    # each vertex of the other part makes its neighbourhood a clique
    for w, s in g.side.items():
        if s is side:
            continue
        ns = g.neighbours(w)
        if len(ns) > 1:
            for v in ns:
                adj[v] |= ns
    return SimpleGraph._raw({v: frozenset(ns - {v}) for v, ns in adj.items()})


def is_complete_graph(h: SimpleGraph) -> bool:
    size = len(h) - 1
    return all(len(h.neighbours(v)) == size for v in h.vertices)


def quasi_threshold_witness(h: SimpleGraph) -> QuasiThresholdWitness | None:
    """Return an induced P4 or C4 of ``h``, or None if ``h`` is quasi-threshold.

    A graph is quasi-threshold iff the closed neighbourhoods of any two
    adjacent vertices are nested. A non-nested edge u-v with private
    neighbours x of u and y of v yields x-u-v-y, which is a P4 or,
    if x and y are adjacent, a C4.
    """
    for u in sorted(h.vertices):
        nu = h.neighbours(u)
        for v in sorted(nu):
            if v <= u:
                continue
            nv = h.neighbours(v)
            only_u = nu - nv - {v}
            only_v = nv - nu - {u}
            if only_u and only_v:
                x = min(only_u)
                y = min(only_v)
                kind = "C4" if h.has_edge(x, y) else "P4"
                return QuasiThresholdWitness(kind, (x, u, v, y))
    return None


def brute_force_quasi_threshold_witness(h: SimpleGraph) -> QuasiThresholdWitness | None:
    """Reference check over all 4-subsets; slow but independent."""
    for quad in combinations(sorted(h.vertices), 4):
        edges = [(a, b) for a, b in combinations(quad, 2) if h.has_edge(a, b)]
        degs = sorted(sum(1 for e in edges if v in e) for v in quad)
        if len(edges) == 3 and degs == [1, 1, 2, 2]:
            ends = [v for v in quad if sum(1 for e in edges if v in e) == 1]
            seq = [ends[0]]
            while len(seq) < 4:
                seq.append(next(w for w in quad if w not in seq and h.has_edge(seq[-1], w)))
            return QuasiThresholdWitness("P4", tuple(seq))
        if len(edges) == 4 and degs == [2, 2, 2, 2]:
            seq = [quad[0]]
            while len(seq) < 4:
                seq.append(next(w for w in quad if w not in seq and h.has_edge(seq[-1], w)))
            return QuasiThresholdWitness("C4", tuple(seq))
    return None


def universal_clique_cutset(h: SimpleGraph) -> tuple[frozenset[int], list[frozenset[int]]]:
    """Split a connected non-complete quasi-threshold graph at its universal vertices.

    Returns ``(Q, parts)`` where Q is the set of vertices adjacent to all
    others and ``parts`` are the components of ``h - Q`` by smallest label.
    """
    if len(connected_components(h)) > 1:
        raise DisconnectedInput("graph is disconnected")
    if is_complete_graph(h):
        raise CompleteInput("complete graph has no clique cutset")
    witness = quasi_threshold_witness(h)
    if witness is not None:
        raise NotQuasiThreshold(witness)
    size = len(h) - 1
    q = frozenset(v for v in h.vertices if len(h.neighbours(v)) == size)
    rest = h.subgraph(h.vertices - q)
    parts = connected_components(rest)
    # holds for every connected quasi-threshold graph
    assert q and len(parts) >= 2, "universal vertices do not disconnect the graph"
    return q, parts
