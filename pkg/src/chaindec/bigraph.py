"""Labelled bipartite graphs with a fixed bipartition.

Vertices are positive integers and are never renumbered: every operation
keeps the labels of its input. Graph values are immutable.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence

from .errors import OverlappingSets, SameSideEdge, SelfLoop, UnknownVertex


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def other(self) -> Side:
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    @classmethod
    def parse(cls, value) -> Side:
        if isinstance(value, Side):
            return value
        return cls(str(value).upper())


LEFT = Side.LEFT
RIGHT = Side.RIGHT


class BipartiteGraph:
    """A bipartite graph G = (U, W, E) with U = Left and W = Right.

    Equality compares the side map and the edge set, so two graphs with the
    same edges but a different bipartition are different graphs.
    """

    __slots__ = ("_side", "_adj", "_hash")

    def __init__(self, side: Mapping[int, Side], edges: Iterable[tuple[int, int]] = ()):
        side = {int(v): Side.parse(s) for v, s in side.items()}
        adj: dict[int, set[int]] = {v: set() for v in side}
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            if u not in side:
                raise UnknownVertex(u)
            if v not in side:
                raise UnknownVertex(v)
            if side[u] is side[v]:
                raise SameSideEdge(u, v)
            adj[u].add(v)
            adj[v].add(u)
        self._side = side
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._hash = None

    @classmethod
    def _raw(cls, side: dict[int, Side], adj: dict[int, frozenset[int]]) -> BipartiteGraph:
        # trusted constructor: no validation, takes ownership of both dicts
        g = object.__new__(cls)
        g._side = side
        g._adj = adj
        g._hash = None
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._side)

    @property
    def n(self) -> int:
        return len(self._side)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    @property
    def side(self) -> Mapping[int, Side]:
        return self._side

    def side_of(self, v: int) -> Side:
        try:
            return self._side[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def part(self, side: Side) -> frozenset[int]:
        return frozenset(v for v, s in self._side.items() if s is side)

    @property
    def left(self) -> frozenset[int]:
        return self.part(Side.LEFT)

    @property
    def right(self) -> frozenset[int]:
        return self.part(Side.RIGHT)

    def neighbours(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def has_edge(self, u: int, v: int) -> bool:
        ns = self._adj.get(u)
        return ns is not None and v in ns

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as (left endpoint, right endpoint) pairs."""
        return frozenset(
            (u, w) for u, ns in self._adj.items() if self._side[u] is Side.LEFT for w in ns
        )

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._side

    def __len__(self) -> int:
        return len(self._side)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self._side == other._side and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._side.items()), self.edges))
        return self._hash

    def __repr__(self) -> str:
        sides = "".join(self._side[v].value for v in sorted(self._side))
        return f"BipartiteGraph(vertices={sorted(self._side)}, sides={sides!r}, edges={self.sorted_edges()})"


def make_graph(n: int, sides: Sequence, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a graph on vertices 1..n; ``sides[i]`` is the side of vertex i+1.

    Sides may be given as :class:`Side` members or as ``"L"``/``"R"``
    characters, so ``make_graph(3, "LRL", ...)`` works.
    """
    if len(sides) != n:
        raise ValueError(f"expected {n} sides, got {len(sides)}")
    side = {i + 1: Side.parse(s) for i, s in enumerate(sides)}
    return BipartiteGraph(side, edges)


def empty_graph() -> BipartiteGraph:
    return BipartiteGraph._raw({}, {})


def bipartite_complement(g: BipartiteGraph) -> BipartiteGraph:
    left = [v for v, s in g._side.items() if s is Side.LEFT]
    right = [v for v, s in g._side.items() if s is Side.RIGHT]
    lset, rset = frozenset(left), frozenset(right)
    adj = {}
    for v, s in g._side.items():
        adj[v] = (rset if s is Side.LEFT else lset) - g._adj[v]
    return BipartiteGraph._raw(dict(g._side), adj)


def _check_subset(g: BipartiteGraph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if v not in g._side:
            raise UnknownVertex(v)
    return s


def induced_subgraph(g: BipartiteGraph, s: Iterable[int]) -> BipartiteGraph:
    s = _check_subset(g, s)
    side = {v: g._side[v] for v in s}
    adj = {v: g._adj[v] & s for v in s}
    return BipartiteGraph._raw(side, adj)


def remove_vertex(g: BipartiteGraph, v: int) -> BipartiteGraph:
    return induced_subgraph(g, g.vertices - {v})


def disjoint_union(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    common = g1._side.keys() & g2._side.keys()
    if common:
        raise OverlappingSets(f"graphs share vertices {sorted(common)}")
    side = {**g1._side, **g2._side}
    adj = {**g1._adj, **g2._adj}
    return BipartiteGraph._raw(side, adj)


def connected_components(g) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest label.

    Works for any object exposing ``vertices`` and ``neighbours(v)``.
    """
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbours(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g) -> bool:
    return len(connected_components(g)) <= 1


def neighbourhood(g: BipartiteGraph, a: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``a`` with at least one neighbour in ``a``."""
    a = _check_subset(g, a)
    out: set[int] = set()
    for v in a:
        out |= g._adj[v]
    return frozenset(out - a)


def _disjoint_pair(g, x, y):
    x = _check_subset(g, x)
    y = _check_subset(g, y)
    if x & y:
        raise OverlappingSets(f"sets overlap on {sorted(x & y)}")
    return x, y


def is_complete_to(g: BipartiteGraph, x: Iterable[int], y: Iterable[int]) -> bool:
    """True iff every cross-side pair between ``x`` and ``y`` is an edge."""
    x, y = _disjoint_pair(g, x, y)
    for u in x:
        other = g._side[u].other
        for w in y:
            if g._side[w] is other and w not in g._adj[u]:
                return False
    return True


def is_anticomplete_to(g: BipartiteGraph, x: Iterable[int], y: Iterable[int]) -> bool:
    x, y = _disjoint_pair(g, x, y)
    return all(not (g._adj[u] & y) for u in x)
