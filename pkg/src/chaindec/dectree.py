"""Decomposition trees: build, decode, size metrics and structural checks.

A tree node decomposes a graph by one of five rules, tried in this order:
single vertex, disconnected graph, disconnected bipartite complement,
chain decomposition of the graph, chain decomposition of the complement.
Chain nodes carry two marker vertices that let the decoder find A_1, C_1.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .bigraph import (
    BipartiteGraph,
    Side,
    bipartite_complement,
    connected_components,
    disjoint_union,
    induced_subgraph,
    remove_vertex,
)
from .chain import ChainDecomposition, Handedness, chain_from_cutset, reconstruct_from_components
from .errors import InducedP7Found, MalformedComponents, MalformedTree, NotDecomposable, OverlappingSets
from .neighbourhood import is_complete_graph, neighbourhood_graph
from .patterns import find_induced_path


@dataclass(frozen=True)
class Leaf:
    vertex: int
    side: Side

    @property
    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Union:
    first: Node
    second: Node

    @property
    def children(self) -> tuple[Node, Node]:
        return (self.first, self.second)


@dataclass(frozen=True)
class CoUnion(Union):
    pass


@dataclass(frozen=True)
class Chain:
    k: int
    v1: int
    v2: int
    handedness: Handedness
    first: Node
    second: Node
    # the decomposition that produced this node; not part of the tree's identity
    decomposition: ChainDecomposition | None = field(default=None, compare=False, repr=False)

    @property
    def children(self) -> tuple[Node, Node]:
        return (self.first, self.second)


@dataclass(frozen=True)
class CoChain(Chain):
    pass


Node = Leaf | Union | CoUnion | Chain | CoChain


# -- building -------------------------------------------------------------------

def _orient(g: BipartiteGraph, dec: ChainDecomposition) -> ChainDecomposition:
    # first child must hold the smallest label other than the two markers
    markers = {min(dec.D[0]), min(dec.B[0])}
    smallest = min(g.vertices - markers)
    if smallest in dec.all_C or smallest in dec.all_D:
        return dec.swapped()
    return dec


def _chain_node(g: BipartiteGraph, cls) -> Chain | None:
    for handedness in (Handedness.LEFT, Handedness.RIGHT):
        if is_complete_graph(neighbourhood_graph(g, handedness.part)):
            continue
        dec = _orient(g, chain_from_cutset(g, handedness))
        v1 = min(dec.D[0])
        v2 = min(dec.B[0])
        g1 = induced_subgraph(g, dec.all_A | dec.all_B | {v1})
        g2 = induced_subgraph(g, dec.all_C | dec.all_D | {v2})
        return cls(dec.k, v1, v2, handedness, _build(g1), _build(g2), decomposition=dec)
    return None


def _build(g: BipartiteGraph) -> Node:
    if g.n == 1:
        (v,) = g.vertices
        return Leaf(v, g.side_of(v))

    comps = connected_components(g)
    if len(comps) > 1:
        first = comps[0]
        return Union(_build(induced_subgraph(g, first)), _build(induced_subgraph(g, g.vertices - first)))

    h = bipartite_complement(g)
    comps = connected_components(h)
    if len(comps) > 1:
        first = comps[0]
        return CoUnion(_build(induced_subgraph(h, first)), _build(induced_subgraph(h, h.vertices - first)))

    node = _chain_node(g, Chain)
    if node is None:
        node = _chain_node(h, CoChain)
    if node is None:
        raise NotDecomposable(f"no decomposition rule applies to {g!r}")
    return node


def build_tree(g: BipartiteGraph, check_p7: bool = False) -> Node:
    """Decomposition tree of a P7-free bipartite graph.

    With ``check_p7`` the graph is first searched for an induced P7 so that
    inputs outside the class fail with a witness rather than deep inside
    the construction.
    """
    if g.n == 0:
        raise ValueError("cannot decompose the empty graph")
    if check_p7:
        witness = find_induced_path(g, 7)
        if witness is not None:
            raise InducedP7Found(witness.vertices, "input is not P7-free")
    return _build(g)


# -- decoding -------------------------------------------------------------------

def _decode_chain(node: Chain) -> BipartiteGraph:
    f1 = decode_tree(node.first)
    f2 = decode_tree(node.second)
    v1, v2 = node.v1, node.v2
    if v1 == v2:
        raise MalformedTree("marker vertices coincide")
    for v, f, name in ((v1, f1, "v1"), (v2, f2, "v2")):
        if v not in f:
            raise MalformedTree(f"marker {name}={v} missing from its child")
    u_side = node.handedness.part
    for v in (v1, v2):
        if f1.side.get(v, f2.side.get(v)) is not u_side.other or f2.side.get(v, u_side.other) is not u_side.other:
            raise MalformedTree(f"marker {v} is not on the B/D side")
    others = (f1.vertices | f2.vertices) - {v1, v2}
    if not others or min(others) not in f1.vertices:
        raise MalformedTree("first child does not hold the smallest non-marker label")

    a1 = f1.part(u_side) - f1.neighbours(v1)
    c1 = f2.part(u_side) - f2.neighbours(v2)
    g1 = remove_vertex(f1, v1)
    g2 = remove_vertex(f2, v2)
    try:
        return reconstruct_from_components(g1, g2, node.k, a1, c1, node.handedness)
    except (MalformedComponents, OverlappingSets) as exc:
        raise MalformedTree(str(exc)) from exc


def decode_tree(t: Node) -> BipartiteGraph:
    """Rebuild the graph a decomposition tree describes."""
    if isinstance(t, Leaf):
        return BipartiteGraph({t.vertex: t.side})
    if isinstance(t, Union):
        try:
            joined = disjoint_union(decode_tree(t.first), decode_tree(t.second))
        except OverlappingSets as exc:
            raise MalformedTree(str(exc)) from exc
        return bipartite_complement(joined) if isinstance(t, CoUnion) else joined
    if isinstance(t, Chain):
        if t.k < 2:
            raise MalformedTree("chain nodes need k >= 2")
        g = _decode_chain(t)
        return bipartite_complement(g) if isinstance(t, CoChain) else g
    raise MalformedTree(f"unknown node {t!r}")


# -- metrics and structure -------------------------------------------------------

def iter_nodes(t: Node) -> Iterator[Node]:
    """Pre-order traversal."""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


@dataclass(frozen=True)
class TreeMetrics:
    nodes: int
    leaves: int


def tree_metrics(t: Node) -> TreeMetrics:
    nodes = leaves = 0
    for node in iter_nodes(t):
        nodes += 1
        leaves += isinstance(node, Leaf)
    return TreeMetrics(nodes, leaves)


def node_bound(n: int) -> int:
    return 8 * n - 17


def leaf_bound(n: int, k: int = 2) -> int:
    """Largest leaf count of a k-decomposition tree of an n-set."""
    return 2 ** (n - 1) if n <= k else (n - k) * 2**k


@dataclass
class TwoDecompositionReport:
    violations: list[str] = field(default_factory=list)
    # (pre-order index, |S(first) & S(second)|) for every internal node
    overlaps: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def max_overlap(self) -> int:
        return max((o for _, o in self.overlaps), default=0)


def _vertex_sets(t: Node) -> dict[int, frozenset[int]]:
    sets: dict[int, frozenset[int]] = {}

    def walk(node) -> frozenset[int]:
        if isinstance(node, Leaf):
            s = frozenset((node.vertex,))
        else:
            s = walk(node.first) | walk(node.second)
        sets[id(node)] = s
        return s

    walk(t)
    return sets


def verify_2decomposition(t: Node, ground: Iterable[int] | None = None, k: int = 2) -> TwoDecompositionReport:
    """Check that the tree, with S(node) = vertices it decomposes, is a k-decomposition tree.

    ``ground`` is the vertex set of the decomposed graph; it defaults to the
    set of leaf labels.
    """
    report = TwoDecompositionReport()
    sets = _vertex_sets(t)
    ground = frozenset(ground) if ground is not None else sets[id(t)]

    for idx, node in enumerate(iter_nodes(t)):
        s = ground if node is t else sets[id(node)]
        if node is not t and s == ground:
            report.violations.append(f"clause 1: non-root node {idx} covers the whole ground set")
        if isinstance(node, Leaf):
            if len(s) != 1:
                report.violations.append(f"clause 2: leaf {idx} has |S| = {len(s)}")
            continue
        if len(s) == 1:
            report.violations.append(f"clause 2: internal node {idx} has |S| = 1")
        s1 = sets[id(node.first)]
        s2 = sets[id(node.second)]
        if s1 | s2 != s:
            report.violations.append(f"clause 3(a): node {idx} children miss {sorted(s - (s1 | s2))}")
        total = len(s1) + len(s2)
        if not len(s) <= total <= len(s) + k:
            report.violations.append(f"clause 3(b): node {idx} has |S1|+|S2| = {total}, |S| = {len(s)}")
        if not (s1 - s2) or not (s2 - s1):
            report.violations.append(f"clause 3(c): node {idx} has a child without a private element")
        report.overlaps.append((idx, len(s1 & s2)))
    return report
