"""Chain decompositions of bipartite graphs.

A k-chain decomposition splits the "A/C" part of the graph into blocks
A_1..A_k, C_1..C_k and the other part into B_1..B_k, D_1..D_k so that
adjacency between the two halves G[A+B] and G[C+D] is forced by the block
indices alone. That is what lets the graph be rebuilt from its two halves
plus k, A_1 and C_1.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass

from .bigraph import (
    BipartiteGraph,
    Side,
    induced_subgraph,
    is_connected,
    neighbourhood,
)
from .errors import (
    BadInstance,
    DisconnectedInput,
    InducedP7Found,
    InvalidDecomposition,
    MalformedComponents,
    OverlappingSets,
)
from .neighbourhood import neighbourhood_graph, universal_clique_cutset
from .patterns import find_induced_path


class Handedness(enum.Enum):
    """Which part holds the A and C blocks: LEFT puts them in Left."""

    LEFT = "left"
    RIGHT = "right"

    @property
    def part(self) -> Side:
        return Side.LEFT if self is Handedness.LEFT else Side.RIGHT


def _blocks(seq: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(b) for b in seq)


def _union(blocks: Iterable[frozenset[int]]) -> frozenset[int]:
    out: set[int] = set()
    for b in blocks:
        out |= b
    return frozenset(out)


@dataclass(frozen=True)
class ChainDecomposition:
    A: tuple[frozenset[int], ...]
    B: tuple[frozenset[int], ...]
    C: tuple[frozenset[int], ...]
    D: tuple[frozenset[int], ...]
    handedness: Handedness = Handedness.LEFT

    def __post_init__(self):
        for name in "ABCD":
            object.__setattr__(self, name, _blocks(getattr(self, name)))
        lengths = {len(self.A), len(self.B), len(self.C), len(self.D)}
        if len(lengths) != 1 or not self.A:
            raise ValueError("A, B, C, D must be nonempty sequences of equal length")

    @property
    def k(self) -> int:
        return len(self.A)

    @property
    def all_A(self) -> frozenset[int]:
        return _union(self.A)

    @property
    def all_B(self) -> frozenset[int]:
        return _union(self.B)

    @property
    def all_C(self) -> frozenset[int]:
        return _union(self.C)

    @property
    def all_D(self) -> frozenset[int]:
        return _union(self.D)

    def swapped(self) -> ChainDecomposition:
        """The decomposition (C, D, A, B), which is valid whenever this one is."""
        return ChainDecomposition(self.C, self.D, self.A, self.B, self.handedness)

    def __str__(self) -> str:
        def fmt(blocks):
            return "(" + ", ".join("{" + ",".join(map(str, sorted(b))) + "}" if b else "∅" for b in blocks) + ")"

        return f"[{fmt(self.A)}{fmt(self.B)}{fmt(self.C)}{fmt(self.D)}] k={self.k} {self.handedness.value}"


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple = ()
    detail: str = ""

    def __str__(self) -> str:
        s = f"{self.axiom}: {list(self.witness)}"
        return f"{s} ({self.detail})" if self.detail else s


def validate_chain(g: BipartiteGraph, dec: ChainDecomposition) -> list[Violation]:
    """List every violated chain axiom; an empty list means ``dec`` is valid for ``g``."""
    out: list[Violation] = []
    k = dec.k
    u_side = dec.handedness.part
    U = g.part(u_side)
    W = g.part(u_side.other)

    # partition of both parts
    for name, blocks, part in (("A", dec.A, U), ("C", dec.C, U), ("B", dec.B, W), ("D", dec.D, W)):
        for i, blk in enumerate(blocks, 1):
            stray = sorted(blk - part)
            if stray:
                out.append(Violation("partition", (name, i, stray[0]), f"{name}_{i} leaves its part"))
    seen: dict[int, tuple[str, int]] = {}
    for name, blocks in (("A", dec.A), ("C", dec.C), ("B", dec.B), ("D", dec.D)):
        for i, blk in enumerate(blocks, 1):
            for v in sorted(blk):
                if v in seen:
                    out.append(Violation("partition", (v,), f"in {seen[v][0]}_{seen[v][1]} and {name}_{i}"))
                else:
                    seen[v] = (name, i)
    for v in sorted(g.vertices - seen.keys()):
        out.append(Violation("partition", (v,), "vertex not covered"))

    def known(blk):
        return blk & g.side.keys()

    A = [known(b) for b in dec.A]
    B = [known(b) for b in dec.B]
    C = [known(b) for b in dec.C]
    D = [known(b) for b in dec.D]
    nb = g.neighbours

    # nonemptiness
    for i in range(k - 1):
        for name, blocks in (("A", dec.A), ("B", dec.B), ("C", dec.C), ("D", dec.D)):
            if not blocks[i]:
                out.append(Violation("nonempty", (name, i + 1), f"{name}_{i + 1} is empty"))
    if not (dec.A[-1] or dec.B[-1] or dec.C[-1] or dec.D[-1]):
        out.append(Violation("nonempty", ("layer", k), "last layer is empty"))

    # every vertex of B_i (D_i) has a neighbour in A_i (C_i)
    for i in range(k):
        for y_name, x_name, ys, xs in (("B", "A", B, A), ("D", "C", D, C)):
            for y in sorted(ys[i]):
                if not nb(y) & xs[i]:
                    out.append(Violation(f"{y_name}_i has a neighbour in {x_name}_i", (y,), f"i={i + 1}"))

    # for 2 <= i <= k-1, every vertex of A_i (C_i) has a non-neighbour in B_{i-1} (D_{i-1})
    for i in range(1, k - 1):
        for x_name, y_name, xs, ys in (("A", "B", A, B), ("C", "D", C, D)):
            for x in sorted(xs[i]):
                if ys[i - 1] <= nb(x):
                    out.append(Violation(f"{x_name}_i has a non-neighbour in {y_name}_i-1", (x,), f"i={i + 1}"))

    def complete(xs_name, xi, ys_name, yj, x_blk, y_blk, axiom):
        for x in sorted(x_blk):
            missing = y_blk - nb(x)
            if missing:
                out.append(Violation(axiom, (x, min(missing)), f"{xs_name}_{xi} vs {ys_name}_{yj}"))

    def anticomplete(xs_name, xi, ys_name, yj, x_blk, y_blk, axiom):
        for x in sorted(x_blk):
            hit = y_blk & nb(x)
            if hit:
                out.append(Violation(axiom, (x, min(hit)), f"{xs_name}_{xi} vs {ys_name}_{yj}"))

    for i in range(k):
        for j in range(k):
            # same-half ladder: A_i vs B_j and C_i vs D_j
            for xn, yn, xs, ys in (("A", "B", A, B), ("C", "D", C, D)):
                if j > i:
                    anticomplete(xn, i + 1, yn, j + 1, xs[i], ys[j], f"{xn}_i anticomplete to {yn}_j for j>i")
                elif j < i - 1:
                    complete(xn, i + 1, yn, j + 1, xs[i], ys[j], f"{xn}_i complete to {yn}_j for j<i-1")
            # cross-half: A_i vs D_j and C_i vs B_j
            for xn, yn, xs, ys in (("A", "D", A, D), ("C", "B", C, B)):
                if j < i:
                    complete(xn, i + 1, yn, j + 1, xs[i], ys[j], f"{xn}_i complete to {yn}_j for j<i")
                else:
                    anticomplete(xn, i + 1, yn, j + 1, xs[i], ys[j], f"{xn}_i anticomplete to {yn}_j for j>=i")
    return out


# -- building decompositions -------------------------------------------------

@dataclass(frozen=True)
class LemmaEightInstance:
    """Six sets satisfying the hypotheses of the chain construction.

    A, Q, C lie in the A/C part; B, R, D in the other part.
    """

    A: frozenset[int]
    Q: frozenset[int]
    C: frozenset[int]
    B: frozenset[int]
    R: frozenset[int]
    D: frozenset[int]

    def __post_init__(self):
        for name in "AQCBRD":
            object.__setattr__(self, name, frozenset(getattr(self, name)))


def check_instance(
    g: BipartiteGraph, inst: LemmaEightInstance, handedness: Handedness = Handedness.LEFT
) -> list[tuple[str, str]]:
    """Return ``(clause, detail)`` for every violated hypothesis, clauses numbered 1-8."""
    bad: list[tuple[str, str]] = []
    U = g.part(handedness.part)
    W = g.part(handedness.part.other)
    nb = g.neighbours
    A, Q, C, B, R, D = inst.A, inst.Q, inst.C, inst.B, inst.R, inst.D

    if (A & Q) or (A & C) or (Q & C) or (A | Q | C) != U:
        bad.append(("1", "A, Q, C do not partition the A/C part"))
    if (B & R) or (B & D) or (R & D) or (B | R | D) != W:
        bad.append(("2", "B, R, D do not partition the other part"))
    if (A | Q | C | B | R | D) - g.side.keys():
        return bad or [("1", "unknown vertices")]
    for clause, ys, xs in (("3", B, A), ("4", R, Q), ("5", D, C)):
        for y in sorted(ys):
            if not nb(y) & xs:
                bad.append((clause, f"vertex {y} has no neighbour in its partner set"))
                break
    for a in sorted(A):
        if nb(a) & (R | D):
            bad.append(("6", f"vertex {a} of A touches R or D"))
            break
    for c in sorted(C):
        if nb(c) & (B | R):
            bad.append(("7", f"vertex {c} of C touches B or R"))
            break
    for q in sorted(Q):
        if not (B <= nb(q) or D <= nb(q)):
            bad.append(("8", f"vertex {q} of Q is complete to neither B nor D"))
            break
    return bad


def _claim1_witness(nb, A, B, C, D, QB, QD, x) -> tuple[int, ...]:
    q1 = min(nb(x) & QB)
    q2 = min(nb(x) & QD)
    b = min(B - nb(q2))
    a = min(nb(b) & A)
    d = min(D - nb(q1))
    c = min(nb(d) & C)
    return (a, b, q1, x, q2, d, c)


def _claim2_witness(nb, B, D, QB, QD, RB, RD, x) -> tuple[int, ...]:
    r1 = min(RB - nb(x))
    r2 = min(RD - nb(x))
    q1 = min(nb(r1) & QB)
    d = min(D - nb(q1))
    q2 = min(nb(r2) & QD)
    b = min(B - nb(q2))
    return (r1, q1, b, x, d, q2, r2)


def lemma8_build(
    g: BipartiteGraph, inst: LemmaEightInstance, handedness: Handedness = Handedness.LEFT
) -> ChainDecomposition:
    """Construct a chain decomposition whose first layer is (A, B, C, D).

    Each round splits Q by completeness to B and D, splits R by which of
    those pieces it sees, and either stops with a 2-layer tail or recurses
    on G[Q + R] with the split pieces as the new six sets.
    """
    bad = check_instance(g, inst, handedness)
    if bad:
        raise BadInstance(*bad[0])
    nb = g.neighbours
    As, Bs, Cs, Ds = [], [], [], []
    A, Q, C, B, R, D = inst.A, inst.Q, inst.C, inst.B, inst.R, inst.D
    while True:
        As.append(A)
        Bs.append(B)
        Cs.append(C)
        Ds.append(D)
        if not Q:
            break
        QB, QD, QBD = set(), set(), set()
        for q in Q:
            to_b = B <= nb(q)
            to_d = D <= nb(q)
            if to_b and to_d:
                QBD.add(q)
            elif to_b:
                QB.add(q)
            else:
                QD.add(q)
        QB, QD, QBD = frozenset(QB), frozenset(QD), frozenset(QBD)

        for x in sorted(R):
            if nb(x) & QB and nb(x) & QD:
                raise InducedP7Found(
                    _claim1_witness(nb, A, B, C, D, QB, QD, x),
                    f"vertex {x} sees both Q_B and Q_D",
                )
        RB = frozenset(r for r in R if nb(r) & QB)
        RD = frozenset(r for r in R if nb(r) & QD)
        RBD = R - RB - RD

        for x in sorted(QBD):
            if not (RB <= nb(x)) and not (RD <= nb(x)):
                raise InducedP7Found(
                    _claim2_witness(nb, B, D, QB, QD, RB, RD, x),
                    f"vertex {x} of Q_BD is complete to neither R_B nor R_D",
                )

        if not RB:
            As.append(QD | QBD)
            Bs.append(RD | RBD)
            Cs.append(QB)
            Ds.append(frozenset())
            break
        if not RD:
            As.append(QD)
            Bs.append(frozenset())
            Cs.append(QB | QBD)
            Ds.append(RB | RBD)
            break
        A, Q, C, B, R, D = QD, QBD, QB, RD, RBD, RB
    return ChainDecomposition(As, Bs, Cs, Ds, handedness)


def chain_from_cutset(g: BipartiteGraph, handedness: Handedness = Handedness.LEFT) -> ChainDecomposition:
    """Chain decomposition of a connected graph seeded by the universal clique cutset.

    The neighbourhood graph of the A/C part must be non-complete.
    """
    if not is_connected(g):
        raise DisconnectedInput("chain_from_cutset needs a connected graph")
    side = handedness.part
    q, parts = universal_clique_cutset(neighbourhood_graph(g, side))
    bs = [neighbourhood(g, p) for p in parts]
    W = g.part(side.other)
    r = W - _union(bs)

    for x in sorted(q):
        missed = sum(1 for b in bs if not b <= g.neighbours(x))
        if missed > 1:
            witness = find_induced_path(g, 7)
            if witness is None:
                raise BadInstance("8", f"vertex {x} misses two blocks but no induced P7 exists")
            raise InducedP7Found(witness.vertices, f"cutset vertex {x} is non-complete to two blocks")

    inst = LemmaEightInstance(
        A=parts[0], Q=q, C=_union(parts[1:]), B=bs[0], R=r, D=_union(bs[1:])
    )
    return lemma8_build(g, inst, handedness)


# -- components and reconstruction --------------------------------------------

def components_of(g: BipartiteGraph, dec: ChainDecomposition) -> tuple[BipartiteGraph, BipartiteGraph]:
    """The two halves G[A+B] and G[C+D] of a valid decomposition."""
    violations = validate_chain(g, dec)
    if violations:
        raise InvalidDecomposition(violations)
    return (
        induced_subgraph(g, dec.all_A | dec.all_B),
        induced_subgraph(g, dec.all_C | dec.all_D),
    )


def _peel(gx: BipartiteGraph, k: int, first: frozenset[int], side: Side, label: str):
    xs_all = gx.part(side)
    ys_all = gx.part(side.other)
    if not first <= xs_all:
        raise MalformedComponents(f"{label}_1 is not inside its part")
    xs = [first]
    ys = [neighbourhood(gx, first)]
    if k == 1:
        if first != xs_all or ys[0] != ys_all:
            raise MalformedComponents(f"1-chain component does not match {label}_1")
        return xs, ys
    if not first or not ys[0]:
        raise MalformedComponents(f"first layer of the {label} half is empty")
    rem_x = xs_all - first
    rem_y = ys_all - ys[0]
    for i in range(2, k):
        prev = ys[-1]
        xi = frozenset(x for x in rem_x if not prev <= gx.neighbours(x))
        if not xi:
            raise MalformedComponents(f"{label}_{i} would be empty")
        yi = neighbourhood(gx, xi) & rem_y
        if not yi:
            raise MalformedComponents(f"partner block of {label}_{i} would be empty")
        xs.append(xi)
        ys.append(yi)
        rem_x -= xi
        rem_y -= yi
    xs.append(rem_x)
    ys.append(rem_y)
    return xs, ys


def reconstruct_from_components(
    g1: BipartiteGraph,
    g2: BipartiteGraph,
    k: int,
    a1: Iterable[int],
    c1: Iterable[int],
    handedness: Handedness = Handedness.LEFT,
) -> BipartiteGraph:
    """Rebuild G from the halves G[A+B], G[C+D] of a k-chain decomposition."""
    if k < 1:
        raise MalformedComponents("k must be positive")
    if g1.vertices & g2.vertices:
        raise OverlappingSets("components share vertices")
    side = handedness.part
    A, B = _peel(g1, k, frozenset(a1), side, "A")
    C, D = _peel(g2, k, frozenset(c1), side, "C")
    cross = []
    for i in range(k):
        for j in range(i):
            cross.extend((a, d) for a in A[i] for d in D[j])
            cross.extend((c, b) for c in C[i] for b in B[j])
    sides = {**g1.side, **g2.side}
    return BipartiteGraph(sides, list(g1.edges) + list(g2.edges) + cross)

