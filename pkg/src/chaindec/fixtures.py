"""Small named graphs used in tests, docs and the CLI."""

from __future__ import annotations

from .bigraph import BipartiteGraph, make_graph


def path(n: int) -> BipartiteGraph:
    """The path 1-2-...-n with odd vertices on the left."""
    sides = "".join("L" if i % 2 else "R" for i in range(1, n + 1))
    return make_graph(n, sides, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> BipartiteGraph:
    if n % 2 or n < 4:
        raise ValueError("bipartite cycles need an even length >= 4")
    sides = "LR" * (n // 2)
    return make_graph(n, sides, [(i, i % n + 1) for i in range(1, n + 1)])


K2 = make_graph(2, "LR", [(1, 2)])
TWO_K2 = make_graph(4, "LRLR", [(1, 2), (3, 4)])
P7 = path(7)
P8 = path(8)
C6 = cycle(6)
G8 = make_graph(8, "LLLLRRRR", [(1, 5), (2, 5), (2, 6), (3, 7), (4, 5), (4, 7), (4, 8)])
# connected, left neighbourhood graph is the path 1-5-3
SIX = make_graph(6, "LRLRLR", [(1, 2), (3, 4), (5, 2), (5, 4), (5, 6)])

FIXTURES: dict[str, BipartiteGraph] = {
    "K2": K2,
    "TWO_K2": TWO_K2,
    "P7": P7,
    "P8": P8,
    "C6": C6,
    "G8": G8,
    "SIX": SIX,
}
