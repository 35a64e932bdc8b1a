"""Induced path detection.

The search works on anything exposing ``vertices`` and ``neighbours(v)``,
so it serves both bipartite graphs and the plain neighbourhood graphs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class InducedPathWitness:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def is_induced_path(g, seq: Sequence[int]) -> bool:
    """Check that ``seq`` is a chordless path of ``g`` in the given order."""
    if len(set(seq)) != len(seq):
        return False
    verts = g.vertices
    if any(v not in verts for v in seq):
        return False
    for i, u in enumerate(seq):
        nbrs = g.neighbours(u)
        for j in range(i + 1, len(seq)):
            adjacent = seq[j] in nbrs
            if adjacent != (j == i + 1):
                return False
    return True


def find_induced_path(g, k: int) -> InducedPathWitness | None:
    """Lexicographically least chordless path on ``k`` vertices, or None.

    Depth-first extension in ascending label order. Every prefix of an
    induced path is an induced path, so the first hit is the least one.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    order = sorted(g.vertices)
    if len(order) < k:
        return None
    nbrs = {v: g.neighbours(v) for v in order}
    sorted_nbrs = {v: sorted(ns) for v, ns in nbrs.items()}

    path: list[int] = []
    # vertices adjacent to some path vertex other than the last one
    blocked_count: dict[int, int] = {}

    def extend() -> bool:
        if len(path) == k:
            return True
        last = path[-1]
        for w in sorted_nbrs[last]:
            if w in on_path or blocked_count.get(w, 0):
                continue
            # w may only touch ``last``; ``last``'s own neighbours get blocked once w is added
            for x in nbrs[last]:
                blocked_count[x] = blocked_count.get(x, 0) + 1
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            path.pop()
            on_path.discard(w)
            for x in nbrs[last]:
                blocked_count[x] -= 1
        return False

    for start in order:
        path = [start]
        on_path = {start}
        blocked_count = {}
        if extend():
            return InducedPathWitness(tuple(path))
    return None


def is_p7_free(g) -> bool:
    return find_induced_path(g, 7) is None
