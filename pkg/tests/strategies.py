"""Generators of graphs with a planted chain decomposition."""

from __future__ import annotations

import random

from chaindec.bigraph import BipartiteGraph, Side
from chaindec.chain import ChainDecomposition, Handedness


def planted_chain(rng: random.Random, k: int, max_block: int = 2, p: float = 0.5, handedness=Handedness.LEFT):
    """Random graph together with a valid k-chain decomposition of it."""
    label = iter(range(1, 10_000))

    def block(nonempty):
        lo = 1 if nonempty else 0
        return frozenset(next(label) for _ in range(rng.randint(lo, max_block)))

    A, B, C, D = [], [], [], []
    for i in range(k):
        if i < k - 1:
            A.append(block(True)); B.append(block(True)); C.append(block(True)); D.append(block(True))
        else:
            while True:
                last = [block(False) for _ in range(4)]
                # B_k, D_k need partners in A_k, C_k
                if any(last) and (last[0] or not last[1]) and (last[2] or not last[3]):
                    break
            A.append(last[0]); B.append(last[1]); C.append(last[2]); D.append(last[3])

    u_side = handedness.part
    side = {}
    for blocks, s in ((A, u_side), (C, u_side), (B, u_side.other), (D, u_side.other)):
        for blk in blocks:
            for v in blk:
                side[v] = s

    edges = set()

    def half(xs, ys):
        for i in range(k):
            for j in range(k):
                if j < i - 1:
                    edges.update((x, y) for x in xs[i] for y in ys[j])
                elif j == i:
                    for y in ys[i]:
                        for x in xs[i]:
                            if rng.random() < p:
                                edges.add((x, y))
                        if not any((x, y) in edges for x in xs[i]):
                            edges.add((rng.choice(sorted(xs[i])), y))
                elif j == i - 1:
                    for x in xs[i]:
                        for y in ys[j]:
                            if rng.random() < p:
                                edges.add((x, y))
                        if 1 <= i <= k - 2 and ys[j] and all((x, y) in edges for y in ys[j]):
                            edges.discard((x, rng.choice(sorted(ys[j]))))

    half(A, B)
    half(C, D)
    for i in range(k):
        for j in range(i):
            edges.update((a, d) for a in A[i] for d in D[j])
            edges.update((c, b) for c in C[i] for b in B[j])
    g = BipartiteGraph(side, edges)
    return g, ChainDecomposition(A, B, C, D, handedness)
