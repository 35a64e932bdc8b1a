"""Binary encoding of decomposition trees and the text graph format.

Binary layout (``.bct``), all integers big-endian, MSB first::

    "BCT1"  n:u32  body...  zero padding to a byte boundary

The body is a pre-order walk. Each node starts with a 3-bit tag
(0 leaf, 1 union, 2 co-union, 3 chain, 4 co-chain). With
L = max(1, ceil(log2 n)):

    leaf         L bits (v - 1), 1 bit side (0 = left)
    chain/co     L bits (k - 1), L bits (v1 - 1), L bits (v2 - 1), 1 bit handedness (0 = left)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

from .bigraph import BipartiteGraph, Side
from .chain import Handedness
from .dectree import Chain, CoChain, CoUnion, Leaf, Node, Union, iter_nodes
from .errors import BadMagic, InvalidTag, LabelOverflow, ParseError, SameSideEdge, TruncatedStream

MAGIC = b"BCT1"
HEADER_BITS = 64
TAG_BITS = 3
TAG_LEAF, TAG_UNION, TAG_COUNION, TAG_CHAIN, TAG_COCHAIN = range(5)


def field_width(n: int) -> int:
    return max(1, (n - 1).bit_length()) if n > 0 else 1


@dataclass(frozen=True)
class BitStream:
    """A finite bit sequence packed MSB-first into bytes."""

    data: bytes
    length: int

    def __post_init__(self):
        if not 0 <= self.length <= 8 * len(self.data) or len(self.data) != (self.length + 7) // 8:
            raise ValueError("length does not match the byte buffer")

    @classmethod
    def from_bytes(cls, data: bytes) -> BitStream:
        return cls(bytes(data), 8 * len(data))

    def to_bytes(self) -> bytes:
        return self.data

    def bit(self, i: int) -> int:
        return (self.data[i >> 3] >> (7 - (i & 7))) & 1

    def __len__(self) -> int:
        return self.length

    def bits(self) -> str:
        return "".join(str(self.bit(i)) for i in range(self.length))


class BitWriter:
    def __init__(self):
        self._value = 0
        self._length = 0

    def write(self, value: int, width: int) -> None:
        if value < 0 or value >> width:
            raise LabelOverflow(f"value {value} does not fit in {width} bits")
        self._value = (self._value << width) | value
        self._length += width

    def getstream(self) -> BitStream:
        pad = -self._length % 8
        nbytes = (self._length + pad) // 8
        return BitStream((self._value << pad).to_bytes(nbytes, "big"), self._length)


class BitReader:
    def __init__(self, stream: BitStream):
        self._stream = stream
        self._pos = 0

    @property
    def remaining(self) -> int:
        return self._stream.length - self._pos

    def read(self, width: int) -> int:
        if width > self.remaining:
            raise TruncatedStream(f"need {width} bits at offset {self._pos}, have {self.remaining}")
        value = 0
        for _ in range(width):
            value = (value << 1) | self._stream.bit(self._pos)
            self._pos += 1
        return value


def encode_tree(t: Node, n: int) -> BitStream:
    width = field_width(n)
    w = BitWriter()
    for b in MAGIC:
        w.write(b, 8)
    w.write(n, 32)

    def label(v: int) -> None:
        if not 1 <= v <= n:
            raise LabelOverflow(f"label {v} outside 1..{n}")
        w.write(v - 1, width)

    for node in iter_nodes(t):
        if isinstance(node, Leaf):
            w.write(TAG_LEAF, TAG_BITS)
            label(node.vertex)
            w.write(0 if node.side is Side.LEFT else 1, 1)
        elif isinstance(node, Union):
            w.write(TAG_COUNION if isinstance(node, CoUnion) else TAG_UNION, TAG_BITS)
        elif isinstance(node, Chain):
            w.write(TAG_COCHAIN if isinstance(node, CoChain) else TAG_CHAIN, TAG_BITS)
            label(node.k)
            label(node.v1)
            label(node.v2)
            w.write(0 if node.handedness is Handedness.LEFT else 1, 1)
        else:
            raise TypeError(f"not a tree node: {node!r}")
    return w.getstream()


def decode_stream(stream: BitStream) -> Node:
    r = BitReader(stream)
    if stream.length < HEADER_BITS:
        raise TruncatedStream("stream shorter than its header")
    magic = bytes(r.read(8) for _ in range(4))
    if magic != MAGIC:
        raise BadMagic(f"bad magic {magic!r}")
    n = r.read(32)
    width = field_width(n)

    # iterative pre-order parse: a stack of partially filled internal nodes
    def read_node():
        tag = r.read(TAG_BITS)
        if tag == TAG_LEAF:
            v = r.read(width) + 1
            return Leaf(v, Side.RIGHT if r.read(1) else Side.LEFT)
        if tag in (TAG_UNION, TAG_COUNION):
            return (tag, None)
        if tag in (TAG_CHAIN, TAG_COCHAIN):
            k = r.read(width) + 1
            v1 = r.read(width) + 1
            v2 = r.read(width) + 1
            hand = Handedness.RIGHT if r.read(1) else Handedness.LEFT
            return (tag, (k, v1, v2, hand))
        raise InvalidTag(tag)

    def make(tag, payload, first, second):
        if tag == TAG_UNION:
            return Union(first, second)
        if tag == TAG_COUNION:
            return CoUnion(first, second)
        cls = Chain if tag == TAG_CHAIN else CoChain
        return cls(*payload, first, second)

    stack: list[list] = []
    while True:
        item = read_node()
        if isinstance(item, tuple):
            stack.append([item[0], item[1], []])
            continue
        done = item
        while stack:
            stack[-1][2].append(done)
            if len(stack[-1][2]) < 2:
                break
            tag, payload, kids = stack.pop()
            done = make(tag, payload, *kids)
        else:
            break
    if r.remaining >= 8:
        raise TruncatedStream(f"{r.remaining} trailing bits after the tree")
    return done


def envelope_bits(n: int) -> int:
    """Upper bound on encoded size for an n-vertex graph, n >= 3."""
    return HEADER_BITS + (8 * n - 17) * (4 + 3 * field_width(n))


# -- text format --------------------------------------------------------------------

def write_graph(g: BipartiteGraph, fh: TextIO | None = None) -> str:
    n = g.n
    if g.vertices != frozenset(range(1, n + 1)):
        raise ValueError("the .bg format needs vertices labelled 1..n")
    lines = [f"bigraph {n} {g.m}", "sides " + "".join(g.side[v].value for v in range(1, n + 1))]
    lines += [f"e {u} {w}" for u, w in g.sorted_edges()]
    text = "\n".join(lines) + "\n"
    if fh is not None:
        fh.write(text)
    return text


def read_graph(source: str | TextIO) -> BipartiteGraph:
    """Parse the .bg format from a string or an open text file."""
    text = source if isinstance(source, str) else source.read()
    header = None
    sides = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "bigraph":
                raise ParseError(lineno, "expected 'bigraph <n> <m>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError(lineno, "n and m must be integers") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(lineno, "n and m must be non-negative")
            continue
        if sides is None:
            if parts[0] != "sides" or len(parts) > 2:
                raise ParseError(lineno, "expected 'sides <string>'")
            s = parts[1] if len(parts) == 2 else ""
            if len(s) != header[0] or set(s) - {"L", "R"}:
                raise ParseError(lineno, f"sides must be {header[0]} characters over L/R")
            sides = {i + 1: Side(c) for i, c in enumerate(s)}
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(lineno, "expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(lineno, "edge endpoints must be integers") from None
        if u not in sides or v not in sides:
            raise ParseError(lineno, f"edge {u}-{v} uses an unknown vertex")
        if sides[u] is sides[v]:
            raise SameSideEdge(u, v)
        if sides[u] is Side.RIGHT:
            u, v = v, u
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate edge {u}-{v}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None or sides is None:
        raise ParseError(len(text.splitlines()) + 1, "missing header or sides line")
    if len(edges) != header[1]:
        raise ParseError(len(text.splitlines()), f"header declares {header[1]} edges, found {len(edges)}")
    return BipartiteGraph(sides, edges)


def encoded_size(t: Node, n: int) -> int:
    """Exact bit length of ``encode_tree(t, n)`` without padding."""
    width = field_width(n)
    total = HEADER_BITS
    for node in iter_nodes(t):
        if isinstance(node, Leaf):
            total += TAG_BITS + width + 1
        elif isinstance(node, Chain):
            total += TAG_BITS + 3 * width + 1
        else:
            total += TAG_BITS
    return total

