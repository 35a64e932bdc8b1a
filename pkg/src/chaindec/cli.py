"""Command-line interface.

    chaindec decompose -i g.bg -o t.bct [--check-p7]
    chaindec reconstruct -i t.bct [-o g.bg]
    chaindec verify -i g.bg
    chaindec enumerate -n N [--count-only] [--workers W] [--cap C] [--json out.json]
    chaindec gen -n N -p P --seed S [-o g.bg]
    chaindec stats -i g.bg

Exit status: 0 success, 1 failed verification or rejected input, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import oracle
from .codec import BitStream, decode_stream, encode_tree, envelope_bits, read_graph, write_graph
from .dectree import build_tree, decode_tree, node_bound, tree_metrics
from .errors import ChainDecError, InducedP7Found

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read_graph_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh)


def _emit_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _label_range(g) -> int:
    return max(g.vertices) if g.n else 0


def cmd_decompose(args) -> int:
    g = _read_graph_file(args.input)
    tree = build_tree(g, check_p7=args.check_p7)
    stream = encode_tree(tree, _label_range(g))
    with open(args.output, "wb") as fh:
        fh.write(stream.to_bytes())
    print(f"n={g.n} nodes={tree_metrics(tree).nodes} bits={stream.length}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    with open(args.input, "rb") as fh:
        tree = decode_stream(BitStream.from_bytes(fh.read()))
    _emit_text(write_graph(decode_tree(tree)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph_file(args.input)
    check = oracle.verify_graph(g)
    print(f"n={g.n} m={g.m} nodes={check.nodes} leaves={check.leaves} bits={check.bits} chain_nodes={check.chain_nodes}")
    for msg in check.failures:
        print(f"FAIL {msg}")
    print("OK" if check.ok else "FAILED")
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(oracle.count_class(args.n, cap=args.cap, workers=args.workers).value)
        return EXIT_OK
    report = oracle.verify_class(args.n, cap=args.cap, workers=args.workers)
    for line in report.lines():
        print(line)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.summary(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    g = oracle.random_p7free(args.n, args.p, args.seed, max_rejects=args.max_rejects)
    _emit_text(write_graph(g), args.output)
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _read_graph_file(args.input)
    tree = build_tree(g)
    metrics = tree_metrics(tree)
    n = _label_range(g)
    bits = encode_tree(tree, n).length
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"nodes {metrics.nodes}")
    print(f"leaves {metrics.leaves}")
    print(f"bits {bits}")
    if g.n >= 3:
        print(f"node_bound {node_bound(g.n)}")
        print(f"node_slack {node_bound(g.n) - metrics.nodes}")
        print(f"bit_bound {envelope_bits(n)}")
        print(f"bit_slack {envelope_bits(n) - bits}")
    return EXIT_OK


def _probability(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a probability: {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError("probability must lie in [0, 1]")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chaindec", description="Chain decomposition of P7-free bipartite graphs")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="build and serialize the decomposition tree")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--check-p7", action="store_true", help="search for an induced P7 first")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", help="decode a .bct tree back to a .bg graph")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="run every property check on one graph")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="count or verify all labelled graphs on n vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.add_argument("--json", help="write the machine-readable summary here")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gen", help="sample a random P7-free bipartite graph")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=_probability, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-rejects", type=int, default=10_000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="sizes of the tree and its encoding")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InducedP7Found as exc:
        print(f"error: input contains an induced P7: {list(exc.witness)}", file=sys.stderr)
        return EXIT_FAIL
    except ChainDecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
