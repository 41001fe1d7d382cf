"""Command-line entry point: graph6 streams in, graph6 or reports out.

Exit codes: 0 success, 1 a verification claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterator, Sequence, TextIO

from . import catalog
from .canon import canonical_form
from .colour import chi_k, is_mk_colourable
from .enumerate import SearchConfig, default_threads, enumerate_triangle_free
from .graph import Graph6Error, SmallGraph, g6, read_graph6_lines
from .planar import face_profile, planar_embedding

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _open_input(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _graphs(args: argparse.Namespace) -> Iterator[SmallGraph]:
    stream = _open_input(args.input)
    for _, g in read_graph6_lines(stream):
        yield g


def _witness(colour: Sequence[int]) -> str:
    return ",".join(map(str, colour))


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    if (args.chi_k is None) != (args.chi_eq is None):
        raise UsageError("--chi-k and --chi-eq must be given together")
    chi_filter = (args.chi_k, "eq", args.chi_eq) if args.chi_k is not None else None
    try:
        cfg = SearchConfig(
            args.order,
            require_planar=args.planar or args.maximal,
            require_maximal_tfp=args.maximal,
            chi_filter=chi_filter,
            threads=args.threads,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    graphs, stats = enumerate_triangle_free(cfg)
    for g in graphs:
        out.write(g6(g) + "\n")
    if args.stats:
        for line in stats.as_lines():
            print(line, file=sys.stderr)
    return EXIT_OK


def cmd_chi(args: argparse.Namespace, out: TextIO) -> int:
    if args.k < 0 or (args.m is not None and args.m < 1):
        raise UsageError("need --k >= 0 and --m >= 1")
    for g in _graphs(args):
        if args.m is not None:
            c = is_mk_colourable(g, args.m, args.k)
            out.write(f"{g6(g)} UNSAT\n" if c is None else f"{g6(g)} SAT {_witness(c.colour)}\n")
        else:
            m = chi_k(g, args.k)
            c = is_mk_colourable(g, m, args.k)
            out.write(f"{g6(g)} {m} {_witness(c.colour)}\n")
    return EXIT_OK


def cmd_canon(args: argparse.Namespace, out: TextIO) -> int:
    for g in _graphs(args):
        out.write(canonical_form(g).graph6 + "\n")
    return EXIT_OK


def cmd_faces(args: argparse.Namespace, out: TextIO) -> int:
    for g in _graphs(args):
        if not g.is_connected():
            out.write("DISCONNECTED\n")
            continue
        emb = planar_embedding(g)
        if emb is None:
            out.write("NONPLANAR\n")
            continue
        p = face_profile(emb)
        lengths = " ".join(map(str, p.lengths))
        out.write(f"{g.n} {g.num_edges} {p.f4} {p.f5} {lengths}".rstrip() + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    ids = catalog.claim_ids() if args.all else args.claim
    if not ids:
        raise UsageError("give --claim ID (repeatable) or --all")
    unknown = [c for c in ids if c not in catalog.claim_ids()]
    if unknown:
        raise UsageError(f"unknown claim(s): {', '.join(unknown)}")
    ok = True
    for cid in ids:
        report = catalog.verify(cid, threads=args.threads)
        ok &= report.passed
        if args.json:
            out.write(json.dumps(report.to_json(), sort_keys=False) + "\n")
        else:
            out.write(report.summary() + "\n")
            for msg in report.failures:
                print(f"{cid}: {msg}", file=sys.stderr)
        out.flush()
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args: argparse.Namespace, out: TextIO) -> int:
    if args.list:
        for name in catalog.names():
            out.write(name + "\n")
        return EXIT_OK
    if not args.name:
        raise UsageError("give --name ID or --list")
    try:
        entry = catalog.builtin(args.name)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    out.write(g6(entry.graph) + "\n")
    if entry.labels and not args.no_labels:
        for v, label in sorted(entry.labels.items()):
            out.write(f"{v}={label}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="defekt", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker processes (default: $DEFEKT_THREADS, else CPU count)",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="triangle-free graphs of one order, up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--planar", action="store_true")
    p.add_argument("--maximal", action="store_true", help="maximal triangle-free planar only (implies --planar)")
    p.add_argument("--chi-k", type=int)
    p.add_argument("--chi-eq", type=int)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("chi", help="k-defective chromatic number or (m,k) decision")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--input", help="graph6 file (default: stdin)")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("canon", help="canonical graph6 of each input graph")
    p.add_argument("--input")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("faces", help="face profile of a planar embedding")
    p.add_argument("--input")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("verify", help="run claim checks")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--claim", action="append", default=[])
    g.add_argument("--all", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="export a named graph")
    p.add_argument("--name")
    p.add_argument("--list", action="store_true")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.threads is None:
        args.threads = default_threads()
    if args.threads < 1:
        print("defekt: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out or sys.stdout)
    except (UsageError, Graph6Error) as exc:
        print(f"defekt {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
