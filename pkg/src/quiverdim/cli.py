"""Command-line front end: ``quiverdim gldim|analyze|product|graph|corpus``."""

from __future__ import annotations

import argparse
import sys

from .algebra import bound_quiver_algebra, incidence_algebra, poset_product
from .corpus import CORPUS, Expectation, run_corpus
from .exceptions import InputError, NotAdmissibleError, ParseError, ResourceCeilingError
from .graph import DEFAULT_CEILING, enumerate_indecomposables, hom_graph
from .homology import gldim, simple_dimensions
from .io import format_poset, parse_input
from .linalg import Field
from .verdict import AnalyzeOptions, analyze, analyze_components

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_NOT_ADMISSIBLE, EXIT_CEILING = 0, 1, 2, 3, 4


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path: str, fmt: str | None):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_input(text, fmt)


def _algebra(kind, obj, field):
    if kind == "poset":
        return incidence_algebra(obj, field)
    return bound_quiver_algebra(obj.quiver, obj.relations, field)


def cmd_gldim(args) -> int:
    kind, obj = _read(args.file, args.format)
    a = _algebra(kind, obj, args.field)
    cutoff = args.cutoff
    print(f"gldim: {gldim(a, cutoff)}")
    for v, (p, i) in zip(a.vertices, simple_dimensions(a, cutoff)):
        print(f"S_{v}: projd {p}, injd {i}")
    return EXIT_OK


def _options(args) -> AnalyzeOptions:
    return AnalyzeOptions(r_max=args.rmax, dim_bound=args.dim_bound, enum_field=args.enum_field,
                          cutoff=args.cutoff, targets=args.targets, ceiling=args.ceiling)


def cmd_analyze(args) -> int:
    kind, obj = _read(args.file, args.format)
    opts = _options(args)
    if kind == "poset" and not obj.is_connected():
        report = analyze_components(obj, opts, args.field)
    else:
        report = analyze(_algebra(kind, obj, args.field), opts)
    sys.stdout.write(report.to_json() if args.report == "json" else report.to_text())
    return EXIT_OK


def cmd_product(args) -> int:
    _, x = _read(args.x, "poset")
    _, y = _read(args.y, "poset")
    sys.stdout.write(format_poset(poset_product(x, y)))
    return EXIT_OK


def cmd_graph(args) -> int:
    kind, obj = _read(args.file, args.format)
    a = _algebra(kind, obj, args.field)
    mods = enumerate_indecomposables(a, args.dim_bound, args.enum_field, args.ceiling)
    g = hom_graph(a.over(args.enum_field), mods, dim_bound=args.dim_bound)
    sys.stdout.write(g.export())
    return EXIT_OK


def _override(text: str):
    try:
        name, rest = text.split(":", 1)
        key, value = rest.split("=", 1)
    except ValueError:
        raise argparse.ArgumentTypeError("expected ENTRY:KEY=VALUE") from None
    return name, key, value


def cmd_corpus(args) -> int:
    entries = list(CORPUS)
    if args.entry:
        wanted = set(args.entry)
        unknown = wanted - {e.name for e in entries}
        if unknown:
            raise InputError(f"unknown corpus entries: {', '.join(sorted(unknown))}")
        entries = [e for e in entries if e.name in wanted]
    if args.action == "list":
        for e in entries:
            exps = ", ".join(f"{x.key}={x.value} [{x.tag}]" for x in e.expectations)
            print(f"{e.name}: {exps}")
        print(f"entries: {len(entries)}")
        return EXIT_OK
    for name, key, value in args.expect or []:
        for k, e in enumerate(entries):
            if e.name == name:
                exps = [x for x in e.expectations if x.key != key] + [Expectation(key, value, "DERIVED")]
                entries[k] = type(e)(e.name, e.text, tuple(exps), e.note)
    rows = run_corpus(entries, _options(args))
    failures = 0
    for name, key, want, got, tag, ok in rows:
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name} {key}: expected {want} [{tag}], got {got}")
    print(f"summary: {len(rows) - failures} passed, {failures} failed")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def _add_algebra_args(p):
    p.add_argument("file", help="poset or quiver file")
    p.add_argument("--format", choices=("poset", "quiver"), default=None,
                   help="input format (default: detect from the first directive)")
    p.add_argument("--field", type=_field, default=Field.parse("q"), help="coefficient field: q or gfP (default q)")
    p.add_argument("--cutoff", type=int, default=None, help="resolution cutoff (default 2*vertices+2)")


def _add_enum_args(p):
    p.add_argument("--dim-bound", type=int, default=2, help="max dimension per vertex when enumerating (default 2)")
    p.add_argument("--enum-field", type=_field, default=Field.parse("gf2"), help="enumeration field (default gf2)")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help="search-space ceiling in tree nodes")


def _add_analyze_args(p):
    p.add_argument("--rmax", type=int, default=5, help="longest epsilon-path tried (default 5)")
    p.add_argument("--targets", choices=("all", "simples"), default="all", help="epsilon-path targets")
    _add_enum_args(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverdim", description="Homological invariants of bound quiver and incidence algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gldim", help="global dimension and per-simple projd/injd")
    _add_algebra_args(p)
    p.set_defaults(func=cmd_gldim)

    p = sub.add_parser("analyze", help="full bound report and verdict")
    _add_algebra_args(p)
    _add_analyze_args(p)
    p.add_argument("--report", choices=("text", "json"), default="text", help="report rendering")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("product", help="product of two posets, written as a poset file")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("graph", help="enumerate indecomposables and print the Hom-graph")
    _add_algebra_args(p)
    _add_enum_args(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("corpus", help="list or check the bundled examples")
    p.add_argument("action", choices=("run", "list"))
    p.add_argument("--entry", action="append", help="restrict to these entries (repeatable)")
    p.add_argument("--expect", action="append", type=_override, metavar="ENTRY:KEY=VALUE",
                   help="replace one expected value before running")
    p.add_argument("--cutoff", type=int, default=None, help="resolution cutoff (default 2*vertices+2)")
    _add_analyze_args(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAdmissibleError as exc:
        print(f"not admissible: {exc}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except ResourceCeilingError as exc:
        print(f"resource ceiling: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
