"""Command-line entry point: ``taxicab <subcommand> ...``.

Exit codes: 0 success or consistent verdict, 1 negative verdict,
2 usage or parse error, 3 node limit reached.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .counting import ConsistencyError, lambda_coefficients, lambda_size_polynomial, lambda_size_recursive
from .geometry import DimensionMismatchError, Metric, distance_set, generate_lambda
from .io import format_fraction
from .lemmas import PreconditionError
from .search import (
    CONSISTENT,
    DEFAULT_NODE_LIMIT,
    INCOMPLETE,
    GridSpec,
    GridTooSmallError,
    max_k_distance_sets,
    verify_conjecture_instance,
)
from .similarity import are_similar, canonicalize

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="taxicab", description="Sets in R^d determining k taxicab distances.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="write Lambda_d(k) as a point file")
    s.add_argument("d", type=_positive)
    s.add_argument("k", type=_nonneg)
    s.add_argument("--out", type=Path)

    s = sub.add_parser("count", help="print |Lambda_d(k)|")
    s.add_argument("d", type=_positive)
    s.add_argument("k", type=_nonneg)
    s.add_argument("--method", choices=["enum", "rec", "poly", "all"], default="rec")

    s = sub.add_parser("table", help="coefficient rows of |Lambda_d(k)| in powers of k+1")
    s.add_argument("dmax", type=_positive)

    s = sub.add_parser("distances", help="print the distance set of a point file")
    s.add_argument("file", type=Path)
    s.add_argument("--metric", choices=["l1", "linf"], default="l1")

    s = sub.add_parser("canon", help="print the canonical representative")
    s.add_argument("file", type=Path)

    s = sub.add_parser("similar", help="exit 0 iff two point files are l1-similar")
    s.add_argument("file1", type=Path)
    s.add_argument("file2", type=Path)

    for name, helptext in (("search", "largest k-distance sets on a grid"),
                           ("verify", "compare the grid optimum with Lambda_d(k)")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("d", type=_positive)
        s.add_argument("k", type=_positive)
        s.add_argument("--m", type=_positive, required=True)
        s.add_argument("--q", type=_positive, default=1)
        s.add_argument("--jobs", type=_positive, default=1)
        s.add_argument("--node-limit", type=_positive, default=DEFAULT_NODE_LIMIT)
        s.add_argument("--orderly", action="store_true",
                       help="only explore subsets touching the grid's lower faces")
        if name == "search":
            s.add_argument("--metric", choices=["l1", "linf"], default="l1")
            s.add_argument("--out", type=Path,
                           help="write class i to OUT_<i>.txt instead of stdout")

    s = sub.add_parser("render", help="SVG (d=2) or layered text (d=3)")
    s.add_argument("file", type=Path)
    s.add_argument("--out", type=Path)
    s.add_argument("--unit", type=_positive, default=40)
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")


def _cmd_count(a) -> int:
    methods = {
        "enum": lambda: len(generate_lambda(a.d, a.k)),
        "rec": lambda: lambda_size_recursive(a.d, a.k),
        "poly": lambda: lambda_size_polynomial(a.d, a.k),
    }
    if a.method != "all":
        print(methods[a.method]())
        return EXIT_OK
    values = {name: f() for name, f in methods.items()}
    if len(set(values.values())) != 1:
        detail = ", ".join(f"{n}={v}" for n, v in values.items())
        raise ConsistencyError(f"counting methods disagree: {detail}")
    print(values["rec"])
    return EXIT_OK


def _cmd_table(a) -> int:
    for d in range(2, a.dmax + 1):
        poly = lambda_coefficients(d)
        print(f"{d}: " + " ".join(format_fraction(c) for c in poly.coefficients))
    return EXIT_OK


def _cmd_search(a) -> int:
    res = max_k_distance_sets(
        GridSpec(a.d, a.m, a.q), a.k, Metric(a.metric),
        jobs=a.jobs, node_limit=a.node_limit, orderly=a.orderly,
    )
    status = "" if res.complete else " (INCOMPLETE: node limit reached)"
    print(f"max size: {res.max_size}{status}")
    print(f"classes: {len(res.canonical_classes)}")
    print(f"nodes: {res.nodes_explored}")
    for i, c in enumerate(res.canonical_classes, start=1):
        if a.out is None:
            print(f"# class {i}")
            sys.stdout.write(io.dumps(c))
        else:
            io.dump(c, a.out.with_name(f"{a.out.name}_{i}.txt"))
    return EXIT_OK if res.complete else EXIT_LIMIT


def _cmd_verify(a) -> int:
    rep = verify_conjecture_instance(
        a.d, a.k, GridSpec(a.d, a.m, a.q),
        jobs=a.jobs, node_limit=a.node_limit, orderly=a.orderly,
    )
    print(rep.summary())
    if rep.witness is not None:
        print("# witness")
        sys.stdout.write(io.dumps(rep.witness))
    if rep.verdict == CONSISTENT:
        return EXIT_OK
    return EXIT_LIMIT if rep.verdict == INCOMPLETE else EXIT_NEGATIVE


def _cmd_render(a) -> int:
    c = io.load(a.file)
    if c.dimension == 2:
        _emit(io.render_svg(c, a.unit), a.out)
    elif c.dimension == 3:
        _emit(io.render_layers(c), a.out)
    else:
        raise DimensionMismatchError(f"render supports d=2 or d=3, got d={c.dimension}")
    return EXIT_OK


def _dispatch(a) -> int:
    cmd = a.command
    if cmd == "gen":
        _emit(io.dumps(generate_lambda(a.d, a.k)), a.out)
        return EXIT_OK
    if cmd == "count":
        return _cmd_count(a)
    if cmd == "table":
        return _cmd_table(a)
    if cmd == "distances":
        ds = distance_set(io.load(a.file), Metric(a.metric))
        print(" ".join(format_fraction(v) for v in ds))
        print(f"count: {len(ds)}")
        return EXIT_OK
    if cmd == "canon":
        sys.stdout.write(io.dumps(canonicalize(io.load(a.file))))
        return EXIT_OK
    if cmd == "similar":
        same = are_similar(io.load(a.file1), io.load(a.file2))
        print("similar" if same else "not similar")
        return EXIT_OK if same else EXIT_NEGATIVE
    if cmd == "search":
        return _cmd_search(a)
    if cmd == "verify":
        return _cmd_verify(a)
    return _cmd_render(a)


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"taxicab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args)
    except io.ConfigParseError as exc:
        print(f"taxicab: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"taxicab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DimensionMismatchError, PreconditionError, GridTooSmallError) as exc:
        print(f"taxicab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"taxicab: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
