"""Command-line interface.

Exit codes: 0 magic / found, 1 negative verdict, 2 parameter rejection,
3 group or torsion failure, 4 malformed input or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .curve import Curve, find_full_torsion_curve, find_torsion_basis, torsion_subgroup
from .errors import DomainError, GroupError, ParameterError, ResourceError
from .group import element_for_index, make_product_group, make_symbolic_3torsion
from .serialize import (
    DocumentError,
    parse_grid,
    render_report,
    render_square,
    square_from_json,
    square_to_json,
)
from .square import (
    DEFAULT_SEARCH_LIMIT,
    LatinSquare,
    StepParams,
    build_square,
    check_label_grid,
    latin_to_square,
    reverse_search,
    validate_latin,
    validate_params,
    verify_square,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_PARAM, EXIT_GROUP, EXIT_IO = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _start(text: str) -> tuple[int, int]:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"start must be 'x,y', got {text!r}") from None
    return x, y


def _add_group_args(p: argparse.ArgumentParser, default: str = "product") -> None:
    p.add_argument("--group", choices=["product", "curve", "symbolic3"], default=default)
    p.add_argument("--curve", metavar="P,A4,A6", help="curve y^2 = x^3 + a4 x + a6 over F_p")
    p.add_argument("--limit", type=int, help="point-enumeration limit on p")


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semimagic",
        description="Semi-magic squares of N-torsion points by the Uniform Step Method.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sq = sub.add_parser("square", help="build and verify a uniform-step square")
    sq.add_argument("--n", type=int, required=True)
    for name, default in (("a", 1), ("b", -1), ("c", -1), ("d", 2)):
        sq.add_argument(f"--{name}", type=int, default=default)
    sq.add_argument("--start", type=_start, help="x1,y1 (default: centre)")
    _add_group_args(sq)
    _add_format_arg(sq)

    tor = sub.add_parser("torsion", help="list the N-torsion of a curve and its basis")
    tor.add_argument("--n", type=int, required=True)
    tor.add_argument("--curve", metavar="P,A4,A6", required=True)
    tor.add_argument("--limit", type=int)
    _add_format_arg(tor)

    ver = sub.add_parser("verify", help="re-verify a square JSON document")
    ver.add_argument("path")
    _add_format_arg(ver)

    se = sub.add_parser("search", help="find step parameters generating an integer grid")
    se.add_argument("path")
    se.add_argument("--max-n", type=int, default=DEFAULT_SEARCH_LIMIT)

    la = sub.add_parser("latin", help="build a square from a Latin-square file")
    la.add_argument("path")
    _add_group_args(la)
    _add_format_arg(la)
    return parser


def _resolve_group(args, N: int):
    if args.group == "product":
        return make_product_group(N)
    if args.group == "symbolic3":
        if N != 3:
            raise CliError("the symbolic group is the 3-torsion; use --n 3", EXIT_PARAM)
        return make_symbolic_3torsion()
    if args.curve:
        E = Curve.from_string(args.curve)
        return E, find_torsion_basis(E, N, args.limit)
    return find_full_torsion_curve(N, limit=args.limit)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None


def _emit_square(sq, fmt: str, out) -> int:
    report = verify_square(sq)
    if fmt == "json":
        out.write(square_to_json(sq))
    else:
        out.write(render_square(sq) + "\n\n" + render_report(sq, report) + "\n")
    return EXIT_OK if report.is_magic else EXIT_NEGATIVE


def cmd_square(args, out) -> int:
    N = args.n
    start = args.start or ((N + 1) // 2, (N + 1) // 2)
    params = StepParams(N, args.a, args.b, args.c, args.d, *start)
    problems = validate_params(params)
    if problems:
        raise CliError("parameter rejected: " + "; ".join(problems), EXIT_PARAM)
    _, basis = _resolve_group(args, N)
    return _emit_square(build_square(params, basis), args.format, out)


def cmd_torsion(args, out) -> int:
    E = Curve.from_string(args.curve)
    points = torsion_subgroup(E, args.n, args.limit)
    basis = find_torsion_basis(E, args.n, args.limit)
    table = [(k, element_for_index(basis, k)) for k in range(1, args.n**2 + 1)]
    if args.format == "json":
        doc = {
            "n": args.n,
            "group": E.describe(),
            "torsion": [str(P) for P in points],
            "basis": [str(basis.P), str(basis.Q)],
            "index": {str(k): str(P) for k, P in table},
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    out.write(f"E: y^2 = x^3 + {E.a4}x + {E.a6} over F_{E.p}\n")
    out.write(f"E[{args.n}] has {len(points)} points:\n")
    for P in points:
        out.write(f"  {P}\n")
    out.write(f"basis: P = {basis.P}, Q = {basis.Q}\n")
    out.write("k -> R_k = [m]P + [n]Q:\n")
    for k, P in table:
        out.write(f"  {k:>4}  {P}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        sq = square_from_json(_read(args.path))
    except DocumentError as exc:
        raise CliError(f"{args.path}: {exc}", EXIT_IO) from None
    report = verify_square(sq)
    if args.format == "json":
        G = sq.group
        doc = {
            "is_magic": report.is_magic,
            "is_permutation": report.is_permutation,
            "row_sums": [G.format_element(s) for s in report.row_sums],
            "col_sums": [G.format_element(s) for s in report.col_sums],
            "failing_rows": report.failing_rows,
            "failing_cols": report.failing_cols,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(render_report(sq, report) + "\n")
    return EXIT_OK if report.is_magic else EXIT_NEGATIVE


def cmd_search(args, out) -> int:
    try:
        labels = parse_grid(_read(args.path))
        N = check_label_grid(labels)
    except DomainError as exc:
        raise CliError(f"{args.path}: {exc}", EXIT_IO) from None
    if N > args.max_n:
        raise CliError(f"N = {N} exceeds the search limit {args.max_n}", EXIT_PARAM)
    found = reverse_search(labels, max_n=args.max_n)
    if found is None:
        out.write("not uniform-step generable\n")
        return EXIT_NEGATIVE
    p = found
    out.write(f"a={p.a} b={p.b} c={p.c} d={p.d} x1={p.x1} y1={p.y1}\n")
    problems = validate_params(p)
    if problems:
        out.write("note: these parameters do not satisfy the magic-square hypotheses\n")
    return EXIT_OK


def cmd_latin(args, out) -> int:
    try:
        L = LatinSquare.from_rows(parse_grid(_read(args.path)))
    except DomainError as exc:
        raise CliError(f"{args.path}: {exc}", EXIT_IO) from None
    problems = validate_latin(L)
    if problems:
        raise CliError("not a Latin square: " + "; ".join(problems), EXIT_PARAM)
    if L.N % 2 == 0:
        raise CliError(f"N = {L.N} is even: the construction requires N odd", EXIT_PARAM)
    _, basis = _resolve_group(args, L.N)
    return _emit_square(latin_to_square(L, basis), args.format, out)


COMMANDS = {
    "square": cmd_square,
    "torsion": cmd_torsion,
    "verify": cmd_verify,
    "search": cmd_search,
    "latin": cmd_latin,
}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except ParameterError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARAM
    except (GroupError, ResourceError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GROUP
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GROUP if args.command in ("square", "torsion", "latin") else EXIT_IO
