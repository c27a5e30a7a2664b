"""JSON and text rendering of squares, and parsing of integer grid files."""

from __future__ import annotations

import json
from typing import Any

from .curve import Curve
from .errors import DomainError
from .group import (
    AbelianGroup,
    ProductGroup,
    SymbolicTorsion3,
    TorsionBasis,
)
from .square import MagicSquare, StepParams, VerifyReport, to_classic_labels


class DocumentError(DomainError):
    """A serialized square or grid file is malformed."""


def group_from_spec(spec: dict[str, Any], N: int) -> AbelianGroup:
    kind = spec.get("kind")
    if kind == "product":
        return ProductGroup(N)
    if kind == "symbolic":
        if N != 3:
            raise DocumentError("symbolic group only exists for n = 3")
        return SymbolicTorsion3()
    if kind == "curve":
        try:
            return Curve(int(spec["p"]), int(spec["a4"]), int(spec["a6"]))
        except KeyError as exc:
            raise DocumentError(f"group: missing curve field {exc.args[0]!r}") from None
    raise DocumentError(f"group.kind: unknown kind {kind!r}")


def square_to_dict(sq: MagicSquare) -> dict[str, Any]:
    G = sq.group
    return {
        "n": sq.N,
        "group": G.describe(),
        "basis": (
            [G.format_element(sq.basis.P), G.format_element(sq.basis.Q)]
            if sq.basis is not None
            else None
        ),
        "params": sq.params.as_dict() if sq.params is not None else None,
        "cells": [G.format_element(e) for row in sq.cells for e in row],
    }


def square_to_json(sq: MagicSquare) -> str:
    return json.dumps(square_to_dict(sq), indent=2) + "\n"


def square_from_json(text: str) -> MagicSquare:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("n", "group", "cells"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    N = doc["n"]
    if not isinstance(N, int) or N < 1:
        raise DocumentError(f"n: expected a positive integer, got {N!r}")
    if not isinstance(doc["group"], dict):
        raise DocumentError("group: expected an object")
    try:
        G = group_from_spec(doc["group"], N)
    except DocumentError:
        raise
    except DomainError as exc:
        raise DocumentError(f"group: {exc}") from None

    cells = doc["cells"]
    if not isinstance(cells, list) or len(cells) != N * N:
        raise DocumentError(f"cells: expected {N * N} element strings")
    parsed = []
    for i, s in enumerate(cells):
        if not isinstance(s, str):
            raise DocumentError(f"cells[{i}]: expected a string")
        try:
            parsed.append(G.parse_element(s))
        except DomainError as exc:
            raise DocumentError(f"cells[{i}]: {exc}") from None
    grid = [parsed[r * N : (r + 1) * N] for r in range(N)]

    basis = None
    if doc.get("basis") is not None:
        spec = doc["basis"]
        if not isinstance(spec, list) or len(spec) != 2:
            raise DocumentError("basis: expected two element strings")
        try:
            basis = TorsionBasis(G, N, G.parse_element(spec[0]), G.parse_element(spec[1]))
        except DomainError as exc:
            raise DocumentError(f"basis: {exc}") from None

    params = None
    if doc.get("params") is not None:
        p = doc["params"]
        try:
            params = StepParams(N, *(int(p[k]) for k in ("a", "b", "c", "d", "x1", "y1")))
        except (KeyError, TypeError, ValueError):
            raise DocumentError("params: expected integer fields a, b, c, d, x1, y1") from None
    return MagicSquare(N, grid, G, basis, params)


def _align(rows: list[list[str]]) -> str:
    width = max(len(s) for row in rows for s in row)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in rows)


def describe_group(G: AbelianGroup, N: int) -> str:
    if isinstance(G, Curve):
        return f"E: y^2 = x^3 + {G.a4}x + {G.a6} over F_{G.p}"
    if isinstance(G, SymbolicTorsion3):
        return "symbolic 3-torsion {O, +-A, +-B, +-C, +-D}"
    return f"(Z/{N}) x (Z/{N})"


def render_square(sq: MagicSquare) -> str:
    out = [f"group: {describe_group(sq.group, sq.N)}"]
    if sq.params is not None:
        out.append(" ".join(f"{k}={v}" for k, v in sq.params.as_dict().items()))
    out += ["", _align(sq.labels())]
    if sq.basis is not None:
        try:
            labels = to_classic_labels(sq, sq.basis)
        except DomainError:
            pass
        else:
            out += ["", "index k of each cell:", _align([[str(k) for k in row] for row in labels])]
    return "\n".join(out)


def render_report(sq: MagicSquare, report: VerifyReport) -> str:
    fmt = sq.group.format_element
    lines = [
        "row sums (top to bottom): " + "  ".join(fmt(s) for s in report.row_sums),
        "column sums (left to right): " + "  ".join(fmt(s) for s in report.col_sums),
        f"entries are a permutation of G[{sq.N}]: {'yes' if report.is_permutation else 'no'}",
    ]
    for r in report.failing_rows:
        lines.append(f"row {r} does not sum to the identity")
    for c in report.failing_cols:
        lines.append(f"column {c} does not sum to the identity")
    lines.append("magic: yes" if report.is_magic else "magic: no")
    return "\n".join(lines)


def parse_grid(text: str) -> list[list[int]]:
    """Parse N lines of N whitespace-separated integers."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise DocumentError(f"line {lineno}: expected integers, got {line.strip()!r}") from None
    N = len(rows)
    if N == 0:
        raise DocumentError("grid file is empty")
    for i, row in enumerate(rows, start=1):
        if len(row) != N:
            raise DocumentError(f"row {i}: expected {N} entries, got {len(row)}")
    return rows
