"""Uniform Step Method squares over N-torsion, their verification and reverse search.

Grid positions are Cartesian: ``x`` is the column counted from the left,
``y`` the row counted from the bottom, both in ``1..N``.  Matrices are stored
in reading order, so position (x, y) is ``cells[N - y][x - 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .errors import DomainError, ParameterError
from .group import AbelianGroup, Element, TorsionBasis, element_for_index, verify_basis
from .zmod import CoordPair, phi_inv

DEFAULT_SEARCH_LIMIT = 10


@dataclass(frozen=True)
class StepParams:
    N: int
    a: int
    b: int
    c: int
    d: int
    x1: int
    y1: int

    @classmethod
    def de_la_loubere(cls, N: int, start: tuple[int, int] | None = None) -> StepParams:
        """a = 1, b = c = -1, d = 2, starting in the centre unless told otherwise."""
        if start is None:
            start = ((N + 1) // 2, (N + 1) // 2)
        return cls(N, 1, -1, -1, 2, *start)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def as_dict(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in ("a", "b", "c", "d", "x1", "y1")}


@dataclass(frozen=True)
class GridPos:
    x: int
    y: int


def _gcd_problems(params: StepParams) -> list[str]:
    N = params.N
    problems = []
    for name in ("a", "b", "c", "d"):
        g = math.gcd(getattr(params, name), N)
        if g != 1:
            problems.append(f"gcd({name}, N) = {g}: {name} must be relatively prime to N = {N}")
    return problems


def validate_params(params: StepParams) -> list[str]:
    """Return the violated hypotheses; an empty list means the parameters are valid."""
    N = params.N
    if N < 1:
        return [f"N must be a positive integer, got {N}"]
    problems = []
    if N % 2 == 0:
        problems.append(f"N = {N} is even: the construction requires N odd")
    problems.extend(_gcd_problems(params))
    g = math.gcd(params.det, N)
    if g != 1:
        problems.append(
            f"gcd(ad - bc, N) = gcd({params.det}, {N}) = {g}: "
            "ad - bc must be relatively prime to N"
        )
    for name in ("x1", "y1"):
        v = getattr(params, name)
        if not 1 <= v <= N:
            problems.append(f"{name} = {v} must lie in 1..{N}")
    return problems


def _require_valid(params: StepParams) -> None:
    problems = validate_params(params)
    if problems:
        raise ParameterError("; ".join(problems))


def _position(params: StepParams, k: int) -> GridPos:
    N = params.N
    q = (k - 1) // N
    x = (params.x1 - 1 + params.a * (k - 1) + params.b * q) % N + 1
    y = (params.y1 - 1 + params.c * (k - 1) + params.d * q) % N + 1
    return GridPos(x, y)


def _positions(params: StepParams) -> list[GridPos]:
    return [_position(params, k) for k in range(1, params.N**2 + 1)]


def step_positions(params: StepParams) -> list[GridPos]:
    """The positions (x_k, y_k) for k = 1..N^2, in order of k."""
    _require_valid(params)
    return _positions(params)


@dataclass
class VerifyReport:
    is_permutation: bool
    row_sums: list[Element]
    col_sums: list[Element]
    is_magic: bool
    failing_rows: list[int] = field(default_factory=list)
    failing_cols: list[int] = field(default_factory=list)


@dataclass
class MagicSquare:
    N: int
    cells: list[list[Element]]
    group: AbelianGroup
    basis: TorsionBasis | None = None
    params: StepParams | None = None

    def at(self, x: int, y: int) -> Element:
        return self.cells[self.N - y][x - 1]

    def labels(self) -> list[list[str]]:
        return [[self.group.format_element(e) for e in row] for row in self.cells]

    def columns(self) -> list[list[Element]]:
        return [list(col) for col in zip(*self.cells)]


def _empty_cells(N: int) -> list[list]:
    return [[None] * N for _ in range(N)]


def _check_basis(basis: TorsionBasis, N: int) -> None:
    if basis.N != N:
        raise DomainError(f"basis has N = {basis.N}, parameters have N = {N}")
    check = verify_basis(basis)
    if not check:
        raise DomainError(f"invalid torsion basis: {check.reason}")


def build_square(params: StepParams, basis: TorsionBasis) -> MagicSquare:
    """Place R_k = psi(phi(k)) at (x_k, y_k) for every k."""
    positions = step_positions(params)
    _check_basis(basis, params.N)
    cells = _empty_cells(params.N)
    for k, pos in enumerate(positions, start=1):
        cells[params.N - pos.y][pos.x - 1] = element_for_index(basis, k)
    return MagicSquare(params.N, cells, basis.group, basis, params)


def to_classic_labels(sq: MagicSquare, basis: TorsionBasis) -> list[list[int]]:
    return [[phi_inv(basis.coordinates(e)) for e in row] for row in sq.cells]


def verify_square(sq: MagicSquare) -> VerifyReport:
    """Sum every row and column with the group law and check the entries are G[N]."""
    G = sq.group
    flat = [e for row in sq.cells for e in row]
    torsion = G.torsion(sq.N)
    is_permutation = len(flat) == len(torsion) and set(flat) == set(torsion)
    row_sums = [G.sum(row) for row in sq.cells]
    col_sums = [G.sum(col) for col in sq.columns()]
    failing_rows = [i + 1 for i, s in enumerate(row_sums) if not G.is_identity(s)]
    failing_cols = [j + 1 for j, s in enumerate(col_sums) if not G.is_identity(s)]
    return VerifyReport(
        is_permutation=is_permutation,
        row_sums=row_sums,
        col_sums=col_sums,
        is_magic=is_permutation and not failing_rows and not failing_cols,
        failing_rows=failing_rows,
        failing_cols=failing_cols,
    )


def line_sum_prediction(params: StepParams, basis: TorsionBasis) -> Element:
    """[s]P + [s]Q with s = N(N-1)/2 mod N, the common value of every line sum."""
    problems = _gcd_problems(params)
    if problems:
        raise ParameterError("; ".join(problems))
    N = params.N
    s = (N * (N - 1) // 2) % N
    return basis.combination(s, s)


def step_line_sums(params: StepParams, basis: TorsionBasis) -> tuple[list[Element], list[Element]]:
    """Column and row sums of R_k grouped by x_k and by y_k, indexed 1..N.

    Needs only the gcd conditions on a, b, c, d, so it also covers even N,
    where ad - bc is necessarily even and the positions collide.
    """
    problems = _gcd_problems(params)
    if problems:
        raise ParameterError("; ".join(problems))
    G, N = basis.group, params.N
    cols = [G.identity] * N
    rows = [G.identity] * N
    for k, pos in enumerate(_positions(params), start=1):
        R = element_for_index(basis, k)
        cols[pos.x - 1] = G.add(cols[pos.x - 1], R)
        rows[pos.y - 1] = G.add(rows[pos.y - 1], R)
    return cols, rows


@dataclass(frozen=True)
class LatinSquare:
    """Entries ``entries[m][n]`` in 0..N-1."""

    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> LatinSquare:
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def cyclic(cls, N: int, r: int = 1, s: int = 1) -> LatinSquare:
        """a_mn = r*m + s*n mod N (Latin when r and s are units mod N)."""
        return cls(tuple(tuple((r * m + s * n) % N for n in range(N)) for m in range(N)))

    @property
    def N(self) -> int:
        return len(self.entries)


def validate_latin(L: LatinSquare) -> list[str]:
    N = L.N
    if N == 0:
        return ["empty Latin square"]
    if any(len(row) != N for row in L.entries):
        return ["Latin square must be N x N"]
    symbols = set(range(N))
    problems = []
    for m, row in enumerate(L.entries):
        if set(row) != symbols:
            problems.append(f"row m={m} is not a permutation of 0..{N - 1}: {list(row)}")
    for n in range(N):
        col = [L.entries[m][n] for m in range(N)]
        if set(col) != symbols:
            problems.append(f"column n={n} is not a permutation of 0..{N - 1}: {col}")
    return problems


def latin_to_square(L: LatinSquare, basis: TorsionBasis) -> MagicSquare:
    """Place psi((m, a_mn)) at the Cartesian position (m + 1, n + 1)."""
    problems = validate_latin(L)
    if problems:
        raise DomainError("invalid Latin square: " + "; ".join(problems))
    N = L.N
    if N % 2 == 0:
        raise ParameterError(f"N = {N} is even: the construction requires N odd")
    _check_basis(basis, N)
    cells = _empty_cells(N)
    for m, n in product(range(N), repeat=2):
        cells[N - (n + 1)][m] = basis.combination(m, L.entries[m][n])
    return MagicSquare(N, cells, basis.group, basis, None)


def check_label_grid(labels: Sequence[Sequence[int]]) -> int:
    """Return N after checking ``labels`` is an N x N permutation of 1..N^2."""
    N = len(labels)
    if N == 0 or any(len(row) != N for row in labels):
        raise DomainError("label grid must be a non-empty N x N matrix")
    values = [v for row in labels for v in row]
    if sorted(values) != list(range(1, N * N + 1)):
        raise DomainError(f"label grid is not a permutation of 1..{N * N}")
    return N


def iter_step_params(N: int) -> Iterator[StepParams]:
    """Every (a, b, c, d, x1, y1) with a..d in 0..N-1 and starts in 1..N, lexicographically."""
    coeffs = range(N)
    starts = range(1, N + 1)
    for a, b, c, d, x1, y1 in product(coeffs, coeffs, coeffs, coeffs, starts, starts):
        yield StepParams(N, a, b, c, d, x1, y1)


def reverse_search(
    labels: Sequence[Sequence[int]], max_n: int = DEFAULT_SEARCH_LIMIT
) -> StepParams | None:
    """First parameter tuple whose step sequence puts every label k at (x_k, y_k)."""
    N = check_label_grid(labels)
    if N > max_n:
        raise ParameterError(f"N = {N} exceeds the reverse-search limit {max_n}")
    where = {}
    for r, row in enumerate(labels):
        for col, k in enumerate(row):
            where[k] = GridPos(col + 1, N - r)
    for params in iter_step_params(N):
        if all(_position(params, k) == where[k] for k in range(1, N * N + 1)):
            return params
    return None
