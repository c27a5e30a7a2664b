"""Finite abelian groups, scalar multiples and torsion bases.

A group object owns the arithmetic; its elements are plain hashable values
(tuples for the product group, :class:`~semimagic.curve.CurvePoint` for
curves).  Scalar multiples are derived from ``add``/``neg``/``identity``.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Hashable, Iterable

from .errors import DomainError
from .zmod import CoordPair, phi

Element = Hashable


class AbelianGroup(ABC):
    """Minimal contract: identity, add, neg, eq."""

    kind = "abstract"

    @property
    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def add(self, e1: Element, e2: Element) -> Element: ...

    @abstractmethod
    def neg(self, e: Element) -> Element: ...

    def eq(self, e1: Element, e2: Element) -> bool:
        return e1 == e2

    def sub(self, e1: Element, e2: Element) -> Element:
        return self.add(e1, self.neg(e2))

    def sum(self, elements: Iterable[Element]) -> Element:
        total = self.identity
        for e in elements:
            total = self.add(total, e)
        return total

    def scalar_mul(self, e: Element, m: int) -> Element:
        """Return [m]e by double-and-add."""
        if m < 0:
            e, m = self.neg(e), -m
        result = self.identity
        addend = e
        while m:
            if m & 1:
                result = self.add(result, addend)
            m >>= 1
            if m:
                addend = self.add(addend, addend)
        return result

    def is_identity(self, e: Element) -> bool:
        return self.eq(e, self.identity)

    @abstractmethod
    def torsion(self, N: int) -> list[Element]:
        """All elements killed by N, in a deterministic order."""

    def format_element(self, e: Element) -> str:
        return str(e)

    @abstractmethod
    def parse_element(self, s: str) -> Element: ...

    def describe(self) -> dict[str, Any]:
        """JSON-ready description used by the square document format."""
        return {"kind": self.kind}


class ProductGroup(AbelianGroup):
    """(Z/N) x (Z/N) under componentwise addition; elements are int pairs."""

    kind = "product"

    def __init__(self, N: int):
        if N < 1:
            raise DomainError(f"N must be >= 1, got {N}")
        self.N = N

    @property
    def identity(self):
        return (0, 0)

    def element(self, m: int, n: int):
        return (m % self.N, n % self.N)

    def add(self, e1, e2):
        N = self.N
        return ((e1[0] + e2[0]) % N, (e1[1] + e2[1]) % N)

    def neg(self, e):
        return ((-e[0]) % self.N, (-e[1]) % self.N)

    def contains(self, e) -> bool:
        return (
            isinstance(e, tuple)
            and len(e) == 2
            and all(isinstance(v, int) and 0 <= v < self.N for v in e)
        )

    def elements(self) -> list:
        return [(m, n) for n in range(self.N) for m in range(self.N)]

    def torsion(self, N: int) -> list:
        return [e for e in self.elements() if self.is_identity(self.scalar_mul(e, N))]

    def format_element(self, e) -> str:
        return f"({e[0]},{e[1]})"

    def parse_element(self, s: str):
        text = s.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise DomainError(f"expected '(m,n)', got {s!r}")
        try:
            m, n = (int(part) for part in text[1:-1].split(","))
        except ValueError:
            raise DomainError(f"expected '(m,n)', got {s!r}") from None
        e = (m, n)
        if not self.contains(e):
            raise DomainError(f"{s!r} is not an element of (Z/{self.N})^2")
        return e

    def __eq__(self, other):
        return type(other) is type(self) and other.N == self.N

    def __hash__(self):
        return hash((type(self).__name__, self.N))

    def __repr__(self):
        return f"{type(self).__name__}({self.N})"


# Coordinates relative to the basis P = -B, Q = D.  B = A + D and -B = C + D
# leave no freedom once that basis is fixed.
_SYMBOLIC_LABELS = {
    (0, 0): "O",
    (1, 0): "-B",
    (2, 0): "B",
    (0, 1): "D",
    (0, 2): "-D",
    (2, 2): "A",
    (1, 1): "-A",
    (1, 2): "C",
    (2, 1): "-C",
}


class SymbolicTorsion3(ProductGroup):
    """The nine 3-torsion points O, +-A, +-B, +-C, +-D with B = A + D, -B = C + D."""

    kind = "symbolic"

    def __init__(self):
        super().__init__(3)
        self._by_label = {label: e for e, label in _SYMBOLIC_LABELS.items()}

    def label(self, name: str):
        return self._by_label[name]

    def format_element(self, e) -> str:
        return _SYMBOLIC_LABELS[e]

    def parse_element(self, s: str):
        text = s.strip().replace("[-1]", "-")
        if text in ("0", "inf"):
            text = "O"
        try:
            return self._by_label[text]
        except KeyError:
            raise DomainError(f"unknown 3-torsion label {s!r}") from None

    def __repr__(self):
        return "SymbolicTorsion3()"


@dataclass(frozen=True)
class BasisCheck:
    ok: bool
    reason: str = ""
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class TorsionBasis:
    """Points P, Q realizing (m, n) -> [m]P + [n]Q as an isomorphism onto G[N]."""

    group: AbelianGroup
    N: int
    P: Element
    Q: Element

    def combination(self, m: int, n: int) -> Element:
        G = self.group
        return G.add(G.scalar_mul(self.P, m), G.scalar_mul(self.Q, n))

    @cached_property
    def _coords(self) -> dict:
        table = {}
        for n, m in product(range(self.N), repeat=2):
            table.setdefault(self.combination(m, n), (m, n))
        return table

    def coordinates(self, e: Element) -> CoordPair:
        """Inverse of psi; raises DomainError outside the span of P and Q."""
        try:
            m, n = self._coords[e]
        except (KeyError, TypeError):
            raise DomainError(
                f"{self.group.format_element(e)} is not in the span of the basis"
            ) from None
        return CoordPair.of(m, n, self.N)


def psi(basis: TorsionBasis, p: CoordPair) -> Element:
    if p.modulus != basis.N:
        raise DomainError(f"pair has modulus {p.modulus}, basis has N={basis.N}")
    return basis.combination(p.m.value, p.n.value)


def element_for_index(basis: TorsionBasis, k: int) -> Element:
    """R_k = psi(phi(k))."""
    return psi(basis, phi(k, basis.N))


def verify_basis(basis: TorsionBasis) -> BasisCheck:
    G, N = basis.group, basis.N
    if not G.is_identity(G.scalar_mul(basis.P, N)):
        return BasisCheck(False, f"[{N}]P is not the identity")
    if not G.is_identity(G.scalar_mul(basis.Q, N)):
        return BasisCheck(False, f"[{N}]Q is not the identity")
    seen = {}
    for n, m in product(range(N), repeat=2):
        e = basis.combination(m, n)
        if e in seen:
            return BasisCheck(
                False,
                f"psi{seen[e]} = psi{(m, n)}",
                witness=(seen[e], (m, n)),
            )
        seen[e] = (m, n)
    return BasisCheck(True)


def make_product_group(N: int) -> tuple[ProductGroup, TorsionBasis]:
    G = ProductGroup(N)
    return G, TorsionBasis(G, N, G.element(1, 0), G.element(0, 1))


def make_symbolic_3torsion() -> tuple[SymbolicTorsion3, TorsionBasis]:
    G = SymbolicTorsion3()
    return G, TorsionBasis(G, 3, G.label("-B"), G.label("D"))
