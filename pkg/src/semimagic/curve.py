"""Elliptic curves y^2 = x^3 + a4*x + a6 over small prime fields."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import CharacteristicError, DomainError, ResourceError, TorsionError
from .group import AbelianGroup, TorsionBasis, verify_basis

DEFAULT_ENUM_LIMIT = 50_021
LIMIT_ENV_VAR = "SEMIMAGIC_ENUM_LIMIT"


def enumeration_limit() -> int:
    value = os.environ.get(LIMIT_ENV_VAR)
    if value is None:
        return DEFAULT_ENUM_LIMIT
    try:
        return int(value)
    except ValueError:
        raise DomainError(f"{LIMIT_ENV_VAR} must be an integer, got {value!r}") from None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def _prime_factors(n: int) -> list[int]:
    factors, d = [], 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")


@lru_cache(maxsize=64)
def _square_roots(p: int) -> dict[int, tuple[int, ...]]:
    roots: dict[int, list[int]] = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    return {r: tuple(ys) for r, ys in roots.items()}


@dataclass(frozen=True, order=True)
class CurvePoint:
    """An affine point, or the point at infinity when ``x`` is None."""

    x: int | None = None
    y: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"{self.x},{self.y}"


INFINITY = CurvePoint()


def _sort_key(P: CurvePoint):
    return (-1, -1) if P.is_infinity else (P.x, P.y)


class Curve(AbelianGroup):
    """The group E(F_p) of a short Weierstrass curve, p > 3."""

    kind = "curve"

    def __init__(self, p: int, a4: int, a6: int):
        self.field = PrimeField(p)
        if p in (2, 3):
            raise DomainError("short Weierstrass form requires p > 3")
        self.p = p
        self.a4 = a4 % p
        self.a6 = a6 % p
        if (4 * self.a4**3 + 27 * self.a6**2) % p == 0:
            raise DomainError(f"singular curve: discriminant vanishes mod {p}")

    @classmethod
    def from_string(cls, text: str) -> Curve:
        """Parse the ``"p,a4,a6"`` description."""
        try:
            p, a4, a6 = (int(part) for part in text.split(","))
        except ValueError:
            raise DomainError(f"curve must be 'p,a4,a6', got {text!r}") from None
        return cls(p, a4, a6)

    def __str__(self):
        return f"{self.p},{self.a4},{self.a6}"

    def __repr__(self):
        return f"Curve({self.p}, {self.a4}, {self.a6})"

    def __eq__(self, other):
        return isinstance(other, Curve) and (self.p, self.a4, self.a6) == (
            other.p,
            other.a4,
            other.a6,
        )

    def __hash__(self):
        return hash(("curve", self.p, self.a4, self.a6))

    def rhs(self, x: int) -> int:
        return (x * x * x + self.a4 * x + self.a6) % self.p

    def contains(self, P) -> bool:
        if not isinstance(P, CurvePoint):
            return False
        if P.is_infinity:
            return True
        return (
            0 <= P.x < self.p
            and 0 <= P.y < self.p
            and (P.y * P.y - self.rhs(P.x)) % self.p == 0
        )

    def point(self, x: int, y: int) -> CurvePoint:
        P = CurvePoint(x % self.p, y % self.p)
        if not self.contains(P):
            raise DomainError(f"({x},{y}) is not on y^2 = x^3+{self.a4}x+{self.a6} mod {self.p}")
        return P

    @property
    def identity(self) -> CurvePoint:
        return INFINITY

    def add(self, P1: CurvePoint, P2: CurvePoint) -> CurvePoint:
        for P in (P1, P2):
            if not self.contains(P):
                raise DomainError(f"{P} is not on the curve {self}")
        if P1.is_infinity:
            return P2
        if P2.is_infinity:
            return P1
        p = self.p
        if P1.x == P2.x:
            if (P1.y + P2.y) % p == 0:
                return INFINITY
            lam = (3 * P1.x * P1.x + self.a4) * pow(2 * P1.y, -1, p) % p
        else:
            lam = (P2.y - P1.y) * pow(P2.x - P1.x, -1, p) % p
        x3 = (lam * lam - P1.x - P2.x) % p
        y3 = (lam * (P1.x - x3) - P1.y) % p
        return CurvePoint(x3, y3)

    def neg(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        return CurvePoint(P.x, (-P.y) % self.p)

    def torsion(self, N: int) -> list[CurvePoint]:
        return torsion_subgroup(self, N)

    def format_element(self, P: CurvePoint) -> str:
        return str(P)

    def parse_element(self, s: str) -> CurvePoint:
        text = s.strip()
        if text in ("O", "inf"):
            return INFINITY
        try:
            x, y = (int(part) for part in text.split(","))
        except ValueError:
            raise DomainError(f"expected 'x,y', 'O' or 'inf', got {s!r}") from None
        if not (0 <= x < self.p and 0 <= y < self.p):
            raise DomainError(f"coordinates of {s!r} must lie in [0, {self.p})")
        return self.point(x, y)

    def describe(self):
        return {"kind": self.kind, "p": self.p, "a4": self.a4, "a6": self.a6}


def enumerate_points(E: Curve, limit: int | None = None) -> list[CurvePoint]:
    """All points of E(F_p), infinity first, then sorted by (x, y)."""
    limit = enumeration_limit() if limit is None else limit
    if E.p > limit:
        raise ResourceError(f"p = {E.p} exceeds the enumeration limit {limit}")
    roots = _square_roots(E.p)
    points = [INFINITY]
    for x in range(E.p):
        for y in roots.get(E.rhs(x), ()):
            points.append(CurvePoint(x, y))
    return points


def _check_characteristic(E: Curve, N: int) -> None:
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if N % E.p == 0:
        raise CharacteristicError(
            f"the characteristic p = {E.p} divides N = {N}; "
            "the construction requires a characteristic not dividing N"
        )


def torsion_subgroup(E: Curve, N: int, limit: int | None = None) -> list[CurvePoint]:
    """E(F_p)[N] = {P : [N]P = O}, in enumeration order."""
    _check_characteristic(E, N)
    return [P for P in enumerate_points(E, limit) if E.scalar_mul(P, N).is_infinity]


def point_order(E: Curve, P: CurvePoint, multiple: int) -> int:
    """Exact order of P, given some ``multiple`` with [multiple]P = O."""
    order = multiple
    for q in _prime_factors(multiple):
        while order % q == 0 and E.scalar_mul(P, order // q).is_infinity:
            order //= q
    return order


def find_torsion_basis(E: Curve, N: int, limit: int | None = None) -> TorsionBasis:
    """Pick the first order-N point as P, then the first Q independent of it."""
    sub = sorted(torsion_subgroup(E, N, limit), key=_sort_key)
    if len(sub) < N * N:
        raise TorsionError(
            f"torsion not fully rational: |E(F_{E.p})[{N}]| = {len(sub)} < {N * N}; "
            f"try a different p (full {N}-torsion over F_p requires N | p-1"
            f"{', which fails here' if (E.p - 1) % N else ''})"
        )
    if N == 1:
        return TorsionBasis(E, 1, INFINITY, INFINITY)
    P = next(R for R in sub if point_order(E, R, N) == N)
    for Q in sub:
        basis = TorsionBasis(E, N, P, Q)
        if verify_basis(basis):
            return basis
    raise TorsionError(f"no second basis point found for N = {N}")  # pragma: no cover


def find_full_torsion_curve(
    N: int, max_p: int = 1000, limit: int | None = None
) -> tuple[Curve, TorsionBasis]:
    """Smallest (p, a4, a6) in lexicographic order whose N-torsion is all F_p-rational."""
    N2 = N * N
    for p in range(5, max_p + 1):
        if not is_prime(p) or N % p == 0 or (p - 1) % N:
            continue
        # Hasse bound: |E(F_p)| <= p + 1 + 2 sqrt(p)
        if p + 1 + 2 * math.isqrt(p) + 2 < N2:
            continue
        for a4, a6 in product(range(p), repeat=2):
            if (4 * a4**3 + 27 * a6**2) % p == 0:
                continue
            E = Curve(p, a4, a6)
            if len(enumerate_points(E, limit)) % N2:
                continue
            if len(torsion_subgroup(E, N, limit)) == N2:
                return E, find_torsion_basis(E, N, limit)
    raise TorsionError(f"no curve with full {N}-torsion found for p <= {max_p}")
