"""Residues modulo N and the index bijection between 1..N^2 and (Z/N)^2."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotInvertibleError


class Residue:
    """An integer modulo ``modulus``, stored in canonical form ``0 <= value < modulus``."""

    __slots__ = ("_value", "_modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {modulus}")
        self._modulus = int(modulus)
        self._value = int(value) % self._modulus

    @property
    def value(self) -> int:
        return self._value

    @property
    def modulus(self) -> int:
        return self._modulus

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other._modulus != self._modulus:
                raise DomainError(
                    f"mixed moduli: {self._modulus} and {other._modulus}"
                )
            return other._value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self._value + v, self._modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self._value - v, self._modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(v - self._value, self._modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self._value * v, self._modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self._value, self._modulus)

    def inverse(self) -> Residue:
        return inverse_mod(self._value, self._modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self._modulus == other._modulus and self._value == other._value
        if isinstance(other, int):
            return self._value == other % self._modulus
        return NotImplemented

    def __hash__(self):
        return hash((self._value, self._modulus))

    def __int__(self):
        return self._value

    __index__ = __int__

    def __repr__(self):
        return f"Residue({self._value}, {self._modulus})"

    def __str__(self):
        return str(self._value)


@dataclass(frozen=True)
class CoordPair:
    """A point (m, n) of (Z/N) x (Z/N)."""

    m: Residue
    n: Residue

    def __post_init__(self):
        if self.m.modulus != self.n.modulus:
            raise DomainError("CoordPair components must share one modulus")

    @classmethod
    def of(cls, m: int, n: int, N: int) -> CoordPair:
        return cls(Residue(m, N), Residue(n, N))

    @property
    def modulus(self) -> int:
        return self.m.modulus

    def as_tuple(self) -> tuple[int, int]:
        return (self.m.value, self.n.value)

    def __add__(self, other: CoordPair) -> CoordPair:
        return CoordPair(self.m + other.m, self.n + other.n)

    def __neg__(self) -> CoordPair:
        return CoordPair(-self.m, -self.n)


def phi(k: int, N: int) -> CoordPair:
    """Map k in 1..N^2 to (k-1 mod N, floor((k-1)/N) mod N)."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if not 1 <= k <= N * N:
        raise DomainError(f"index k={k} outside 1..{N * N}")
    q, r = divmod(k - 1, N)
    return CoordPair.of(r, q, N)


def phi_inv(p: CoordPair) -> int:
    return 1 + p.m.value + p.modulus * p.n.value


def inverse_mod(x: int, N: int) -> Residue:
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    try:
        return Residue(pow(x, -1, N), N)
    except ValueError:
        raise NotInvertibleError(f"{x} is not invertible modulo {N}") from None
