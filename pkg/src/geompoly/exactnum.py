"""Exact scalars, residues mod a prime, and the combinatorial number tables.

``Rational`` is :class:`fractions.Fraction`. Stirling tables are grown row by
row from their recurrences and memoised per (kind, r, modulus).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Optional, Union

from .errors import DenominatorDivisibleByQ, NotPrime

__all__ = [
    "Rational",
    "as_rational",
    "binomial",
    "pochhammer",
    "ipow",
    "CombTable",
    "table",
    "stirling1",
    "stirling2",
    "stirling1r",
    "stirling2r",
    "is_prime",
    "primes_between",
    "ResidueModQ",
    "rational_residue",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_TRIAL_DIVISION_LIMIT = 10**6
# Deterministic for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"7/3"`` or ``"1e-30"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero for k outside [0, n]."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def pochhammer(x: RationalLike, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = as_rational(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def ipow(base, exp: int):
    """``base ** exp`` with 0**0 == 1 for every numeric type used here."""
    if exp == 0:
        return 1
    return base**exp


class CombTable:
    """Grow-only triangle of Stirling numbers for a fixed r-offset.

    Rows are indexed by the absolute n >= r and hold entries for k in [r, n].
    With ``modulus`` set, entries are stored reduced mod that modulus.
    Completed rows are never mutated; only appends happen, under a lock.
    """

    KINDS = ("stirling1r", "stirling2r")

    def __init__(self, kind: str, r: int = 0, modulus: Optional[int] = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown table kind {kind!r}")
        if r < 0:
            raise ValueError("r must be >= 0")
        self.kind = kind
        self.r = r
        self.modulus = modulus
        self.rows: list[tuple[int, ...]] = [(1,)]  # row n = r: {r, r}_r = 1
        self._lock = threading.Lock()

    def _extend_to(self, n: int) -> None:
        with self._lock:
            r, m = self.r, self.modulus
            first = self.kind == "stirling1r"
            while r + len(self.rows) - 1 < n:
                prev = self.rows[-1]
                cur_n = r + len(self.rows)
                width = cur_n - r + 1
                row = []
                for i in range(width):
                    k = r + i
                    a = prev[i] if i < len(prev) else 0
                    b = prev[i - 1] if i >= 1 else 0
                    v = ((cur_n - 1) if first else k) * a + b
                    row.append(v % m if m else v)
                self.rows.append(tuple(row))

    def __call__(self, n: int, k: int) -> int:
        r = self.r
        if n < r or k < r or k > n:
            return 0
        if r + len(self.rows) - 1 < n:
            self._extend_to(n)
        return self.rows[n - r][k - r]

    def row(self, n: int) -> tuple[int, ...]:
        """Entries for k = r..n."""
        if n < self.r:
            return ()
        self(n, n)
        return self.rows[n - self.r]


_tables: dict[tuple, CombTable] = {}
_tables_lock = threading.Lock()


def table(kind: str, r: int = 0, modulus: Optional[int] = None) -> CombTable:
    key = (kind, r, modulus)
    t = _tables.get(key)
    if t is None:
        with _tables_lock:
            t = _tables.setdefault(key, CombTable(kind, r, modulus))
    return t


def stirling2r(n: int, k: int, r: int = 0) -> int:
    """r-Stirling number of the second kind {n, k}_r in absolute indexing.

    Zero unless r <= k <= n. For r = 0 this is the classical {n, k}.
    """
    return table("stirling2r", r)(n, k)


def stirling1r(n: int, k: int, r: int = 0) -> int:
    """Unsigned r-Stirling number of the first kind [n, k]_r (absolute indexing)."""
    return table("stirling1r", r)(n, k)


def stirling2(n: int, k: int) -> int:
    return stirling2r(n, k, 0)


def stirling1(n: int, k: int) -> int:
    return stirling1r(n, k, 0)


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Trial division up to 10**6, deterministic Miller-Rabin beyond."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    if n > _TRIAL_DIVISION_LIMIT**2:
        return _miller_rabin(n)
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes q with lo <= q <= hi."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


@dataclass(frozen=True)
class ResidueModQ:
    """An element of Z/qZ for a prime q."""

    value: int
    modulus: int

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise NotPrime(f"{self.modulus} is not prime")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ResidueModQ):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueModQ((self.value + v) % self.modulus, self.modulus)

    __radd__ = __add__

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueModQ(self.value * v % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueModQ(-self.value % self.modulus, self.modulus)

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def rational_residue(x: RationalLike, q: int) -> ResidueModQ:
    """Image of x in Z/qZ, i.e. numerator * denominator^-1 mod q."""
    x = as_rational(x)
    if x.denominator % q == 0:
        raise DenominatorDivisibleByQ(x, q)
    return ResidueModQ(x.numerator * pow(x.denominator, -1, q) % q, q)
