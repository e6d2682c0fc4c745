"""Dense exact polynomials and truncated power series over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import InvalidOrder
from .exactnum import as_rational, binomial, pochhammer

__all__ = [
    "UniPoly",
    "BiPoly",
    "TruncSeries",
    "poly_eval",
    "integrate_unit",
    "gamma_moment",
    "egf_reference",
]


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [as_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class UniPoly:
    """Polynomial in one variable with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def linear(cls, a, b) -> "UniPoly":
        """a*y + b."""
        return cls([b, a])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, y) -> Fraction:
        y = as_rational(y)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self.coeffs, "y")

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_rational(other)
            return UniPoly(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, z in enumerate(b):
                    out[i + j] += x * z
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rational(c)
        return UniPoly(a / c for a in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = UniPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def compose_linear(self, a, b) -> "UniPoly":
        """p(a*y + b)."""
        lin = UniPoly.linear(a, b)
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def antiderivative(self) -> "UniPoly":
        return UniPoly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def format_poly(coeffs: Sequence[Fraction], var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class BiPoly:
    """Polynomial in x and y; ``coeffs[i][j]`` multiplies x^i y^j."""

    __slots__ = ("coeffs",)

    def __init__(self, grid: Iterable[Iterable] = ()):
        rows = [list(_trim(row)) for row in grid]
        while rows and not rows[-1]:
            rows.pop()
        width = max((len(r) for r in rows), default=0)
        self.coeffs = tuple(
            tuple(row + [Fraction(0)] * (width - len(row))) for row in rows
        )

    @classmethod
    def from_y_polys(cls, polys: Sequence[UniPoly]) -> "BiPoly":
        """Build sum_i polys[i](y) * x^i."""
        return cls([p.coeffs for p in polys])

    def __call__(self, x, y) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for row in reversed(self.coeffs):
            acc = acc * x + UniPoly(row)(y)
        return acc

    def at_x(self, x) -> UniPoly:
        """Specialise x, leaving a polynomial in y."""
        x = as_rational(x)
        acc = UniPoly()
        for row in reversed(self.coeffs):
            acc = acc * x + UniPoly(row)
        return acc

    def at_y(self, y) -> UniPoly:
        """Specialise y, leaving a polynomial in x."""
        return UniPoly(UniPoly(row)(y) for row in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BiPoly({[[str(c) for c in row] for row in self.coeffs]})"


Poly = Union[UniPoly, BiPoly]


def poly_eval(p: Poly, point) -> Fraction:
    """Exact Horner evaluation; ``point`` is a scalar for UniPoly, a pair for BiPoly."""
    if isinstance(p, BiPoly):
        x, y = point
        return p(x, y)
    return p(point)


def integrate_unit(p: UniPoly) -> Fraction:
    """Integral of p over [0, 1]."""
    return sum((c / (k + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


def gamma_moment(p: UniPoly, r: int) -> UniPoly:
    """Map sum c_k u^k to sum c_k (r)_k y^k.

    This is (1/Gamma(r)) * int_0^inf lam^(r-1) p(y*lam) e^(-lam) dlam, computed
    termwise from int_0^inf lam^(r+k-1) e^(-lam) dlam = (r)_k Gamma(r).
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidOrder(f"order must be a positive integer, got {r!r}")
    return UniPoly(c * pochhammer(r, k) for k, c in enumerate(p.coeffs))


class TruncSeries:
    """Power series in t known through t^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [as_rational(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def exp(cls, order: int, a=1) -> "TruncSeries":
        """e^(a t)."""
        a = as_rational(a)
        return cls([a**n / factorial(n) for n in range(order + 1)], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _check(self, other: "TruncSeries") -> None:
        if other.order != self.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries([other], self.order)
        self._check(other)
        return TruncSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries([other], self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = as_rational(other)
            return TruncSeries((c * a for a in self.coeffs), self.order)
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            if a[i]:
                for j in range(N + 1 - i):
                    out[i + j] += a[i] * b[j]
        return TruncSeries(out, N)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("constant term is zero")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncSeries(out, self.order)

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        out = TruncSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def egf_values(self) -> list[Fraction]:
        """n! * coefficient n, for n = 0..order."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


def egf_reference(r: int, x, y, N: int) -> TruncSeries:
    """(1 - y(e^t - 1))^(-r) e^(x t) through t^N, by series arithmetic alone."""
    if not isinstance(r, int) or r < 0:
        raise ValueError("r must be a nonnegative integer")
    y = as_rational(y)
    s = TruncSeries.exp(N) - 1
    u = 1 - s * y
    base = u.reciprocal() ** r
    return base * TruncSeries.exp(N, x)
