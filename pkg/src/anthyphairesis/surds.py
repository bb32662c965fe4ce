"""Exact arithmetic in real quadratic fields Q(sqrt(D)).

Values are held as (a + b*sqrt(d))/c with integer a, b, d and positive
integer c, canonicalized so that structural equality is value equality:
d is squarefree, gcd(a, b, c) = 1, c > 0, and rational values always
carry b = 0, d = 0.  Everything is big-integer arithmetic; no floats
are used anywhere, including comparisons and floors.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class FieldMismatchError(ValueError):
    """Mixing two distinct irrational quadratic fields in one operation."""


def isqrt(n: int) -> int:
    """Exact floor square root of a nonnegative integer of any size."""
    return math.isqrt(n)


def _split_square(d: int) -> tuple[int, int]:
    """Write d = f*f * r with r squarefree; returns (f, r).

    Trial division up to isqrt(d); fine at the radicand sizes this
    package is meant for (roughly d <= 10**6, well beyond the fixtures).
    """
    f = 1
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return f, d


@total_ordering
@dataclass(frozen=True)
class QuadraticSurd:
    """Canonical exact value (a + b*sqrt(d))/c, rational when b = 0."""

    a: int
    b: int
    c: int = 1
    d: int = 0

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if c == 0:
            raise ValueError("invalid denominator: c must be nonzero")
        if d < 0:
            raise ValueError("unsupported field: negative radicand")
        if d == 0:
            b = 0
        if b != 0:
            f, d = _split_square(d)
            b *= f
            if d == 1:
                a, b, d = a + b, 0, 0
        else:
            d = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(a, b, c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    # -- constructors -------------------------------------------------

    @classmethod
    def sqrt(cls, n: int) -> "QuadraticSurd":
        return cls(0, 1, 1, n)

    @classmethod
    def from_rational(cls, p: int, q: int = 1) -> "QuadraticSurd":
        return cls(p, 0, q, 0)

    # -- predicates ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    # -- sign and ordering ---------------------------------------------

    def sign(self) -> int:
        """Exact sign of the value, by integer case analysis only."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: compare a*a against b*b*d.  Equality cannot
        # occur for canonical values (d squarefree, b != 0).
        lhs, rhs = a * a, b * b * d
        if a > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def _same_field(self, other: "QuadraticSurd") -> int:
        if self.d and other.d and self.d != other.d:
            raise FieldMismatchError(
                f"cannot combine sqrt({self.d}) with sqrt({other.d})"
            )
        return self.d or other.d

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __lt__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._same_field(other)
        return QuadraticSurd(
            self.a * other.c + other.a * self.c,
            self.b * other.c + other.b * self.c,
            self.c * other.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._same_field(other)
        return QuadraticSurd(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            self.c * other.c,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero surd")
        d = self._same_field(other)
        # 1/y = c*(a - b*sqrt(d)) / (a*a - b*b*d); the norm is nonzero
        # because y is nonzero and d is squarefree.
        norm = other.a * other.a - other.b * other.b * d
        inverse = QuadraticSurd(other.c * other.a, -other.c * other.b, norm, d)
        return self * inverse

    def __rtruediv__(self, other: object):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __abs__(self) -> "QuadraticSurd":
        return -self if self.sign() < 0 else self

    # -- floor ----------------------------------------------------------

    def __floor__(self) -> int:
        """Exact integer m with m <= value < m + 1."""
        if self.b == 0:
            return self.a // self.c
        s = isqrt(self.b * self.b * self.d)
        # floor(b*sqrt(d)): b*b*d is never a perfect square here, so the
        # surd term is irrational and floor((a + t)/c) = (a + floor(t)) // c.
        t = s if self.b > 0 else -s - 1
        return (self.a + t) // self.c

    def floor(self) -> int:
        return self.__floor__()

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        return f"({self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d}))/{self.c}"


def _coerce(value: object) -> QuadraticSurd | None:
    if isinstance(value, QuadraticSurd):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return QuadraticSurd(value, 0, 1, 0)
    if isinstance(value, Fraction):
        return QuadraticSurd(value.numerator, 0, value.denominator, 0)
    return None


@dataclass(frozen=True)
class SurdState:
    """Complete quotient (p + sqrt(d))/q of an expansion in progress.

    q always divides d - p*p (arranged once at entry), which keeps the
    whole remainder-ratio orbit in integers.  q may be negative during
    the first few steps; d is a positive nonsquare.
    """

    p: int
    q: int
    d: int

    def floor(self) -> int:
        s = isqrt(self.d)
        if self.q > 0:
            return (self.p + s) // self.q
        return (-self.p - s - 1) // -self.q

    def step(self) -> tuple[int, "SurdState"]:
        """One expansion step: quotient k and the next remainder ratio."""
        k = self.floor()
        p = k * self.q - self.p
        q = (self.d - p * p) // self.q
        return k, SurdState(p, q, self.d)

    def as_surd(self) -> QuadraticSurd:
        return QuadraticSurd(self.p, 1, self.q, self.d)

    @classmethod
    def from_surd(cls, x: QuadraticSurd) -> "SurdState":
        """Entry normalization: fold b into the radicand, fix divisibility.

        (a + b*sqrt(D))/c becomes (p + sqrt(d))/q with d = b*b*D; when q
        does not divide d - p*p, multiply p and q by |q| (and d by q*q),
        which preserves the value and establishes the invariant.
        """
        if x.is_rational:
            raise ValueError(f"{x} is rational; no surd state")
        p, q, d = x.a, x.c, x.b * x.b * x.d
        if x.b < 0:
            p, q = -p, -q
        if (d - p * p) % q != 0:
            p, d, q = p * abs(q), d * q * q, q * abs(q)
        return cls(p, q, d)


_SQRT_RE = re.compile(r"^sqrt\((\d+)\)$")
_FULL_RE = re.compile(r"^\((-?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)(?:/(-?\d+))?$")
_FRAC_RE = re.compile(r"^(-?\d+)/(-?\d+)$")
_INT_RE = re.compile(r"^(-?\d+)$")


def parse_surd(text: str) -> QuadraticSurd:
    """Parse a surd literal: ``(a+b*sqrt(D))/c``, ``sqrt(N)``, ``p/q`` or ``n``.

    Whitespace-insensitive; ``sqrt(N)`` is sugar for ``(0+1*sqrt(N))/1``.
    """
    compact = "".join(text.split())
    m = _SQRT_RE.match(compact)
    if m:
        return QuadraticSurd.sqrt(int(m.group(1)))
    m = _FULL_RE.match(compact)
    if m:
        a, sgn, b, d, c = m.groups()
        bval = int(b) if sgn == "+" else -int(b)
        return QuadraticSurd(int(a), bval, int(c) if c else 1, int(d))
    m = _FRAC_RE.match(compact)
    if m:
        return QuadraticSurd(int(m.group(1)), 0, int(m.group(2)), 0)
    m = _INT_RE.match(compact)
    if m:
        return QuadraticSurd(int(m.group(1)), 0, 1, 0)
    raise ValueError(f"malformed surd literal: {text!r}")
