"""Exact arithmetic for rationals and real quadratic surds.

Rationals are plain ``fractions.Fraction``.  A :class:`QuadSurd` is the
canonical form (a + b*sqrt(N))/c with

    c > 0,  b != 0,  gcd(a, b, c) = 1,  N >= 2 squarefree,

so two surds are equal as real numbers iff their field tuples are equal.
All comparisons, floors and ceilings are computed with integer arithmetic
only; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .errors import (
    CfdedError,
    DivisionByZero,
    MixedRadicand,
    PerfectSquare,
    ZeroDenominator,
)

Real = Union[int, Fraction, "QuadSurd"]

_TRIAL_LIMIT = 10**6


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n = g^2 * k with k squarefree; return (g, k).

    Trial division runs while d^3 <= n, capped at 10^6, followed by a
    perfect-square check on the remainder (which then has at most two
    prime factors).  Inputs whose square part cannot be certified within
    the cap are rejected.
    """
    if n <= 0:
        raise ValueError("radicand must be positive")
    g, k, m = 1, 1, n
    d = 2
    while d * d * d <= m:
        if d > _TRIAL_LIMIT:
            break
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            g *= d ** (e // 2)
            if e & 1:
                k *= d
        d += 1 if d == 2 else 2
    r = isqrt(m)
    if r * r == m:
        g *= r
    else:
        if d > _TRIAL_LIMIT and d * d * d <= m:
            raise CfdedError(
                f"cannot certify squarefree part of {n}: "
                f"square factors above {_TRIAL_LIMIT} are not supported"
            )
        k *= m
    return g, k


def _floor_b_sqrt(b: int, N: int) -> int:
    # floor(b*sqrt(N)); b*sqrt(N) is irrational for b != 0 (N squarefree >= 2)
    if b == 0:
        return 0
    if b > 0:
        return isqrt(b * b * N)
    return -isqrt(b * b * N) - 1


@dataclass(frozen=True)
class QuadSurd:
    """(a + b*sqrt(N))/c in canonical form; construct via surd_normalize."""

    a: int
    b: int
    c: int
    N: int

    def __post_init__(self):
        if self.c <= 0:
            raise ZeroDenominator(f"denominator must be positive, got {self.c}")
        if self.b == 0:
            raise PerfectSquare("surd has no irrational part; use Fraction")
        if self.N < 2:
            raise PerfectSquare(f"radicand {self.N} is not a valid surd radicand")
        if gcd(gcd(abs(self.a), abs(self.b)), self.c) != 1:
            raise ValueError("surd fields are not reduced; use surd_normalize")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: Real):
        return _arith_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Real):
        return _arith_add(self, _negate(other))

    def __rsub__(self, other: Real):
        return _arith_add(_negate(self), other)

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.a, -self.b, self.c, self.N)

    def __mul__(self, other: Real):
        return _arith_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Real):
        return _arith_mul(self, _invert(other))

    def __rtruediv__(self, other: Real):
        return _arith_mul(_invert(self), other)

    def inverse(self):
        return _invert(self)

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.c, self.N)

    # -- order -----------------------------------------------------------

    def __lt__(self, other: Real) -> bool:
        return surd_cmp(self, other) < 0

    def __le__(self, other: Real) -> bool:
        return surd_cmp(self, other) <= 0

    def __gt__(self, other: Real) -> bool:
        return surd_cmp(self, other) > 0

    def __ge__(self, other: Real) -> bool:
        return surd_cmp(self, other) >= 0

    # equality is the dataclass field equality; equal reals have equal tuples

    def floor(self) -> int:
        return (self.a + _floor_b_sqrt(self.b, self.N)) // self.c

    def ceil(self) -> int:
        # the value is irrational, so ceil = floor + 1 always
        return self.floor() + 1

    def __float__(self) -> float:
        return (self.a + self.b * self.N**0.5) / self.c

    def __str__(self) -> str:
        return f"({self.a}{self.b:+}*sqrt({self.N}))/{self.c}"

    def __repr__(self) -> str:
        return f"QuadSurd({self.a}, {self.b}, {self.c}, {self.N})"


def surd_normalize(a: int, b: int, c: int, N: int) -> QuadSurd:
    """Canonicalize (a + b*sqrt(N))/c; see module docstring for the form."""
    if c == 0:
        raise ZeroDenominator("denominator c = 0")
    if b == 0:
        raise PerfectSquare("b = 0 gives a rational value, not a surd")
    if N < 2:
        raise PerfectSquare(f"sqrt({N}) is rational")
    g, k = squarefree_split(N)
    if k == 1:
        raise PerfectSquare(f"{N} is a perfect square; the value is rational")
    a, b, N = a, b * g, k
    if c < 0:
        a, b, c = -a, -b, -c
    d = gcd(gcd(abs(a), abs(b)), c)
    return QuadSurd(a // d, b // d, c // d, N)


def _coeffs(x: Real) -> tuple[Fraction, Fraction, int | None]:
    """Decompose x as p + q*sqrt(N); N is None for rationals."""
    if isinstance(x, QuadSurd):
        return Fraction(x.a, x.c), Fraction(x.b, x.c), x.N
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0), None
    raise TypeError(f"unsupported operand type {type(x).__name__}")


def _common_radicand(nx: int | None, ny: int | None) -> int | None:
    if nx is None:
        return ny
    if ny is None or nx == ny:
        return nx
    raise MixedRadicand(f"cannot mix sqrt({nx}) and sqrt({ny})")


def _build(p: Fraction, q: Fraction, N: int | None):
    """Assemble p + q*sqrt(N) back into a canonical value."""
    if q == 0 or N is None:
        return p
    c = p.denominator * q.denominator // gcd(p.denominator, q.denominator)
    a = p.numerator * (c // p.denominator)
    b = q.numerator * (c // q.denominator)
    d = gcd(gcd(abs(a), abs(b)), c)
    return QuadSurd(a // d, b // d, c // d, N)


def _negate(x: Real):
    if isinstance(x, QuadSurd):
        return -x
    return -Fraction(x)


def _invert(x: Real):
    p, q, N = _coeffs(x)
    if p == 0 and q == 0:
        raise DivisionByZero("division by zero")
    if q == 0:
        return 1 / p
    norm = p * p - q * q * N
    # norm == 0 would make sqrt(N) rational; impossible for squarefree N
    return _build(p / norm, -q / norm, N)


def _arith_add(x: Real, y: Real):
    px, qx, nx = _coeffs(x)
    py, qy, ny = _coeffs(y)
    return _build(px + py, qx + qy, _common_radicand(nx, ny))


def _arith_mul(x: Real, y: Real):
    px, qx, nx = _coeffs(x)
    py, qy, ny = _coeffs(y)
    N = _common_radicand(nx, ny)
    if N is None:
        return px * py
    return _build(px * py + qx * qy * N, px * qy + qx * py, N)


def surd_arith(x: Real, y: Real | None, op: str):
    """Named-op entry point: add, sub, mul, div, neg, inv."""
    if op == "add":
        return _arith_add(x, y)
    if op == "sub":
        return _arith_add(x, _negate(y))
    if op == "mul":
        return _arith_mul(x, y)
    if op == "div":
        return _arith_mul(x, _invert(y))
    if op == "neg":
        return _negate(x)
    if op == "inv":
        return _invert(x)
    raise ValueError(f"unknown operation {op!r}")


def _sign_a_plus_b_sqrt(a: int, b: int, N: int) -> int:
    """Exact sign of a + b*sqrt(N)."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 against b^2*N (equality impossible)
    if a > 0:  # b < 0
        return 1 if a * a > b * b * N else -1
    return -1 if a * a > b * b * N else 1


def surd_cmp(x: Real, y: Real) -> int:
    """Exact three-way comparison: -1, 0 or +1."""
    diff = _arith_add(x, _negate(y))
    if isinstance(diff, Fraction):
        return (diff > 0) - (diff < 0)
    return _sign_a_plus_b_sqrt(diff.a, diff.b, diff.N)


def surd_floor(x: Real) -> int:
    if isinstance(x, QuadSurd):
        return x.floor()
    f = Fraction(x)
    return f.numerator // f.denominator


def surd_ceil(x: Real) -> int:
    if isinstance(x, QuadSurd):
        return x.ceil()
    f = Fraction(x)
    return -((-f.numerator) // f.denominator)


def to_decimal(x: Real, digits: int) -> str:
    """Decimal string with `digits` fractional digits, rounded toward zero."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    neg = surd_cmp(x, 0) < 0
    mag = _negate(x) if neg else x
    scaled = _arith_mul(mag, 10**digits)
    n = surd_floor(scaled)
    ip, fp = divmod(n, 10**digits)
    return f"{'-' if neg else ''}{ip}.{fp:0{digits}d}"
