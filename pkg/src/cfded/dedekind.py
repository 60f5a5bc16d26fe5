"""Dedekind sums by four routes, all exact.

Throughout we work with the scaled sum S(a,b) = 12*s(a,b).  The
definitional sum is the ground-truth oracle; the reciprocity recursion is
the fast route; the two closed forms evaluate S along the convergents of
the two continued fraction expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .errors import IndexBeforePeriod, IndexOutOfRange, NotCoprime
from .contfrac import (
    NegativeExpansion,
    QuadSurd,
    RegularExpansion,
    convergents,
    expand_negative,
    expand_regular,
)


@dataclass(frozen=True)
class DedekindValue:
    value: Fraction
    route: str  # naive | fast | regular_formula | negative_formula


def sawtooth(x: Union[int, Fraction]) -> Fraction:
    """((x)) = x - floor(x) - 1/2 away from integers, 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_naive(a: int, b: int) -> DedekindValue:
    """Definitional sum, O(b); any integer a is accepted."""
    if b < 1:
        raise ValueError(f"modulus must be positive, got {b}")
    # S = 12 * sum ((k/b))((ak/b)) = 3/b^2 * sum (2k-b)(2m-b) over m = ak mod b != 0
    a %= b
    total = 0
    m = 0
    for k in range(1, b):
        m += a
        if m >= b:
            m -= b
        if m:
            total += (2 * k - b) * (2 * m - b)
    return DedekindValue(Fraction(3 * total, b * b), "naive")


def dedekind_fast(a: int, b: int) -> DedekindValue:
    """Euclidean recursion through the reciprocity law, O(log b)."""
    if b < 1:
        raise ValueError(f"modulus must be positive, got {b}")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    a %= b
    acc = Fraction(0)
    sign = 1
    while a:
        # S(a,b) = (a^2 + b^2 + 1)/(ab) - 3 - S(b mod a, a)
        acc += sign * (Fraction(a * a + b * b + 1, a * b) - 3)
        sign = -sign
        a, b = b % a, a
    return DedekindValue(acc, "fast")


def _alternating(digits: Sequence[int], start_sign: int) -> int:
    total = 0
    sign = start_sign
    for d in digits:
        total += sign * d
        sign = -sign
    return total


@dataclass(frozen=True)
class RegularFormulaParts:
    """Decomposition S(p_k, q_k) = A + n*B + partial + correction."""

    A: int
    B: int
    n: int
    h: int
    partial: int
    correction: Fraction

    @property
    def value(self) -> Fraction:
        return self.A + self.n * self.B + self.partial + self.correction


def regular_formula_parts(source: Union[QuadSurd, RegularExpansion], k: int) -> RegularFormulaParts:
    exp = expand_regular(source) if isinstance(source, QuadSurd) else source
    q = exp.q
    if k <= q:
        raise IndexBeforePeriod(f"index {k} lies in the preperiod (q = {q})")
    L = exp.L
    digits = exp.doubled_period
    h = (k - q - 1) % L + 1
    n = (k - q - h) // L
    # A = sum_{i=0..q} (-1)^(i-1) a_i; empty when purely periodic
    A = _alternating(exp.preperiod, -1)
    sign_q = -1 if q % 2 else 1
    B = sign_q * _alternating(digits, 1)
    partial = sign_q * _alternating(digits[:h], 1)
    table = convergents(exp, k)
    pk, qk = table.pair(k)
    _, qk1 = table.pair(k - 1)
    if k % 2:
        correction = Fraction(pk + qk1, qk) - 3
    else:
        correction = Fraction(pk - qk1, qk)
    return RegularFormulaParts(A, B, n, h, partial, correction)


def dedekind_regular_formula(z: Union[QuadSurd, RegularExpansion], k: int) -> DedekindValue:
    """Closed form for S(p_k, q_k) along the floor expansion of z."""
    return DedekindValue(regular_formula_parts(z, k).value, "regular_formula")


NegativeSource = Union[QuadSurd, NegativeExpansion, Sequence[int]]


def _negative_digits(source: NegativeSource):
    if isinstance(source, QuadSurd):
        source = expand_negative(source)
    if isinstance(source, NegativeExpansion):
        return source.digit, source
    digits = list(source)

    def at(j: int) -> int:
        if j >= len(digits):
            raise IndexOutOfRange(f"digit c_{j} beyond the given list")
        return digits[j]

    return at, None


def dedekind_negative_formula(source: NegativeSource, j: int) -> DedekindValue:
    """Hirzebruch-Zagier-Myerson form for S(s_j, t_j).

    S(s_j, t_j) = sum_{k=0..j} (3 - c_k) + (s_j - t_{j-1})/t_j - 3.
    """
    if j < 0:
        raise IndexOutOfRange(f"need j >= 0, got {j}")
    digit, exp = _negative_digits(source)
    table = convergents(exp if exp is not None else [digit(i) for i in range(j + 1)], j, kind="negative")
    sj, tj = table.pair(j)
    _, tj1 = table.pair(j - 1)
    value = sum(3 - digit(i) for i in range(j + 1)) + Fraction(sj - tj1, tj) - 3
    return DedekindValue(value, "negative_formula")


@dataclass(frozen=True)
class NegativeFormulaParts:
    """Decomposition S(s_j, t_j) = C + n*m*(3-D) + partial + correction."""

    C: int
    m: int
    D: Fraction
    n: int
    i: int
    partial: int
    correction: Fraction

    @property
    def drift(self) -> Fraction:
        return self.m * (3 - self.D)

    @property
    def value(self) -> Fraction:
        return self.C + self.n * self.drift + self.partial + self.correction


def negative_formula_parts(source: Union[QuadSurd, NegativeExpansion], j: int) -> NegativeFormulaParts:
    exp = expand_negative(source) if isinstance(source, QuadSurd) else source
    r = exp.r
    if j <= r:
        raise IndexBeforePeriod(f"index {j} lies in the preperiod (r = {r})")
    m = exp.m
    i = (j - r - 1) % m + 1
    n = (j - r - i) // m
    C = sum(3 - c for c in exp.preperiod)
    D = Fraction(sum(exp.period), m)
    partial = sum(3 - exp.period[v] for v in range(i))
    table = convergents(exp, j)
    sj, tj = table.pair(j)
    _, tj1 = table.pair(j - 1)
    correction = Fraction(sj - tj1, tj) - 3
    return NegativeFormulaParts(C, m, D, n, i, partial, correction)
