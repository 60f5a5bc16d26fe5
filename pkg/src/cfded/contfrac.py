"""Regular and negative regular continued fractions of quadratic surds.

Both expansions are computed with exact complete quotients; the period is
detected at the first exact recurrence of a complete quotient, which makes
both the period and the preperiod minimal (the digit tail and the complete
quotient determine each other).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    CfdedError,
    EmptyInput,
    IndexOutOfRange,
    InternalInvariant,
    InvalidPeriod,
    NotFound,
)
from .exactnum import QuadSurd, surd_cmp, _build

_MAX_STEPS = 10**6

Digits = Sequence[int]


@dataclass(frozen=True)
class RegularExpansion:
    """Floor expansion: preperiod a_0..a_q, repeating period b_1..b_l."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    quotients: tuple[QuadSurd, ...]  # complete quotients z_0..z_{q+l}

    @property
    def q(self) -> int:
        return len(self.preperiod) - 1

    @property
    def l(self) -> int:
        return len(self.period)

    @property
    def L(self) -> int:
        # doubled period length: always even
        return self.l if self.l % 2 == 0 else 2 * self.l

    @property
    def doubled_period(self) -> tuple[int, ...]:
        return self.period if self.l % 2 == 0 else self.period * 2

    def digit(self, j: int) -> int:
        if j < 0:
            raise IndexOutOfRange(f"digit index {j} < 0")
        if j < len(self.preperiod):
            return self.preperiod[j]
        return self.period[(j - len(self.preperiod)) % self.l]

    def complete_quotient(self, j: int) -> QuadSurd:
        if j < 0:
            raise IndexOutOfRange(f"quotient index {j} < 0")
        if j < len(self.quotients):
            return self.quotients[j]
        return self.quotients[len(self.preperiod) + (j - len(self.preperiod)) % self.l]


@dataclass(frozen=True)
class NegativeExpansion:
    """Ceiling expansion: preperiod c_0..c_r, repeating period d_1..d_m."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    quotients: tuple[QuadSurd, ...]

    @property
    def r(self) -> int:
        return len(self.preperiod) - 1

    @property
    def m(self) -> int:
        return len(self.period)

    def digit(self, j: int) -> int:
        if j < 0:
            raise IndexOutOfRange(f"digit index {j} < 0")
        if j < len(self.preperiod):
            return self.preperiod[j]
        return self.period[(j - len(self.preperiod)) % self.m]

    def complete_quotient(self, j: int) -> QuadSurd:
        if j < 0:
            raise IndexOutOfRange(f"quotient index {j} < 0")
        if j < len(self.quotients):
            return self.quotients[j]
        return self.quotients[len(self.preperiod) + (j - len(self.preperiod)) % self.m]


def expand_regular(z: QuadSurd) -> RegularExpansion:
    """Floor algorithm: a_j = floor(z_j), z_{j+1} = 1/(z_j - a_j)."""
    if not isinstance(z, QuadSurd):
        raise TypeError("expand_regular needs an irrational quadratic surd")
    seen: dict[QuadSurd, int] = {}
    digits: list[int] = []
    quotients: list[QuadSurd] = []
    zj = z
    for j in range(_MAX_STEPS):
        if zj in seen:
            i = seen[zj]
            return RegularExpansion(tuple(digits[:i]), tuple(digits[i:]), tuple(quotients))
        seen[zj] = j
        quotients.append(zj)
        a = zj.floor()
        digits.append(a)
        zj = (zj - a).inverse()
    raise CfdedError(f"no period found within {_MAX_STEPS} steps")


def _anchor_word(reg: "RegularExpansion") -> list[int]:
    """Canonical rotation of the negative period, from the regular one.

    Rewriting the floor digits digit-by-digit sends b_k at stream position
    q+k to a run of 2s (odd position) or to b_k + 2 (even position); the
    concatenation over one doubled period is the negative period anchored
    the way the regular period is.
    """
    q = reg.q
    word: list[int] = []
    for k, b in enumerate(reg.doubled_period, start=1):
        if (q + k) % 2:
            word.extend([2] * (b - 1))
        else:
            word.append(b + 2)
    return word


def expand_negative(z: QuadSurd) -> NegativeExpansion:
    """Ceiling algorithm: c_j = ceil(z_j), z_{j+1} = 1/(c_j - z_j).

    The period length is minimal (first recurrence of a complete
    quotient).  The period start is then aligned with the rewritten
    regular period, so that runs of 2s straddling the preperiod boundary
    are split the canonical way; the preperiod is the shortest one
    compatible with that alignment.
    """
    if not isinstance(z, QuadSurd):
        raise TypeError("expand_negative needs an irrational quadratic surd")
    seen: dict[QuadSurd, int] = {}
    digits: list[int] = []
    quotients: list[QuadSurd] = []
    zj = z
    for j in range(_MAX_STEPS):
        if zj in seen:
            i = seen[zj]
            break
        seen[zj] = j
        quotients.append(zj)
        c = zj.ceil()
        digits.append(c)
        zj = (c - zj).inverse()
    else:
        raise CfdedError(f"no period found within {_MAX_STEPS} steps")

    if any(c < 2 for c in digits[1:]):
        raise InternalInvariant(f"negative digit < 2 in {digits}")
    m = len(digits) - i
    if all(d == 2 for d in digits[i:]):
        raise InternalInvariant("all-2 period is impossible for an irrational")

    def digit_at(t: int) -> int:
        return digits[t] if t < len(digits) else digits[i + (t - i) % m]

    def quot_at(t: int) -> QuadSurd:
        return quotients[t] if t < len(quotients) else quotients[i + (t - i) % m]

    word = _anchor_word(expand_regular(z))
    if len(word) < m:
        raise InternalInvariant(f"anchor word {word} shorter than the minimal period {m}")
    r_min = i - 1
    for r in range(r_min, r_min + m + 1):
        if all(digit_at(r + 1 + t) == word[t] for t in range(m)):
            break
    else:
        raise InternalInvariant(f"period of {z} matches no rotation of {word}")

    pre = tuple(digit_at(t) for t in range(r + 1))
    per = tuple(digit_at(t) for t in range(r + 1, r + 1 + m))
    quots = tuple(quot_at(t) for t in range(r + 1 + m))
    return NegativeExpansion(pre, per, quots)


Expansion = Union[RegularExpansion, NegativeExpansion]


class ConvergentTable:
    """Convergent pairs indexed from -1, with the seed (1, 0)."""

    def __init__(self, kind: str, entries: list[tuple[int, int]]):
        if kind not in ("regular", "negative"):
            raise ValueError(f"unknown kind {kind!r}")
        self.kind = kind
        self._entries = entries  # entries[k + 1] holds index k

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def last_index(self) -> int:
        return len(self._entries) - 2

    def pair(self, k: int) -> tuple[int, int]:
        if k < -1 or k > self.last_index:
            raise IndexOutOfRange(f"index {k} outside [-1, {self.last_index}]")
        return self._entries[k + 1]

    def fraction(self, k: int) -> Fraction:
        num, den = self.pair(k)
        return Fraction(num, den)


def _digit_source(source: Union[Expansion, Digits], kind: Optional[str]):
    if isinstance(source, RegularExpansion):
        return source.digit, "regular"
    if isinstance(source, NegativeExpansion):
        return source.digit, "negative"
    digits = list(source)

    def at(j: int) -> int:
        if j >= len(digits):
            raise IndexOutOfRange(f"digit index {j} beyond the given {len(digits)} digits")
        return digits[j]

    if kind is None:
        raise ValueError("kind is required for a raw digit list")
    return at, kind


def convergents(source: Union[Expansion, Digits], n: int, kind: Optional[str] = None) -> ConvergentTable:
    """Table of convergents for indices -1..n of the given digits."""
    if n < 0:
        raise IndexOutOfRange(f"need n >= 0, got {n}")
    digit, kind = _digit_source(source, kind)
    sign = 1 if kind == "regular" else -1
    entries = [(1, 0)]
    pn1, qn1 = 1, 0
    pn, qn = digit(0), 1
    entries.append((pn, qn))
    for k in range(1, n + 1):
        d = digit(k)
        pn, pn1 = d * pn + sign * pn1, pn
        qn, qn1 = d * qn + sign * qn1, qn
        entries.append((pn, qn))
    return ConvergentTable(kind, entries)


def transition_prefix(digits: Digits) -> list[int]:
    """Rewrite floor digits a_0..a_n as ceiling digits.

    The pattern is ceil(a_0+1, 2^(a_1-1), a_2+2, 2^(a_3-1), a_4+2, ...);
    the group consuming a_n is withheld, since a finite list leaves that
    group unconfirmed.
    """
    digits = list(digits)
    if not digits:
        raise EmptyInput("no digits given")
    if any(a < 1 for a in digits[1:]):
        raise ValueError("floor digits must be >= 1 from index 1 on")
    out: list[int] = []
    for i, a in enumerate(digits[:-1]):
        if i == 0:
            out.append(a + 1)
        elif i % 2 == 1:
            out.extend([2] * (a - 1))
        else:
            out.append(a + 2)
    return out


def _digit_after(exp: Union[NegativeExpansion, Digits], j: int) -> int:
    if isinstance(exp, NegativeExpansion):
        return exp.digit(j + 1)
    if j + 1 >= len(exp):
        raise IndexOutOfRange(f"digit c_{j + 1} is beyond the given list")
    return exp[j + 1]


def is_floor_convergent(exp: Union[NegativeExpansion, Digits], j: int) -> bool:
    """Whether the ceiling convergent s_j/t_j is also a floor convergent."""
    if j < 1:
        raise IndexOutOfRange(f"need j >= 1, got {j}")
    return _digit_after(exp, j) >= 3


@dataclass(frozen=True)
class LegendreWitness:
    lhs: QuadSurd
    rhs: Fraction
    holds: bool


def legendre_witness(z: QuadSurd, exp: NegativeExpansion, j: int) -> LegendreWitness:
    """Sharp approximation test deciding floor-convergent membership.

    Compares t_j/(z_{j+1} t_j - t_{j-1}) with t_j/(t_j + s*) where s* is
    the inverse of s_j mod t_j; the outcome must agree with the digit test
    c_{j+1} >= 3.
    """
    if j < 1:
        raise IndexOutOfRange(f"need j >= 1, got {j}")
    table = convergents(exp, j)
    sj, tj = table.pair(j)
    _, tj1 = table.pair(j - 1)
    zj1 = exp.complete_quotient(j + 1)
    lhs = tj / (zj1 * tj - tj1)
    s_star = pow(sj, -1, tj)
    rhs = Fraction(tj, tj + s_star)
    return LegendreWitness(lhs, rhs, surd_cmp(lhs, rhs) < 0)


@dataclass(frozen=True)
class IntercalaryForm:
    kind: str  # "exact" or "intercalary"
    k: int
    i: Optional[int] = None


def decompose_fraction(regular_digit, target_num: int, target_den: int) -> IntercalaryForm:
    """Locate a reduced fraction on the convergent/mediant ladder.

    `regular_digit(k)` supplies the floor digits of the underlying number.
    Returns either the convergent index or the mediant position between
    two adjacent convergents.
    """
    pn1, qn1 = 1, 0
    pn, qn = regular_digit(0), 1
    k = 0
    while qn <= target_den:
        if (pn, qn) == (target_num, target_den):
            return IntercalaryForm("exact", k)
        # mediant ladder between p_k/q_k and p_{k+1}/q_{k+1}:
        # (i*p_k + p_{k-1})/(i*q_k + q_{k-1}), 1 <= i <= a_{k+1}-1
        if (target_den - qn1) % qn == 0:
            i = (target_den - qn1) // qn
            if 1 <= i <= regular_digit(k + 1) - 1 and i * pn + pn1 == target_num:
                return IntercalaryForm("intercalary", k, i)
        d = regular_digit(k + 1)
        pn, pn1 = d * pn + pn1, pn
        qn, qn1 = d * qn + qn1, qn
        k += 1
    raise NotFound(f"{target_num}/{target_den} is on no ladder position")


def intercalary_decompose(z: QuadSurd, j: int) -> IntercalaryForm:
    """Express the ceiling convergent s_j/t_j of z on the floor-side ladder."""
    if j < 0:
        raise IndexOutOfRange(f"need j >= 0, got {j}")
    neg = expand_negative(z)
    reg = expand_regular(z)
    sj, tj = convergents(neg, j).pair(j)
    return decompose_fraction(reg.digit, sj, tj)


def intercalary_decompose_digits(regular_digits: Digits, negative_digits: Digits, j: int) -> IntercalaryForm:
    """Digit-stream variant for numbers given only by their expansions."""
    if j < 0:
        raise IndexOutOfRange(f"need j >= 0, got {j}")
    sj, tj = convergents(negative_digits, j, kind="negative").pair(j)
    reg = list(regular_digits)

    def at(k: int) -> int:
        if k >= len(reg):
            raise IndexOutOfRange(f"digit a_{k} beyond the given list")
        return reg[k]

    return decompose_fraction(at, sj, tj)


def evaluate_purely_periodic(kind: str, period: Digits, radicand: Optional[int] = None) -> QuadSurd:
    """Value of the purely periodic expansion with the given period.

    One period is folded into a Moebius map through the convergent
    recurrence; the fixed-point quadratic is solved exactly and the root
    is selected by exact interval bracketing.  `radicand` is an optional
    hint naming the (squarefree) field the result must lie in.
    """
    period = list(period)
    if not period:
        raise InvalidPeriod("empty period")
    if kind == "regular":
        if any(d < 1 for d in period):
            raise InvalidPeriod(f"regular period digits must be >= 1: {period}")
        lo = period[0]
    elif kind == "negative":
        if any(d < 2 for d in period):
            raise InvalidPeriod(f"negative period digits must be >= 2: {period}")
        if all(d == 2 for d in period):
            raise InvalidPeriod("an all-2 negative period has no irrational value")
        lo = period[0] - 1
    else:
        raise ValueError(f"unknown kind {kind!r}")

    sign = 1 if kind == "regular" else -1
    pn1, qn1 = 1, 0
    pn, qn = period[0], 1
    for d in period[1:]:
        pn, pn1 = d * pn + sign * pn1, pn
        qn, qn1 = d * qn + sign * qn1, qn
    # fixed point of x -> (pn*x + sign*pn1)/(qn*x + sign*qn1)
    A = qn
    B = sign * qn1 - pn
    C = -sign * pn1
    disc = B * B - 4 * A * C
    if disc <= 0:
        raise InvalidPeriod("fixed-point quadratic has no real irrational root")
    g, k = _split_disc(disc, radicand)

    hi = lo + 1
    for s in (1, -1):
        root = _build(Fraction(-B, 2 * A), Fraction(s * g, 2 * A), k)
        if isinstance(root, QuadSurd) and surd_cmp(root, lo) > 0 and surd_cmp(root, hi) < 0:
            return root
    raise InternalInvariant(f"no fixed-point root in ({lo}, {hi}) for period {period}")


def _split_disc(disc: int, radicand: Optional[int]) -> tuple[int, int]:
    from .exactnum import squarefree_split
    from math import isqrt

    if radicand is not None and disc % radicand == 0:
        g = isqrt(disc // radicand)
        if g * g * radicand == disc:
            return g, radicand
    g, k = squarefree_split(disc)
    if k == 1:
        raise InvalidPeriod("periodic value is rational (square discriminant)")
    return g, k
