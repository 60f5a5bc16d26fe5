"""Asymptotics of Dedekind sums along convergents and their cluster points.

For a quadratic surd z the sums S(p_k, q_k) and S(s_j, t_j) either diverge
(in lockstep, both ways) or stay bounded.  In the bounded case they
accumulate at finitely many exact points in Q(sqrt(N)): one per residue
class of the convergent index modulo the (doubled) period.  This module
classifies the behavior, computes the cluster points, decides which ones
coincide across the two expansions, and probes convergence numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InternalInvariant, NotBounded, ToleranceNotReached
from .exactnum import QuadSurd, surd_cmp
from .contfrac import (
    NegativeExpansion,
    RegularExpansion,
    convergents,
    evaluate_purely_periodic,
    expand_negative,
    expand_regular,
)
from .dedekind import (
    _alternating,
    dedekind_fast,
    negative_formula_parts,
    regular_formula_parts,
)

Real = Union[Fraction, QuadSurd]


@dataclass(frozen=True)
class AsymptoticReport:
    B: int
    D: Fraction
    verdict: str  # diverges_plus | bounded | diverges_minus
    L: int
    m: int


def _sign_B(exp: RegularExpansion) -> int:
    sign_q = -1 if exp.q % 2 else 1
    return sign_q * _alternating(exp.doubled_period, 1)


def classify(z: QuadSurd) -> AsymptoticReport:
    """Trichotomy of the Dedekind-sum asymptotics along both expansions."""
    reg = expand_regular(z)
    neg = expand_negative(z)
    B = _sign_B(reg)
    D = Fraction(sum(neg.period), neg.m)
    sB = (B > 0) - (B < 0)
    sD = (D < 3) - (D > 3)
    if sB != sD:
        raise InternalInvariant(f"sign(B)={sB} but sign(3-D)={sD} for {z}")
    verdict = {1: "diverges_plus", 0: "bounded", -1: "diverges_minus"}[sB]
    return AsymptoticReport(B, D, verdict, reg.L, neg.m)


@dataclass(frozen=True)
class ClusterPoint:
    side: str  # "U" or "V"
    class_index: int
    value: Real
    parity: Optional[str]  # U side: q_plus_h_odd | q_plus_h_even
    generator: QuadSurd  # the purely periodic u_h or v_i


def _require_bounded(z: QuadSurd) -> AsymptoticReport:
    report = classify(z)
    if report.verdict != "bounded":
        raise NotBounded(f"{z} has {report.verdict} Dedekind sums; no cluster points")
    return report


def cluster_points_U(z: QuadSurd, reg: Optional[RegularExpansion] = None) -> list[ClusterPoint]:
    """The L cluster points of S(p_k, q_k), one per floor class h."""
    _require_bounded(z)
    if reg is None:
        reg = expand_regular(z)
    digits = list(reg.doubled_period)
    L = reg.L
    q = reg.q
    A = _alternating(reg.preperiod, -1)
    sign_q = -1 if q % 2 else 1
    points = []
    partial = 0
    sign = sign_q
    for h in range(1, L + 1):
        partial += sign * digits[h - 1]
        sign = -sign
        rotation = digits[h - 1 :: -1] + digits[: h - 1 : -1]
        u = evaluate_purely_periodic("regular", rotation, radicand=z.N)
        if (q + h) % 2:
            value = A + partial + z + u.inverse() - 3
            parity = "q_plus_h_odd"
        else:
            value = A + partial + z - u.inverse()
            parity = "q_plus_h_even"
        points.append(ClusterPoint("U", h, value, parity, u))
    return points


def cluster_points_V(z: QuadSurd, neg: Optional[NegativeExpansion] = None) -> list[ClusterPoint]:
    """The m cluster points of S(s_j, t_j), one per ceiling class i."""
    _require_bounded(z)
    if neg is None:
        neg = expand_negative(z)
    digits = list(neg.period)
    m = neg.m
    C = sum(3 - c for c in neg.preperiod)
    points = []
    partial = 0
    for i in range(1, m + 1):
        partial += 3 - digits[i - 1]
        rotation = digits[i - 1 :: -1] + digits[: i - 1 : -1]
        v = evaluate_purely_periodic("negative", rotation, radicand=z.N)
        value = C + partial + z - v.inverse() - 3
        points.append(ClusterPoint("V", i, value, None, v))
    return points


@dataclass(frozen=True)
class CoincidenceReport:
    pairs: list[tuple[int, int, Real]]  # (i, h, common value)
    u_only: list[ClusterPoint]
    v_only: list[ClusterPoint]
    U: list[ClusterPoint]
    V: list[ClusterPoint]


def coincidence_analysis(z: QuadSurd) -> CoincidenceReport:
    """Exact matching of V-side against U-side cluster points.

    Also enforces what the theory guarantees: pairwise distinctness on
    each side, exactly L/2 matches, matched U classes have odd q+h, and
    the matched i are exactly those with a cyclic successor digit >= 3.
    """
    _require_bounded(z)
    reg = expand_regular(z)
    neg = expand_negative(z)
    U = cluster_points_U(z, reg)
    V = cluster_points_V(z, neg)

    for pts in (U, V):
        for x in range(len(pts)):
            for y in range(x + 1, len(pts)):
                if surd_cmp(pts[x].value, pts[y].value) == 0:
                    raise InternalInvariant(
                        f"cluster points {pts[x].side}_{pts[x].class_index} and "
                        f"{pts[y].side}_{pts[y].class_index} coincide for {z}"
                    )

    pairs = []
    matched_h: set[int] = set()
    matched_i: set[int] = set()
    for vp in V:
        for up in U:
            if surd_cmp(vp.value, up.value) == 0:
                if up.parity != "q_plus_h_odd":
                    raise InternalInvariant(
                        f"V_{vp.class_index} matches U_{up.class_index} with q+h even"
                    )
                pairs.append((vp.class_index, up.class_index, vp.value))
                matched_h.add(up.class_index)
                matched_i.add(vp.class_index)
                break

    expected_i = {i for i in range(1, neg.m + 1) if neg.period[i % neg.m] >= 3}
    if matched_i != expected_i:
        raise InternalInvariant(
            f"matched V classes {sorted(matched_i)} differ from the digit test {sorted(expected_i)}"
        )
    if len(pairs) != reg.L // 2:
        raise InternalInvariant(f"{len(pairs)} coincidences, expected L/2 = {reg.L // 2}")

    u_only = [p for p in U if p.class_index not in matched_h]
    v_only = [p for p in V if p.class_index not in matched_i]
    return CoincidenceReport(pairs, u_only, v_only, U, V)


@dataclass(frozen=True)
class ClassProbe:
    side: str
    class_index: int
    cluster: Real
    indices: list[int]
    gaps: list[Real]  # exact |S - cluster| per period, same order as indices

    @property
    def final_gap(self) -> Real:
        return self.gaps[-1]

    def monotone_tail(self, length: int = 3) -> bool:
        # non-increasing: classes whose sums hit the cluster point exactly
        # sit at gap 0 forever
        tail = self.gaps[-length:]
        return all(surd_cmp(tail[x + 1], tail[x]) <= 0 for x in range(len(tail) - 1))


@dataclass(frozen=True)
class ProbeReport:
    verdict: str
    classes: list[ClassProbe]
    drift_regular: Optional[Fraction] = None  # per regular period of length L
    drift_negative: Optional[Fraction] = None  # per negative period of length m


def _abs_gap(s: Fraction, cluster: Real) -> Real:
    gap = s - cluster
    return -gap if surd_cmp(gap, 0) < 0 else gap


def convergence_probe(z: QuadSurd, depth: int = 6, tolerance: Fraction = Fraction(1, 10**6)) -> ProbeReport:
    """Follow S along every class for `depth` periods.

    Bounded case: records the exact gap |S - cluster point| per period and
    requires the last gap of every class to be below `tolerance`.
    Divergent case: extracts the exact drift per period from the closed
    forms instead.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    report = classify(z)
    reg = expand_regular(z)
    neg = expand_negative(z)

    if report.verdict != "bounded":
        return _divergent_probe(z, reg, neg, report, depth)

    U = cluster_points_U(z, reg)
    V = cluster_points_V(z, neg)
    reg_table = convergents(reg, reg.q + depth * reg.L)
    neg_table = convergents(neg, neg.r + depth * neg.m)

    classes = []
    for up in U:
        indices = [reg.q + n * reg.L + up.class_index for n in range(depth)]
        gaps = [_abs_gap(dedekind_fast(*reg_table.pair(k)).value, up.value) for k in indices]
        classes.append(ClassProbe("U", up.class_index, up.value, indices, gaps))
    for vp in V:
        indices = [neg.r + n * neg.m + vp.class_index for n in range(depth)]
        gaps = [_abs_gap(dedekind_fast(*neg_table.pair(j)).value, vp.value) for j in indices]
        classes.append(ClassProbe("V", vp.class_index, vp.value, indices, gaps))

    worst = None
    for cp in classes:
        if surd_cmp(cp.final_gap, tolerance) >= 0:
            if worst is None or surd_cmp(cp.final_gap, worst) > 0:
                worst = cp.final_gap
    if worst is not None:
        raise ToleranceNotReached(
            f"gap {float(worst):.3e} at depth {depth} exceeds tolerance {float(tolerance):.3e}",
            achieved=worst,
        )
    return ProbeReport(report.verdict, classes)


def _divergent_probe(z, reg, neg, report, depth) -> ProbeReport:
    """Verify the linear drift of the closed forms against the fast route."""
    drift_reg = Fraction(report.B)
    drift_neg = neg.m * (3 - report.D)
    reg_table = convergents(reg, reg.q + depth * reg.L)
    neg_table = convergents(neg, neg.r + depth * neg.m)

    classes = []
    for h in range(1, reg.L + 1):
        indices = [reg.q + n * reg.L + h for n in range(depth)]
        gaps = []
        for n, k in enumerate(indices):
            parts = regular_formula_parts(reg, k)
            s = dedekind_fast(*reg_table.pair(k)).value
            residual = s - (parts.A + parts.partial + parts.correction)
            if residual != n * drift_reg:
                raise InternalInvariant(f"regular drift mismatch at k={k}: {residual}")
            gaps.append(residual)
        classes.append(ClassProbe("U", h, drift_reg, indices, gaps))
    for i in range(1, neg.m + 1):
        indices = [neg.r + n * neg.m + i for n in range(depth)]
        gaps = []
        for n, j in enumerate(indices):
            parts = negative_formula_parts(neg, j)
            s = dedekind_fast(*neg_table.pair(j)).value
            residual = s - (parts.C + parts.partial + parts.correction)
            if residual != n * drift_neg:
                raise InternalInvariant(f"negative drift mismatch at j={j}: {residual}")
            gaps.append(residual)
        classes.append(ClassProbe("V", i, drift_neg, indices, gaps))

    return ProbeReport(report.verdict, classes, drift_regular=drift_reg, drift_negative=drift_neg)
