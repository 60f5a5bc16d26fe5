import random
from fractions import Fraction

import pytest

from cfded import (
    NotBounded,
    ToleranceNotReached,
    classify,
    cluster_points_U,
    cluster_points_V,
    coincidence_analysis,
    convergence_probe,
    evaluate_purely_periodic,
    surd_cmp,
    surd_normalize,
    to_decimal,
)
from support import inv_sqrt, phi, random_surd


def test_classify_bounded():
    report = classify(inv_sqrt(53))
    assert report.verdict == "bounded"
    assert report.B == 0
    assert report.D == 3
    assert (report.L, report.m) == (10, 22)
    report = classify(phi())
    assert (report.verdict, report.B, report.D) == ("bounded", 0, 3)
    assert (report.L, report.m) == (2, 1)


def test_classify_divergent():
    report = classify(surd_normalize(0, 1, 1, 3))
    assert report.verdict == "diverges_minus"
    assert report.B == -1
    assert report.m * (3 - report.D) == -1
    up = classify(surd_normalize(1, 1, 2, 3))  # floor period (1,2), B = 1
    assert up.verdict == "diverges_plus"
    assert up.B == 1
    assert up.m * (3 - up.D) == 1


def test_cluster_points_phi():
    U = cluster_points_U(phi())
    assert len(U) == 2
    # u_h is phi for both classes, so U_1 = phi - 1/phi = 0 exactly
    assert U[0].value == Fraction(0)
    assert U[0].parity == "q_plus_h_even"
    assert U[1].value == surd_normalize(-3, 1, 1, 5)  # sqrt(5) - 3
    assert U[1].parity == "q_plus_h_odd"
    V = cluster_points_V(phi())
    assert len(V) == 1
    assert V[0].value == surd_normalize(-3, 1, 1, 5)
    assert V[0].generator == evaluate_purely_periodic("negative", [3])


def test_cluster_points_sqrt53():
    z = inv_sqrt(53)
    U = {p.class_index: p for p in cluster_points_U(z)}
    V = {p.class_index: p for p in cluster_points_V(z)}
    assert len(U) == 10 and len(V) == 22
    assert U[2].value == surd_normalize(636, 60, 371, 53)
    assert V[1].value == U[2].value
    assert U[4].value == surd_normalize(-159, 54, 53, 53)
    assert V[12].value == surd_normalize(-13833, 97, 2332, 53)
    assert U[7].value == surd_normalize(-1749, -46, 371, 53)
    assert surd_cmp(V[12].value, U[7].value) != 0
    # the near miss agrees to one decimal but not beyond
    assert to_decimal(V[12].value, 1) == to_decimal(U[7].value, 1) == "-5.6"
    assert to_decimal(V[12].value, 2) != to_decimal(U[7].value, 2)


def test_cluster_generators_are_purely_periodic_tails():
    z = inv_sqrt(53)
    for p in cluster_points_U(z) + cluster_points_V(z):
        assert surd_cmp(p.generator, 1) > 0


def test_cluster_points_require_bounded():
    root3 = surd_normalize(0, 1, 1, 3)
    with pytest.raises(NotBounded):
        cluster_points_U(root3)
    with pytest.raises(NotBounded):
        cluster_points_V(root3)
    with pytest.raises(NotBounded):
        coincidence_analysis(root3)


def test_coincidence_sqrt53():
    co = coincidence_analysis(inv_sqrt(53))
    want = {
        (1, 2): (636, 60, 371),
        (4, 4): (-159, 54, 53),
        (7, 6): (-2862, 60, 371),
        (8, 8): (-1749, 57, 212),
        (22, 10): (477, 57, 212),
    }
    got = {(i, h): val for i, h, val in co.pairs}
    assert set(got) == set(want)
    for key, (a, b, c) in want.items():
        assert got[key] == surd_normalize(a, b, c, 53)
    assert len(co.u_only) == 5
    assert len(co.v_only) == 17
    decimals = sorted(to_decimal(v, 5) for v in got.values())
    assert decimals == sorted(["2.89166", "4.41747", "-6.53690", "-6.29261", "4.20738"])


def test_coincidence_phi():
    co = coincidence_analysis(phi())
    assert co.pairs == [(1, 2, surd_normalize(-3, 1, 1, 5))]
    assert [p.class_index for p in co.u_only] == [1]
    assert co.v_only == []


def test_coincidence_matches_successor_digit_rule():
    from cfded import expand_negative, expand_regular

    rng = random.Random(21)
    for _ in range(8):
        length = rng.choice([1, 3])
        period = [rng.randrange(1, 5) for _ in range(length)]
        z = evaluate_purely_periodic("regular", period)
        co = coincidence_analysis(z)
        matched = {i for i, _, _ in co.pairs}
        # matched V classes are exactly those whose cyclic successor digit
        # is at least 3; checked again here from the raw expansion
        neg = expand_negative(z)
        assert matched == {i for i in range(1, neg.m + 1) if neg.period[i % neg.m] >= 3}
        assert len(co.pairs) == expand_regular(z).L // 2


def test_probe_bounded_sqrt53():
    report = convergence_probe(inv_sqrt(53), depth=6)
    assert report.verdict == "bounded"
    assert len(report.classes) == 32
    for cp in report.classes:
        assert len(cp.gaps) == 6
        assert surd_cmp(cp.final_gap, Fraction(1, 10**6)) < 0
        assert cp.monotone_tail(3)


def test_probe_bounded_phi_needs_depth():
    # phi converges slowly: 4.3e-5 at six periods, passing 1e-8 by forty
    with pytest.raises(ToleranceNotReached):
        convergence_probe(phi(), depth=6)
    report = convergence_probe(phi(), depth=40, tolerance=Fraction(1, 10**8))
    assert report.verdict == "bounded"
    for cp in report.classes:
        assert cp.monotone_tail(3)


def test_probe_divergent_sqrt3():
    report = convergence_probe(surd_normalize(0, 1, 1, 3), depth=6)
    assert report.verdict == "diverges_minus"
    assert report.drift_regular == -1
    assert report.drift_negative == -1
    for cp in report.classes:
        assert cp.gaps == [n * -1 for n in range(6)]


def test_probe_rejects_bad_depth():
    with pytest.raises(ValueError):
        convergence_probe(phi(), depth=0)


def test_random_bounded_fixtures_have_distinct_clusters():
    rng = random.Random(29)
    for _ in range(10):
        length = rng.choice([1, 3, 5])
        period = [rng.randrange(1, 5) for _ in range(length)]
        z = evaluate_purely_periodic("regular", period)
        co = coincidence_analysis(z)  # raises if anything is off
        values_u = [p.value for p in co.U]
        values_v = [p.value for p in co.V]
        assert len(values_u) == len({str(v) for v in values_u})
        assert len(values_v) == len({str(v) for v in values_v})
