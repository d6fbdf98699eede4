"""End-to-end checks that the bound module mirrors the C++ library."""

from fractions import Fraction

import pytest

import threegap


GOLDEN = "(-1+sqrt 5)/2"


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_version_is_exposed():
    assert threegap.__version__ == "0.1.0"


def test_alpha_parsing_round_trip():
    src = threegap.parse_alpha("7/24")
    assert src.is_exact_rational
    assert src.rational_value == Fraction(7, 24)
    assert str(src.cf) == "[0;3,2,3]"

    surd = threegap.parse_alpha(GOLDEN)
    assert not surd.is_exact_rational
    assert str(surd.cf) == "[0;period(1)]"

    with pytest.raises(ValueError):
        threegap.parse_alpha("not alpha")
    with pytest.raises(ValueError):
        threegap.parse_alpha("5/3")


def test_gap_report_exact_fractions():
    rep = threegap.gap_report(GOLDEN, 5)
    assert rep.distinct_count == 2
    assert rep.gaps == [Fraction(1, 7), Fraction(5, 21)]
    assert rep.multiplicities == [2, 3]
    assert sum(g * m for g, m in zip(rep.gaps, rep.multiplicities)) == 1

    three = threegap.gap_report(GOLDEN, 4)
    assert three.distinct_count == 3
    assert three.gaps[2] == three.gaps[0] + three.gaps[1]


def test_prediction_against_permutation():
    pred = threegap.predict_uvals(GOLDEN, 4)
    assert pred.scenario == "first_interval"
    assert (pred.u2, pred.uN) == (2, 3)
    assert not pred.is_two_gap

    perm = threegap.u_permutation(GOLDEN, 5)
    assert perm.u == [0, 2, 4, 1, 3]
    assert threegap.two_gap_set_up_to(GOLDEN, 13) == [2, 3, 5, 8, 13]


def test_frequency_trace_fractions():
    rows = threegap.frequency_trace("[0;period(1)]", [100, 1000])
    assert rows[0].count == 9
    assert rows[0].ratio == Fraction(9, 100)
    assert rows[0].upper_bound == Fraction(1, 10)
    assert rows[1].count == 14
    assert rows[1].ratio <= rows[1].upper_bound


def test_closed_form_handles_big_integers():
    assert threegap.q_closed_form("[0;3,period(1,2)]", 4) == 11
    assert threegap.q_closed_form("[0;period(1)]", 300) == fib(300)
    assert threegap.digit_sum_over_q("[0;period(1)]", 10) == Fraction(2, 11)


def test_surd_expansion_and_errors():
    cf = threegap.expand_surd(-1, 3, 1)
    assert cf.is_periodic
    assert cf.period == [1, 2]
    with pytest.raises(ValueError):
        threegap.expand_surd(0, 4, 2)  # rational in disguise
    with pytest.raises(ValueError):
        threegap.gap_report("7/24", 24)  # points collide


def test_sampling_is_deterministic():
    a = threegap.sample_alpha(seed=42, count=3, precision_bits=128, max_index=25)
    b = threegap.sample_alpha(seed=42, count=3, precision_bits=128, max_index=25)
    assert len(a.samples) == 3
    for x, y in zip(a.samples, b.samples):
        assert x == y
        assert x.digit_count() == 25

    stat = threegap.levy_statistic(a.samples[0], 25)
    assert abs(stat - threegap.levy_reference()) / threegap.levy_reference() < 1.0
