from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from trigpoly.intervals import (
    IntervalValue,
    interval_dps,
    pi_interval,
    poly_deriv,
    poly_eval,
    poly_eval_centered,
    poly_mul,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


def make_interval(a: float, b: float) -> IntervalValue:
    return IntervalValue(min(a, b), max(a, b))


def test_endpoints_ordering_enforced():
    with pytest.raises(ValueError):
        IntervalValue(2, 1)


def test_basic_properties():
    v = IntervalValue(1, 3)
    assert v.lo == 1 and v.hi == 3
    assert v.mid == 2 and v.width == 2
    assert v.contains(2) and not v.contains(5)


def test_fraction_construction_encloses():
    v = IntervalValue(Fraction(1, 3))
    assert v.lo <= mpf(1) / 3 <= v.hi
    assert v.width < mpf(10) ** -15


def test_pi_interval_width_and_containment():
    enc = pi_interval(50)
    assert enc.width <= mpf(10) ** -50
    with mp.workdps(80):
        assert enc.lo < mp.pi < enc.hi


@given(a=finite, b=finite, c=finite, d=finite, ta=st.floats(0, 1), tb=st.floats(0, 1))
@settings(max_examples=200, deadline=None)
def test_arithmetic_containment(a, b, c, d, ta, tb):
    """Exact results of point operations stay inside interval results."""
    u = make_interval(a, b)
    v = make_interval(c, d)
    pu = min(a, b) + ta * (max(a, b) - min(a, b))
    pv = min(c, d) + tb * (max(c, d) - min(c, d))
    with mp.workdps(40):
        xs, ys = mpf(pu), mpf(pv)
        assert (u + v).contains(xs + ys)
        assert (u - v).contains(xs - ys)
        assert (u * v).contains(xs * ys)
        assert (u ** 2).contains(xs ** 2)
        assert (3 * u).contains(3 * xs)
        if not v.contains(0):
            assert (u / v).contains(xs / ys)


def test_division_by_zero_spanning_interval_yields_whole_line():
    # dividing by an interval containing zero widens to the whole line,
    # which is still a sound (if useless) enclosure
    q = IntervalValue(1) / IntervalValue(-1, 1)
    assert q.lo == mpf("-inf") and q.hi == mpf("+inf")


def test_power_containment_even():
    v = IntervalValue(-2, 3)
    sq = v ** 2
    assert sq.lo <= 0 and sq.hi >= 9


def test_sqrt():
    v = IntervalValue(4, 9).sqrt()
    assert v.contains(2) and v.contains(3)


def test_poly_eval_contains_point_value():
    # p(x) = 1 - 2x + x^2 on [0.5, 1.5]
    coeffs = [IntervalValue(1), IntervalValue(-2), IntervalValue(1)]
    enc = poly_eval(coeffs, IntervalValue(0.5, 1.5))
    assert enc.contains(0.25) and enc.contains(0.0)


def test_centered_form_is_tighter_near_extremum():
    coeffs = [IntervalValue(1), IntervalValue(-2), IntervalValue(1)]
    dcoeffs = poly_deriv(coeffs)
    with interval_dps(50):
        plain = poly_eval(coeffs, IntervalValue(0.9, 1.1))
        best = poly_eval_centered(coeffs, dcoeffs, 0.9, 1.1)
    assert best.width <= plain.width
    assert best.contains(0.01)  # p(0.9) = 0.01


def test_poly_mul_matches_square():
    coeffs = [IntervalValue(1), IntervalValue(1)]  # 1 + x
    sq = poly_mul(coeffs, coeffs)  # 1 + 2x + x^2
    assert [c.mid for c in sq] == [1, 2, 1]


def test_interval_dps_restores_context():
    from mpmath import iv

    old = iv.dps
    with interval_dps(60):
        assert iv.dps == 80
    assert iv.dps == old
