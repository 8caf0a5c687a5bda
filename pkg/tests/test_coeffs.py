import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from trigpoly.coeffs import (
    CoefficientTable,
    coeff_bessel,
    coeff_direct,
    coeff_recurrence,
    coeff_symbolic,
    coefficient_table,
    bessel_j_half_integer,
    gamma_half,
    general_series_direct,
    general_series_recurrence,
    series_terms,
)
from trigpoly.precision import IndexLimitError, PrecisionError, working

# 1/pi to 50 significant digits
INV_PI_50 = "0.31830988618379067153776752674502872406891929148091"

# brute-force 30-term partial sum of sum_k (-1)^k binom(k+2,2)/(2k+4)!,
# frozen from the independent oracle below
T2_AT_1 = "0.0376460848674695986564457142734"


def brute_series(j: int, z, terms: int) -> mpf:
    """Independent oracle: raw partial summation, no stopping logic."""
    s = mpf(0)
    for k in range(terms):
        s += (-z) ** k * mpf(math.comb(j + k, j)) / mpf(math.factorial(2 * j + 2 * k))
    return s


def rel_diff(a: mpf, b: mpf) -> mpf:
    return abs(a - b) / abs(b)


# --- direct series ---------------------------------------------------------

def test_direct_j1_is_inverse_pi_to_50_digits():
    value, bound = coeff_direct(1, 50)
    assert value.to_str(50) == INV_PI_50
    assert bound.value < mpf(10) ** -50 * value.value


def test_first_series_term_is_alternating_upper_bound():
    # truncating at K=0 leaves a_{1,0} = 1/2! = 0.5, an upper bound on t_1
    terms = series_terms(1, 1, 50)
    assert float(terms[0].a_jk) == 0.5
    value, _ = coeff_direct(1, 50)
    assert value.value < 0.5


def test_direct_j5_matches_exact_symbolic_oracle():
    value, _ = coeff_direct(5, 50)
    with working(60):
        oracle = (1680 - 180 * mp.pi ** 2 + mp.pi ** 4) / (120 * mp.pi ** 9)
        assert rel_diff(value.value, oracle) < mpf(10) ** -50
    assert float(value) == pytest.approx(2.46e-7, rel=1e-2)


def test_direct_rejects_low_precision_and_large_index():
    with pytest.raises(PrecisionError):
        coeff_direct(1, 29)
    with pytest.raises(IndexLimitError):
        coeff_direct(201, 50)
    # the limit is configurable
    value, _ = coeff_direct(201, 50, limit=210)
    assert value.value > 0


def test_series_terms_alternate_and_follow_ratio_law():
    terms = series_terms(3, 8, 50)
    with working(50):
        for prev, nxt in zip(terms, terms[1:]):
            k = prev.k
            assert (-1) ** k * prev.a_jk.value > 0
            expected = mp.pi ** 2 / (8 * (k + 1) * (2 * 3 + 2 * k + 1))
            assert expected < 1
            got = abs(nxt.a_jk.value / prev.a_jk.value)
            assert rel_diff(got, expected) < mpf(10) ** -45


@given(j=st.integers(1, 40), k=st.integers(0, 20))
@settings(max_examples=60, deadline=None)
def test_term_ratio_below_one_everywhere(j, k):
    with working(30):
        ratio = mp.pi ** 2 / (8 * (k + 1) * (2 * j + 2 * k + 1))
        assert ratio < 1


# --- recurrence ------------------------------------------------------------

def test_recurrence_seed_only():
    table = coeff_recurrence(1, 50)
    assert len(table) == 1
    assert table.value(1).to_str(50) == INV_PI_50


def test_recurrence_j2_is_inverse_pi_cubed():
    table = coeff_recurrence(2, 50)
    with working(60):
        assert rel_diff(table.value(2).value, 1 / mp.pi ** 3) < mpf(10) ** -50
    assert float(table.value(2)) == pytest.approx(0.032251534433199, rel=1e-12)


def test_recurrence_first_five_match_displayed_values():
    table = coeff_recurrence(5, 50)
    approx = [0.318, 0.0323, 1.16e-3, 2.16e-5, 2.46e-7]
    for j, expected in enumerate(approx, start=1):
        assert float(table.value(j)) == pytest.approx(expected, rel=5e-3)


def test_recurrence_certificates_meet_table_invariant():
    table = coeff_recurrence(20, 50)
    for entry in table:
        assert entry.trunc_bound.value < mpf(10) ** -50 * entry.value.value


def test_table_rejects_gaps_and_bad_values():
    good = coeff_recurrence(3, 50)
    with pytest.raises(ValueError):
        CoefficientTable(entries=good.entries[1:], precision_digits=50)


# --- symbolic --------------------------------------------------------------

def test_symbolic_reduced_forms_match_display():
    syms = coeff_symbolic(5)
    assert [(s.numerator, s.denominator) for s in syms] == [
        ((1,), 1),
        ((1,), 1),
        ((12, -1), 6),
        ((10, -1), 2),
        ((1680, -180, 1), 120),
    ]
    assert [s.pi_power for s in syms] == [1, 3, 5, 7, 9]


def test_symbolic_strings():
    syms = coeff_symbolic(5)
    assert syms[0].as_string() == "1/pi"
    assert syms[1].as_string() == "1/pi^3"
    assert syms[2].as_string() == "(12 - pi^2)/(6*pi^5)"
    assert syms[3].as_string() == "(10 - pi^2)/(2*pi^7)"
    assert syms[4].as_string() == "(1680 - 180*pi^2 + pi^4)/(120*pi^9)"


def test_symbolic_evaluation_agrees_with_numeric_routes():
    syms = coeff_symbolic(8)
    table = coeff_recurrence(8, 50)
    for s, entry in zip(syms, table):
        ev = s.evaluate(60)
        with working(70):
            assert rel_diff(entry.value.value, ev.value) < mpf(10) ** -49
            # the enclosure is tighter than the point evaluation's rounding,
            # so compare within the point value's own error budget
            enc = s.evaluate_interval(60)
            tol = abs(ev.value) * mpf(10) ** -75
            assert enc.lo - tol < ev.value < enc.hi + tol
            assert enc.width < abs(ev.value) * mpf(10) ** -60


# --- Bessel route ----------------------------------------------------------

def test_gamma_half_against_recursion_oracle():
    # oracle: Gamma(x+1) = x Gamma(x) seeded at Gamma(1/2) = sqrt(pi)
    with working(60):
        g = mp.sqrt(mp.pi)
        x = mpf(1) / 2
        for n in range(6):
            got = gamma_half(n, 50)
            assert rel_diff(got.value, g) < mpf(10) ** -49
            g *= x
            x += 1


def test_bessel_j1_equals_half_integer_closed_form():
    # oracle: J_{1/2}(z) = sqrt(2/(pi z)) sin(z); at z = pi/2 gives t_1 = 1/pi
    got = coeff_bessel(1, 50)
    with working(60):
        z = mp.pi / 2
        oracle = mp.sqrt(2 / (mp.pi * z)) * mp.sin(z) / 2
        assert rel_diff(got.value, oracle) < mpf(10) ** -49
        assert rel_diff(got.value, 1 / mp.pi) < mpf(10) ** -49


def test_bessel_j2_matches_symbolic_to_40_digits():
    got = coeff_bessel(2, 50)
    with working(60):
        assert rel_diff(got.value, 1 / mp.pi ** 3) < mpf(10) ** -40


def test_bessel_j10_matches_direct_to_40_digits():
    got = coeff_bessel(10, 50)
    direct, _ = coeff_direct(10, 50)
    assert rel_diff(got.value, direct.value) < mpf(10) ** -40


def test_bessel_j_half_integer_validates_argument():
    with pytest.raises(ValueError):
        bessel_j_half_integer(1, -1, 50)


# --- generalized series ----------------------------------------------------

def test_general_series_specializes_to_coefficients():
    with working(60):
        z = mp.pi ** 2 / 4
        got = general_series_direct(1, z, 50)
        assert rel_diff(got.value, 1 / mp.pi) < mpf(10) ** -49
        got3 = general_series_direct(3, z, 50)
        oracle = (12 - mp.pi ** 2) / (6 * mp.pi ** 5)
        assert rel_diff(got3.value, oracle) < mpf(10) ** -49


def test_general_series_j2_z1_against_brute_force():
    got = general_series_direct(2, 1, 50)
    with working(60):
        oracle = brute_series(2, mpf(1), 30)
        assert rel_diff(got.value, oracle) < mpf(10) ** -49
        assert rel_diff(got.value, mpf(T2_AT_1)) < mpf(10) ** -28


def test_general_series_rejects_nonpositive_z():
    with pytest.raises(ValueError):
        general_series_direct(2, 0, 50)
    with pytest.raises(ValueError):
        general_series_direct(2, -1, 50)
    with pytest.raises(ValueError):
        general_series_recurrence(3, 0, 50)


def test_general_recurrence_matches_direct_at_pi_case():
    with working(60):
        z = mp.pi ** 2 / 4
    vals = general_series_recurrence(5, z, 50)
    table = coeff_recurrence(5, 50)
    for j in range(1, 6):
        assert rel_diff(vals[j - 1].value, table.value(j).value) < mpf(10) ** -45


@pytest.mark.parametrize("z,j_max", [(Fraction(1, 2), 20), (1, 20), (2, 20)])
def test_general_recurrence_matches_direct_at_various_z(z, j_max):
    vals = general_series_recurrence(j_max, z, 50)
    for j in range(1, j_max + 1):
        direct = general_series_direct(j, z, 50)
        assert rel_diff(vals[j - 1].value, direct.value) < mpf(10) ** -40


def test_general_recurrence_matches_direct_at_pi_squared_quarter():
    with working(60):
        z = +(mp.pi ** 2 / 4)
    vals = general_series_recurrence(20, z, 50)
    for j in range(1, 21):
        direct = general_series_direct(j, z, 50)
        assert rel_diff(vals[j - 1].value, direct.value) < mpf(10) ** -40


def test_seed_series_at_zero_of_cosine():
    # T_0(z) = cos(sqrt(z)); at z = pi^2/4 the exact value is 0
    with working(60):
        z = +(mp.pi ** 2 / 4)
    got = general_series_direct(0, z, 50)
    assert abs(got.value) < mpf(10) ** -50


# --- cross-route and bound invariants ---------------------------------------

def test_cross_route_agreement_to_fifty():
    table = coeff_recurrence(50, 50)
    for j in range(1, 51):
        direct, _ = coeff_direct(j, 50)
        via_bessel = coeff_bessel(j, 50)
        assert rel_diff(table.value(j).value, direct.value) < mpf(10) ** -40
        assert rel_diff(via_bessel.value, direct.value) < mpf(10) ** -40


def test_bounds_and_bracket_small_range():
    table = coeff_recurrence(30, 50)
    with working(50):
        for entry in table:
            j = entry.j
            scaled = entry.value.value * mpf(math.factorial(2 * j))
            assert 0 < entry.value.value
            assert scaled < 1
            assert scaled > 1 - mp.pi ** 2 / (8 * (2 * j + 1))


def test_scaled_values_approach_one():
    table = coeff_recurrence(60, 50)
    with working(50):
        s20 = table.value(20).value * mpf(math.factorial(40))
        s60 = table.value(60).value * mpf(math.factorial(120))
        assert s20 < s60 < 1


def test_coefficient_table_routes():
    for route in ("recurrence", "direct", "bessel"):
        table = coefficient_table(4, 50, route=route)
        assert [e.route for e in table] == [route] * 4
        assert all(e.trunc_bound.value < mpf(10) ** -50 * e.value.value for e in table)
