import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from toaderqi import special
from toaderqi.errors import DomainError, NonConvergence
from toaderqi.special import CoeffKind, CoeffTable, QuadratureConfig, SeriesConfig

import oracles

pos_t = st.floats(min_value=1e-8, max_value=30.0, allow_nan=False)


def test_i0_at_zero_is_one():
    assert special.i0_series(0.0) == 1.0
    assert special.i0_quadrature(0.0) == 1.0


def test_i0_one_matches_exact_partial_sum():
    assert special.i0_series(1.0) == pytest.approx(oracles.i0_partial_sum(1.0), rel=1e-15)
    assert special.i0_series(1.0) == pytest.approx(float(oracles.i0_mp(1)), rel=1e-15)


@pytest.mark.parametrize("t", [1e-6, 0.3, 1.0, 2.5, 7.0, 15.0, 29.9])
def test_i0_series_against_mpmath(t):
    assert special.i0_series(t) == pytest.approx(float(oracles.i0_mp(t)), rel=2e-15)


def test_series_and_quadrature_agree_on_log_grid():
    for t in np.geomspace(1e-6, 30.0, 100):
        s, q = special.i0_series(t), special.i0_quadrature(t)
        assert abs(s - q) / s < 1e-12, t


@given(pos_t)
def test_i0_strictly_between_one_and_cosh(t):
    v = special.i0(t)
    assert 1.0 <= v <= math.cosh(t)
    if t > 1e-4:
        assert 1.0 < v < math.cosh(t)


@given(st.floats(min_value=-30, max_value=30, allow_nan=False))
def test_i0_is_even(t):
    assert special.i0_series(t) == special.i0_series(-t)
    assert special.i0_quadrature(t) == pytest.approx(special.i0_quadrature(-t), rel=1e-15)


@given(st.floats(min_value=0.0, max_value=25.0, allow_nan=False))
def test_scaled_form_consistent_with_series(t):
    assert special.i0_scaled(t) == pytest.approx(math.exp(-t) * special.i0_series(t), rel=1e-10)


def test_scaled_asymptotics_at_500():
    assert abs(math.sqrt(500) * special.i0_scaled(500.0) - 1 / math.sqrt(2 * math.pi)) < 1e-3
    ref = float(mpmath.besseli(0, 500) * mpmath.exp(-500))
    assert special.i0_scaled(500.0) == pytest.approx(ref, rel=1e-12)


def test_large_argument_helpers():
    ref = mpmath.besseli(0, 100)
    assert special.i0(100.0) == pytest.approx(float(ref), rel=1e-12)
    assert special.log_i0(800.0) == pytest.approx(float(mpmath.log(mpmath.besseli(0, 800))), rel=1e-13)
    assert special.i0e(800.0) == pytest.approx(float(mpmath.besseli(0, 800) * mpmath.exp(-800)), rel=1e-12)


def test_series_overflow_is_reported():
    with pytest.raises(OverflowError):
        special.i0_series(800.0)


def test_i0_squared_equals_cauchy_convolution():
    table = special.i0_squared_coeffs(50).coefficients
    assert list(table) == oracles.cauchy_square(oracles.i0_coefficients(50), 50)
    assert list(table) == special.i0_squared_by_convolution(50)


def test_i0_squared_closed_form_is_binomial():
    # [t^2n] I0^2 = C(2n, n) / (4^n n!^2)
    for n, c in enumerate(special.i0_squared_coeffs(30).coefficients):
        assert c == Fraction(math.comb(2 * n, n), 4 ** n * math.factorial(n) ** 2)


def test_i0_fourth_truncation_at_point_three():
    table = special.i0_fourth_coeffs(20)
    approx = special.evaluate_series(table, 0.3)
    assert approx == pytest.approx(float(oracles.i0_mp(0.3) ** 4), rel=1e-15)


def test_v_sequence_nonnegative_with_two_zeros():
    v = special.v_sequence(60).coefficients
    assert v[0] == v[1] == 0
    assert v[2] == Fraction(3, 80) and v[3] == Fraction(4, 189)
    assert all(c > 0 for c in v[2:])


def test_coefficient_ratio_monotone():
    num, den = special.i0_squared_coeffs(400), special.sinh2t_over_2t_coeffs(400)
    vals = [special.power_series_ratio(num, den, t) for t in np.linspace(0.1, 20.0, 200)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_power_series_ratio_rejects_nonpositive_denominator():
    with pytest.raises(DomainError):
        special.power_series_ratio(special.i0_coeffs(5), special.v_sequence(5), 1.0)


def test_coeff_table_json_roundtrip():
    table = special.cosh_sinh3_coeffs(12)
    assert CoeffTable.from_json(table.to_json()) == table
    assert table.kind is CoeffKind.COSH_SINH3


@pytest.mark.parametrize("kind", sorted(special.COEFF_TABLES))
def test_tables_have_requested_length(kind):
    assert len(special.COEFF_TABLES[kind](7)) == 8


def test_negative_nmax_rejected():
    with pytest.raises(DomainError):
        special.i0_coeffs(-1)


def test_config_validation():
    with pytest.raises(DomainError):
        SeriesConfig(tolerance=0)
    with pytest.raises(DomainError):
        SeriesConfig(max_terms=0)
    with pytest.raises(DomainError):
        QuadratureConfig(base_nodes=1)
    with pytest.raises(DomainError):
        QuadratureConfig(max_refinements=-1)
    with pytest.raises(DomainError):
        QuadratureConfig(tolerance=-1e-3)


def test_series_nonconvergence():
    with pytest.raises(NonConvergence):
        special.i0_series(20.0, SeriesConfig(max_terms=5))


def test_non_finite_inputs_rejected():
    for f in (special.i0_series, special.i0_quadrature, special.i0_scaled):
        with pytest.raises(DomainError):
            f(math.nan)
    with pytest.raises(DomainError):
        special.i0_scaled(-1.0)
