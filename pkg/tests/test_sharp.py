import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from toaderqi import sharp, special
from toaderqi.errors import DomainError
from toaderqi.sharp import R0, R1, R2, R3, R4

import oracles

TWO_OVER_PI = 2 / math.pi


def test_limits_at_zero():
    assert R1(0.0) == pytest.approx(2 / 3) and R1(1e-6) == pytest.approx(2 / 3, rel=1e-10)
    assert R2(1e-6) == pytest.approx(0.75, rel=1e-10)
    assert R0(1e-6) == pytest.approx(1.0, rel=1e-10)


def test_limits_at_infinity():
    assert abs(R0(500.0) - TWO_OVER_PI) < 2e-3
    assert abs(R1(500.0) - TWO_OVER_PI) < 2e-3
    assert TWO_OVER_PI < R0(10.0) < 1


@pytest.mark.parametrize("t", [1e-6, 1e-3, 0.5, 2.7, 10.0, 29.0, 31.0, 80.0])
def test_r1_against_multiprecision(t):
    assert R1(t) == pytest.approx(float(oracles.r1_mp(t)), rel=1e-12)


def test_cancellation_near_zero():
    # direct double-precision evaluation loses everything here; the series route does not
    for t in (1e-6, 3e-6, 1e-5):
        assert R1(t) == pytest.approx(float(oracles.r1_mp(t)), rel=1e-13)


def test_t0_delta0():
    res = sharp.find_t0_delta0()
    assert res.converged
    assert abs(res.location - 2.7113555314) < 1e-6
    assert abs(res.value - 0.67664) < 5e-5
    assert res.location == pytest.approx(float(oracles.t0_mp()), abs=1e-7)
    for dt in (-1, -0.1, 0.1, 1):
        assert R1(res.location) >= R1(res.location + dt)


def test_solver_is_deterministic_and_residual_below_tolerance():
    a, b = sharp.find_t0_delta0(1e-9), sharp.find_t0_delta0(1e-9)
    assert a == b
    assert a.converged and a.residual < 1e-9


def test_lambda0_boundary():
    res = sharp.find_lambda0(math.sqrt(3) / 2 + 1e-4)
    assert 0.49 < res.value < 0.5


def test_lambda0_bound_holds_on_grid():
    p = 0.9
    lam = sharp.find_lambda0(p).value
    c = lam / p ** 2
    for t in np.linspace(1e-3, 50, 1000):
        assert 1 - c + c * math.cosh(p * t) <= special.i0(t) * (1 + 1e-14)


def test_lambda0_interior_minimiser():
    res = sharp.find_lambda0(0.95)
    assert res.converged and 0 < res.location < math.inf
    assert R3(0.95)(res.location) <= min(R3(0.95)(res.location * 0.9), R3(0.95)(res.location * 1.1))


@settings(max_examples=15)
@given(st.floats(min_value=0.867, max_value=0.995))
def test_lambda0_converges_with_small_residual(p):
    res = sharp.find_lambda0(p, 1e-8)
    assert res.converged and res.residual < 1e-8
    assert 0 < res.value < 0.5


def test_lambda0_domain():
    for p in (0.5, math.sqrt(3) / 2, 1.0):
        with pytest.raises(DomainError):
            sharp.find_lambda0(p)
    with pytest.raises(DomainError):
        sharp.find_t0_delta0(0.0)


def test_monotonicity_suite():
    grid = np.geomspace(1e-2, 50, 200)
    assert sharp.monotonicity_scan(R0, grid).shape == "decreasing"
    assert sharp.monotonicity_scan(R2, grid).shape == "increasing"
    rep = sharp.monotonicity_scan(R1, grid)
    assert rep.shape == "unimodal-up"
    assert rep.turning_point == pytest.approx(2.711, abs=0.15)


def test_theta_ratio_at_lower_endpoint():
    fn = R4(math.pi / 8)
    vals = [fn(t) for t in np.linspace(0.1, 20, 200)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert all(v < 1 for v in vals)
    # below 0.1 the deficit is O(t^8) and invisible in double precision; check with mpmath
    with mpmath.workdps(50):
        t = mpmath.mpf("0.05")
        th = mpmath.pi / 8
        v = (mpmath.cosh(t * mpmath.cos(th)) + mpmath.cosh(t * mpmath.sin(th))) / (2 * mpmath.besseli(0, t))
        assert v < 1


def test_ratio_function_validation():
    with pytest.raises(DomainError):
        sharp.RatioFunction("R9")
    with pytest.raises(DomainError):
        sharp.RatioFunction("R3")
    with pytest.raises(DomainError):
        R3(-1.0)
    with pytest.raises(DomainError):
        R1(-1.0)
    with pytest.raises(DomainError):
        sharp.monotonicity_scan(R0, [1.0, 0.5])


def test_scaled_and_series_regimes_join():
    for fn in (R0, R1, R2, R3(0.9), R4(math.pi / 6)):
        lo, hi = fn(sharp.LARGE_T), fn(math.nextafter(sharp.LARGE_T, math.inf))
        assert lo == pytest.approx(hi, rel=1e-12)
        a, b = fn(sharp.SMALL_T), fn(math.nextafter(sharp.SMALL_T, 0))
        assert a == pytest.approx(b, rel=1e-12)
