"""Independent reference computations used by the tests.

Nothing here calls into toaderqi: each oracle takes a different route
(mpmath special functions, brute-force quadrature, exact rational sums).
"""
from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np


def i0_partial_sum(t: float, terms: int = 30) -> float:
    """Exact-rational partial sum of I0 at a rational t, rounded once."""
    x = Fraction(t) ** 2 / 4
    total, term = Fraction(0), Fraction(1)
    for n in range(terms):
        total += term
        term = term * x / ((n + 1) ** 2)
    return float(total)


def i0_mp(t, dps: int = 40):
    with mpmath.workdps(dps):
        return mpmath.besseli(0, t)


def agm_mp(a, b, dps: int = 40):
    with mpmath.workdps(dps):
        return mpmath.agm(a, b)


def agm_by_quadrature(a: float, b: float) -> float:
    """AGM(a, b) = (pi/2) / int_0^{pi/2} (a^2 cos^2 + b^2 sin^2)^(-1/2)."""
    with mpmath.workdps(30):
        f = lambda th: 1 / mpmath.sqrt(a * a * mpmath.cos(th) ** 2 + b * b * mpmath.sin(th) ** 2)
        return float(mpmath.pi / 2 / mpmath.quad(f, [0, mpmath.pi / 2]))


def toader_trapezoid(a: float, b: float, n: int = 1_000_000) -> float:
    """Brute-force trapezoid rule for (2/pi) int sqrt(a^2 cos^2 + b^2 sin^2)."""
    th = np.linspace(0.0, math.pi / 2, n + 1)
    y = np.sqrt(a * a * np.cos(th) ** 2 + b * b * np.sin(th) ** 2)
    h = th[1] - th[0]
    return float((2 / math.pi) * h * (y.sum() - 0.5 * (y[0] + y[-1])))


def toader_elliptic(a: float, b: float, dps: int = 30) -> float:
    lo, hi = min(a, b), max(a, b)
    with mpmath.workdps(dps):
        m = 1 - (mpmath.mpf(lo) / hi) ** 2
        return float(hi * 2 / mpmath.pi * mpmath.ellipe(m))


def cauchy_square(coeffs: list[Fraction], n_max: int) -> list[Fraction]:
    return [sum(coeffs[k] * coeffs[n - k] for k in range(n + 1)) for n in range(n_max + 1)]


def i0_coefficients(n_max: int) -> list[Fraction]:
    return [Fraction(1, 4 ** n * math.factorial(n) ** 2) for n in range(n_max + 1)]


def r1_mp(t, dps: int | None = 50):
    """R1 in mpmath; dps=None keeps the caller's working precision."""
    if dps is None:
        t = mpmath.mpf(t)
        i0 = mpmath.besseli(0, t)
        s = mpmath.sinh(t) / t
        return (i0 * i0 - s) / ((mpmath.cosh(t) - 1) * s)
    with mpmath.workdps(dps):
        return r1_mp(t, None)


def t0_mp():
    """Maximiser of R1 as the root of its numerical derivative, at 40 digits."""
    with mpmath.workdps(40):
        return mpmath.findroot(lambda t: mpmath.diff(lambda x: r1_mp(x, None), t), mpmath.mpf("2.7"))
