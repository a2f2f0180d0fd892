"""Ratio functions R0..R4 and the solvers for the sharp constants t0, delta0
and lambda0(p).

Each ratio is a quotient of two even power series with positive
coefficients. Evaluation uses three regimes:

* t < SMALL_T: three leading terms of both series;
* SMALL_T <= t <= LARGE_T: full series with exact coefficients (no
  cancellation, every term is positive);
* t > LARGE_T: closed forms divided through by e^t or e^{2t}, with
  e^{-t} I0(t) from the scaled quadrature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import special
from .errors import DomainError, NonConvergence
from .special import CoeffKind, CoeffTable

SMALL_T = 1e-3
LARGE_T = special.LARGE_T
SQRT3_2 = math.sqrt(3.0) / 2.0
_N_TERMS = 400
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

LIMITS_AT_ZERO = {"R0": 1.0, "R1": 2.0 / 3.0, "R2": 0.75, "R3": 0.5, "R4": 1.0}


@dataclass(frozen=True)
class RatioFunction:
    """One of R0..R4; `param` is p for R3 and theta for R4."""

    id: str
    param: float | None = None

    def __post_init__(self):
        if self.id not in LIMITS_AT_ZERO:
            raise DomainError(f"unknown ratio function {self.id!r}")
        if self.id in ("R3", "R4") and self.param is None:
            raise DomainError(f"{self.id} needs a parameter")
        if self.id == "R3" and not self.param > 0:
            raise DomainError("R3 needs p > 0")

    def __call__(self, t: float) -> float:
        return ratio_eval(self, t)

    def __str__(self):
        return self.id if self.param is None else f"{self.id}({self.param:g})"


R0 = RatioFunction("R0")
R1 = RatioFunction("R1")
R2 = RatioFunction("R2")


def R3(p: float) -> RatioFunction:
    return RatioFunction("R3", float(p))


def R4(theta: float) -> RatioFunction:
    return RatioFunction("R4", float(theta))


@dataclass(frozen=True)
class SolverResult:
    location: float
    value: float
    residual: float
    iterations: int
    converged: bool

    def to_json(self) -> dict:
        return {"location": self.location, "value": self.value, "residual": self.residual,
                "iterations": self.iterations, "converged": self.converged}


# ---------------------------------------------------------------------------
# coefficient tables of numerator and denominator (index n <-> t^(2n))


@lru_cache(maxsize=64)
def coefficient_tables(fn: RatioFunction) -> tuple[CoeffTable, CoeffTable]:
    """Exact (numerator, denominator) tables; R1..R3 have t^2 factored out."""
    n = _N_TERMS
    f = math.factorial
    if fn.id == "R0":
        return special.i0_squared_coeffs(n), special.sinh2t_over_2t_coeffs(n)
    if fn.id == "R1":
        sq = special.i0_squared_coeffs(n + 1).coefficients
        num = [sq[k] - Fraction(1, f(2 * k + 1)) for k in range(1, n + 2)]
        den = [Fraction(4 ** k - 1, f(2 * k + 1)) for k in range(1, n + 2)]
    elif fn.id == "R2":
        i0c = special.i0_coeffs(n + 1).coefficients
        num = [Fraction(1, f(2 * k)) - i0c[k] for k in range(1, n + 2)]
        den = [Fraction(2 * k, f(2 * k + 1)) for k in range(1, n + 2)]
    elif fn.id == "R3":
        p2 = Fraction(fn.param) ** 2
        i0c = special.i0_coeffs(n + 1).coefficients
        num = list(i0c[1:])
        den = [p2 ** (k - 1) / f(2 * k) for k in range(1, n + 2)]
    else:
        c2 = Fraction(math.cos(fn.param)) ** 2
        s2 = Fraction(math.sin(fn.param)) ** 2
        num = [(c2 ** k + s2 ** k) / f(2 * k) for k in range(n + 1)]
        den = [2 * c for c in special.i0_coeffs(n).coefficients]
    kind = CoeffKind.SINHC  # tag only; these tables are ratio-specific
    return CoeffTable(tuple(num), kind), CoeffTable(tuple(den), kind)


@lru_cache(maxsize=64)
def _leading(fn: RatioFunction):
    num, den = coefficient_tables(fn)
    return [float(c) for c in num[:3]], [float(c) for c in den[:3]]


def _scaled_form(fn: RatioFunction, t: float) -> float:
    s = special.i0_scaled(t)          # e^{-t} I0(t)
    e1 = math.exp(-t)
    e2 = e1 * e1
    if fn.id == "R0":
        return s * s * 4.0 * t / (1.0 - e2 * e2)
    sinhc = (1.0 - e2) / (2.0 * t)    # e^{-t} sinh(t)/t
    coshs = 0.5 * (1.0 + e2)          # e^{-t} cosh t
    if fn.id == "R1":
        return (s * s - e1 * sinhc) / ((coshs - e1) * sinhc)
    if fn.id == "R2":
        return (coshs - s) / (coshs - sinhc)
    if fn.id == "R3":
        p = fn.param
        chp = 0.5 * (math.exp((p - 1.0) * t) + math.exp(-(p + 1.0) * t))  # e^{-t} cosh pt
        return (s - e1) * p * p / (chp - e1)
    c, sn = math.cos(fn.param), math.sin(fn.param)
    num = (math.exp(t * (c - 1.0)) + math.exp(-t * (c + 1.0))
           + math.exp(t * (sn - 1.0)) + math.exp(-t * (sn + 1.0)))
    return 0.25 * num / s


def ratio_eval(fn: RatioFunction, t: float) -> float:
    if not (t >= 0 and math.isfinite(t)):
        raise DomainError(f"ratio functions need finite t >= 0, got {t!r}")
    if t == 0.0:
        return LIMITS_AT_ZERO[fn.id]
    if t < SMALL_T:
        a, b = _leading(fn)
        x = t * t
        return (a[0] + x * (a[1] + x * a[2])) / (b[0] + x * (b[1] + x * b[2]))
    if t <= LARGE_T:
        num, den = coefficient_tables(fn)
        return special.power_series_ratio(num, den, t)
    return _scaled_form(fn, t)


# ---------------------------------------------------------------------------
# solvers


def _log_grid(lo, hi, n):
    return [float(x) for x in np.geomspace(lo, hi, n)]


def golden_section(f, lo: float, hi: float, tol: float, maximize: bool = False,
                   max_iter: int = 500) -> SolverResult:
    """Golden-section search for an interior extremum of a unimodal f on [lo, hi]."""
    sign = -1.0 if maximize else 1.0
    g = lambda x: sign * f(x)
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = g(x1), g(x2)
    it = 0
    while hi - lo > tol and it < max_iter:
        it += 1
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = g(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = g(x2)
    x = x1 if f1 <= f2 else x2
    width = hi - lo
    return SolverResult(x, f(x), width, it, width <= tol)


def _bracket(f, grid, maximize):
    vals = [f(t) for t in grid]
    idx = int(np.argmax(vals) if maximize else np.argmin(vals))
    return idx, vals


def find_t0_delta0(tol: float = 1e-10) -> SolverResult:
    """Interior maximiser t0 of R1 and the maximum delta0 = R1(t0)."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    grid = _log_grid(1e-3, 50.0, 100)
    idx, _ = _bracket(R1, grid, maximize=True)
    if idx in (0, len(grid) - 1):
        raise NonConvergence("R1 maximum not interior to the scan window")
    res = golden_section(R1, grid[idx - 1], grid[idx + 1], tol, maximize=True)
    if not res.converged:
        raise NonConvergence(f"golden section stopped with bracket {res.residual}")
    return res


def find_lambda0(p: float, tol: float = 1e-10) -> SolverResult:
    """Interior minimiser t0(p) of R3(., p) and lambda0(p) = R3(t0(p), p),
    for p in (sqrt(3)/2, 1)."""
    if not (SQRT3_2 < p < 1.0):
        raise DomainError(f"lambda0 is defined for p in (sqrt(3)/2, 1), got {p!r}")
    if not tol > 0:
        raise DomainError("tol must be positive")
    fn = R3(p)
    hi = 50.0
    # the minimiser drifts to large t as p -> 1; widen the window until it is interior
    while True:
        grid = _log_grid(1e-3, hi, 100)
        idx, _ = _bracket(fn, grid, maximize=False)
        if 0 < idx < len(grid) - 1:
            break
        if idx == 0:
            grid = [0.5 * SMALL_T] + grid
            idx = 1
            break
        if hi > 1e5:
            raise NonConvergence(f"R3 minimum for p={p} lies beyond t={hi}")
        hi *= 8.0
    res = golden_section(fn, grid[idx - 1], grid[idx + 1], tol)
    if not res.converged:
        raise NonConvergence(f"golden section stopped with bracket {res.residual}")
    return res


@dataclass(frozen=True)
class ScanReport:
    function: str
    shape: str                 # increasing | decreasing | unimodal-up | unimodal-down | irregular
    turning_index: int | None
    turning_point: float | None
    sign_changes: int


def monotonicity_scan(fn, grid) -> ScanReport:
    """Classify a sampled function by the signs of its successive differences."""
    grid = [float(t) for t in grid]
    if any(t <= 0 for t in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("grid must be positive and strictly increasing")
    vals = [fn(t) for t in grid]
    signs = [(d > 0) - (d < 0) for d in (b - a for a, b in zip(vals, vals[1:]))]
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    name = str(fn)
    if 0 in signs:
        return ScanReport(name, "irregular", None, None, changes)
    if changes == 0:
        return ScanReport(name, "increasing" if signs[0] > 0 else "decreasing", None, None, 0)
    if changes == 1:
        k = next(i for i in range(1, len(signs)) if signs[i] != signs[i - 1])
        shape = "unimodal-up" if signs[0] > 0 else "unimodal-down"
        return ScanReport(name, shape, k, grid[k], 1)
    return ScanReport(name, "irregular", None, None, changes)
