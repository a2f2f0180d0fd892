"""Modified Bessel function I0: power series, integral representations,
an exponentially scaled form, and exact power-series coefficient tables.

All evaluators are pure functions of their arguments.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, NonConvergence

HALF_PI = 0.5 * math.pi
TWO_OVER_PI = 2.0 / math.pi

# Above this argument consumers switch to the scaled form.
LARGE_T = 30.0


@dataclass(frozen=True)
class SeriesConfig:
    tolerance: float = 1e-15
    max_terms: int = 500

    def __post_init__(self):
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss-Legendre: `base_nodes` per panel, panel count doubled
    up to `max_refinements` times until two successive estimates agree to
    `tolerance` (relative)."""

    base_nodes: int = 64
    max_refinements: int = 10
    tolerance: float = 1e-13

    def __post_init__(self):
        if self.base_nodes < 2:
            raise DomainError("base_nodes must be >= 2")
        if self.max_refinements < 0:
            raise DomainError("max_refinements must be >= 0")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")


DEFAULT_SERIES = SeriesConfig()
DEFAULT_QUAD = QuadratureConfig()


@lru_cache(maxsize=16)
def _legendre_rule(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _composite(f, lo, hi, panels, x, w):
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = mid[:, None] + half[:, None] * x[None, :]
    return float(np.sum(half[:, None] * w[None, :] * f(nodes)))


def integrate(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
              cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Integrate a vectorised integrand over [lo, hi].

    Starts from one panel and doubles the panel count; returns the finer of
    the first pair of successive estimates that agree to `cfg.tolerance`.
    """
    x, w = _legendre_rule(cfg.base_nodes)
    prev = _composite(f, lo, hi, 1, x, w)
    panels = 1
    for _ in range(cfg.max_refinements):
        panels *= 2
        cur = _composite(f, lo, hi, panels, x, w)
        if abs(cur - prev) <= cfg.tolerance * abs(cur) or cur == prev:
            return cur
        prev = cur
    raise NonConvergence(
        f"quadrature did not settle after {cfg.max_refinements} refinements"
        f" (last two estimates {prev!r})")


def i0_series(t: float, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """I0(t) = sum_n (t/2)^(2n) / n!^2, truncated once the next term drops
    below `cfg.tolerance` times the partial sum."""
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    x = 0.25 * t * t
    term = 1.0
    total = 1.0
    for n in range(1, cfg.max_terms):
        term *= x / (n * n)
        total += term
        if term < cfg.tolerance * total:
            if not math.isfinite(total):
                raise OverflowError(f"I0({t}) overflows double precision")
            return total
    raise NonConvergence(f"I0 series at t={t} needs more than {cfg.max_terms} terms")


def i0_quadrature(t: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """I0(t) = (2/pi) int_0^{pi/2} cosh(t cos theta) d theta."""
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    t = abs(t)
    if t == 0.0:
        return 1.0
    return TWO_OVER_PI * integrate(lambda th: np.cosh(t * np.cos(th)), 0.0, HALF_PI, cfg)


def i0_scaled(t: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """exp(-t) I0(t) for t >= 0, from (2/pi) int_0^{pi/2} exp(-2t sin^2 theta).

    The integrand stays in (0, 1], so this never overflows.
    """
    if not (t >= 0.0 and math.isfinite(t)):
        raise DomainError(f"i0_scaled needs finite t >= 0, got {t!r}")
    if t == 0.0:
        return 1.0
    return TWO_OVER_PI * integrate(
        lambda th: np.exp(-2.0 * t * np.sin(th) ** 2), 0.0, HALF_PI, cfg)


def i0(t: float) -> float:
    """I0 in double precision; series up to LARGE_T, scaled quadrature above."""
    t = abs(t)
    if t <= LARGE_T:
        return i0_series(t)
    return math.exp(t) * i0_scaled(t)


def i0e(t: float) -> float:
    """exp(-|t|) I0(t), overflow-free for every finite t."""
    t = abs(t)
    if t <= LARGE_T:
        return math.exp(-t) * i0_series(t)
    return i0_scaled(t)


def log_i0(t: float) -> float:
    t = abs(t)
    if t <= LARGE_T:
        return math.log(i0_series(t))
    return t + math.log(i0_scaled(t))


# ---------------------------------------------------------------------------
# exact coefficient tables (coefficient of t^(2n))


class CoeffKind(enum.Enum):
    I0 = "i0"
    I0_SQUARED = "i0-squared"
    I0_FOURTH = "i0-fourth"
    COSH_SINH3 = "cosh-sinh3"
    V_SEQUENCE = "v-sequence"
    SINH2T_OVER_2T = "sinh2t-over-2t"
    SINHC = "sinhc"
    COSH = "cosh"


def _split(c: Fraction) -> tuple[float, int]:
    """c = m * 2**e with m a double near 1, computed without under/overflow."""
    if c == 0:
        return 0.0, 0
    num, den = c.numerator, c.denominator
    e = num.bit_length() - den.bit_length()
    m = num / (den << e) if e >= 0 else (num << -e) / den
    return m, e


@dataclass(frozen=True)
class CoeffTable:
    coefficients: tuple[Fraction, ...]
    kind: CoeffKind

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    @cached_property
    def all_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)

    @cached_property
    def split(self) -> tuple[tuple[float, int], ...]:
        return tuple(_split(c) for c in self.coefficients)

    def to_json(self) -> dict:
        return {"kind": self.kind.value,
                "coefficients": [{"num": c.numerator, "den": c.denominator}
                                 for c in self.coefficients]}

    @classmethod
    def from_json(cls, obj: dict) -> "CoeffTable":
        return cls(tuple(Fraction(int(c["num"]), int(c["den"])) for c in obj["coefficients"]),
                   CoeffKind(obj["kind"]))


def _check_nmax(n_max: int) -> None:
    if n_max < 0:
        raise DomainError("n_max must be >= 0")


def _i0_coefficient(n: int) -> Fraction:
    return Fraction(1, 4 ** n * math.factorial(n) ** 2)


def _cauchy(a: Sequence[Fraction], b: Sequence[Fraction], n_max: int) -> list[Fraction]:
    return [sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(n_max + 1)]


@lru_cache(maxsize=32)
def i0_coeffs(n_max: int) -> CoeffTable:
    _check_nmax(n_max)
    return CoeffTable(tuple(_i0_coefficient(n) for n in range(n_max + 1)), CoeffKind.I0)


@lru_cache(maxsize=32)
def i0_squared_coeffs(n_max: int) -> CoeffTable:
    """Coefficients (2n)! / (2^(2n) n!^4) of I0(t)^2."""
    _check_nmax(n_max)
    return CoeffTable(
        tuple(Fraction(math.factorial(2 * n), 4 ** n * math.factorial(n) ** 4)
              for n in range(n_max + 1)),
        CoeffKind.I0_SQUARED)


def i0_squared_by_convolution(n_max: int) -> list[Fraction]:
    """Cauchy self-product of the I0 coefficients (independent of the closed form)."""
    a = i0_coeffs(n_max).coefficients
    return _cauchy(a, a, n_max)


@lru_cache(maxsize=32)
def i0_fourth_coeffs(n_max: int) -> CoeffTable:
    """Coefficients sum_k u_{n,k} of I0(t)^4, the self-product of the I0^2 table."""
    sq = i0_squared_coeffs(n_max).coefficients
    return CoeffTable(tuple(_cauchy(sq, sq, n_max)), CoeffKind.I0_FOURTH)


@lru_cache(maxsize=32)
def cosh_sinh3_coeffs(n_max: int) -> CoeffTable:
    """Coefficients (2^(4n+3) - 2^(2n+1)) / (2n+3)! of cosh(t) (sinh(t)/t)^3."""
    _check_nmax(n_max)
    return CoeffTable(
        tuple(Fraction(2 ** (4 * n + 3) - 2 ** (2 * n + 1), math.factorial(2 * n + 3))
              for n in range(n_max + 1)),
        CoeffKind.COSH_SINH3)


@lru_cache(maxsize=32)
def v_sequence(n_max: int) -> CoeffTable:
    """v_n: coefficient gap between I0^4 and cosh(t)(sinh(t)/t)^3; all >= 0."""
    four = i0_fourth_coeffs(n_max).coefficients
    ref = cosh_sinh3_coeffs(n_max).coefficients
    return CoeffTable(tuple(u - r for u, r in zip(four, ref)), CoeffKind.V_SEQUENCE)


@lru_cache(maxsize=32)
def sinh2t_over_2t_coeffs(n_max: int) -> CoeffTable:
    _check_nmax(n_max)
    return CoeffTable(tuple(Fraction(4 ** n, math.factorial(2 * n + 1)) for n in range(n_max + 1)),
                      CoeffKind.SINH2T_OVER_2T)


@lru_cache(maxsize=32)
def sinhc_coeffs(n_max: int) -> CoeffTable:
    _check_nmax(n_max)
    return CoeffTable(tuple(Fraction(1, math.factorial(2 * n + 1)) for n in range(n_max + 1)),
                      CoeffKind.SINHC)


@lru_cache(maxsize=32)
def cosh_coeffs(n_max: int) -> CoeffTable:
    _check_nmax(n_max)
    return CoeffTable(tuple(Fraction(1, math.factorial(2 * n)) for n in range(n_max + 1)),
                      CoeffKind.COSH)


COEFF_TABLES: dict[str, Callable[[int], CoeffTable]] = {
    CoeffKind.I0.value: i0_coeffs,
    CoeffKind.I0_SQUARED.value: i0_squared_coeffs,
    CoeffKind.I0_FOURTH.value: i0_fourth_coeffs,
    CoeffKind.COSH_SINH3.value: cosh_sinh3_coeffs,
    CoeffKind.V_SEQUENCE.value: v_sequence,
    CoeffKind.SINH2T_OVER_2T.value: sinh2t_over_2t_coeffs,
    CoeffKind.SINHC.value: sinhc_coeffs,
    CoeffKind.COSH.value: cosh_coeffs,
}


def evaluate_series(table: CoeffTable, t: float,
                    cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """sum_n c_n t^(2n) in double precision."""
    return _sum_pair(table, None, t, cfg)[0]


def power_series_ratio(numer: CoeffTable, denom: CoeffTable, t: float,
                       cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """(sum a_n t^(2n)) / (sum b_n t^(2n)), both series truncated together.

    Coefficients and powers are carried as (mantissa, exponent) pairs so very
    small coefficients times very large powers stay representable.
    """
    if not denom.all_positive:
        raise DomainError("denominator coefficients must all be positive")
    num, den = _sum_pair(numer, denom, t, cfg)
    return num / den


def _sum_pair(a: CoeffTable, b: CoeffTable | None, t: float, cfg: SeriesConfig):
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    x = t * t
    if x == 0.0:
        return float(a[0]), (float(b[0]) if b is not None else 1.0)
    xm, xe = math.frexp(x)
    pm, pe = 1.0, 0  # x**n as pm * 2**pe
    sa = sb = 0.0
    prev_a = prev_b = math.inf
    n_avail = min(len(a), len(b)) if b is not None else len(a)
    sa_split = a.split
    sb_split = b.split if b is not None else None
    for n in range(min(n_avail, cfg.max_terms)):
        m, e = sa_split[n]
        ta = math.ldexp(m * pm, e + pe)
        sa += ta
        done_a = abs(ta) <= cfg.tolerance * abs(sa) and abs(ta) <= prev_a and sa != 0.0
        prev_a = abs(ta)
        if sb_split is not None:
            m, e = sb_split[n]
            tb = math.ldexp(m * pm, e + pe)
            sb += tb
            done_b = tb <= cfg.tolerance * sb and tb <= prev_b
            prev_b = tb
        else:
            done_b = True
        if n > 0 and done_a and done_b:
            return sa, (sb if b is not None else 1.0)
        pm, de = math.frexp(pm * xm)
        pe += de + xe
    raise NonConvergence(
        f"power series at t={t} not converged within {n_avail} available coefficients")
