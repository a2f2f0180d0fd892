"""Bivariate means, their p-order transforms and their hyperbolic reductions.

Every mean here is symmetric and homogeneous of degree one, so
M(a, b) = sqrt(ab) * f(t) with t = (1/2) ln(b/a); `hyperbolic_form` returns f.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special
from .errors import ConsistencyError, DomainError, UnsupportedKind
from .special import DEFAULT_QUAD, QuadratureConfig

# below this |ln(b/a)| the logarithmic and identric means use expansions in t
NEAR_DIAGONAL = 1e-8


@dataclass(frozen=True)
class PositivePair:
    a: float
    b: float

    def __post_init__(self):
        for v in (self.a, self.b):
            if not (v > 0 and math.isfinite(v)):
                raise DomainError(f"mean arguments must be finite and > 0, got {self.a!r}, {self.b!r}")

    @property
    def half_log(self) -> "HalfLogParam":
        return HalfLogParam.from_pair(self)


@dataclass(frozen=True)
class HalfLogParam:
    t: float

    @classmethod
    def from_pair(cls, pair: PositivePair) -> "HalfLogParam":
        return cls(0.5 * log_ratio(pair.a, pair.b))


@dataclass(frozen=True)
class MeanKind:
    """A mean family member; `p` is only meaningful for power means."""

    name: str
    p: float | None = None

    def __str__(self):
        if self.name == "power":
            return f"power:{self.p!r}"
        return self.name

    @classmethod
    def parse(cls, text: str) -> "MeanKind":
        key = text.strip().lower()
        if key.startswith(("power:", "power=")):
            return power(float(key[6:]))
        try:
            return _BY_NAME[key]
        except KeyError:
            raise UnsupportedKind(f"unknown mean kind {text!r}") from None


GEOMETRIC = MeanKind("geometric")
ARITHMETIC = MeanKind("arithmetic")
LOGARITHMIC = MeanKind("logarithmic")
IDENTRIC = MeanKind("identric")
AGM = MeanKind("agm")
TOADER = MeanKind("toader")
TOADER_QI = MeanKind("toader-qi")

ALL_KINDS = (GEOMETRIC, ARITHMETIC, LOGARITHMIC, IDENTRIC, AGM, TOADER, TOADER_QI)
_BY_NAME = {k.name: k for k in ALL_KINDS}
_BY_NAME.update({"g": GEOMETRIC, "a": ARITHMETIC, "l": LOGARITHMIC, "i": IDENTRIC,
                 "tq": TOADER_QI, "t": TOADER})


def power(p: float) -> MeanKind:
    """Power mean of order p; order 0 is the geometric mean."""
    if p == 0:
        return GEOMETRIC
    if p == 1:
        return ARITHMETIC
    return MeanKind("power", float(p))


def _pair(pair) -> PositivePair:
    if isinstance(pair, PositivePair):
        return pair
    a, b = pair
    return PositivePair(float(a), float(b))


def log_ratio(a: float, b: float) -> float:
    """ln(b/a) without the cancellation of log(b) - log(a) near a == b."""
    if a == b:
        return 0.0
    lo, hi = (a, b) if a < b else (b, a)
    r = hi / lo
    u = math.log1p((hi - lo) / lo) if r < 2.0 else math.log(hi) - math.log(lo)
    return u if b > a else -u


def _sinhc_small(t):
    t2 = t * t
    return 1.0 + t2 / 6.0 * (1.0 + t2 / 20.0 * (1.0 + t2 / 42.0))


def _tcoth_minus_one_small(t):
    # t coth t - 1 = t^2/3 - t^4/45 + 2 t^6/945 - t^8/4725
    t2 = t * t
    return t2 * (1.0 / 3.0 - t2 * (1.0 / 45.0 - t2 * (2.0 / 945.0 - t2 / 4725.0)))


def geometric(a, b):
    return math.sqrt(a) * math.sqrt(b)


def arithmetic(a, b):
    return 0.5 * a + 0.5 * b


def power_mean(p, a, b):
    if p == 0:
        return geometric(a, b)
    hi, lo = max(a, b), min(a, b)
    if p > 0:
        return hi * (0.5 * (1.0 + (lo / hi) ** p)) ** (1.0 / p)
    return lo * (0.5 * (1.0 + (hi / lo) ** p)) ** (1.0 / p)


def logarithmic(a, b):
    if a == b:
        return a
    u = log_ratio(a, b)
    if abs(u) < NEAR_DIAGONAL:
        return geometric(a, b) * _sinhc_small(0.5 * u)
    return (b - a) / u


def identric(a, b):
    if a == b:
        return a
    lo, hi = (a, b) if a < b else (b, a)
    u = log_ratio(lo, hi)
    if u < NEAR_DIAGONAL:
        return geometric(a, b) * math.exp(_tcoth_minus_one_small(0.5 * u))
    # ln I = (hi ln hi - lo ln lo)/(hi - lo) - 1 = ln hi + lo*u/(hi - lo) - 1;
    # lo*u <= hi - lo keeps the exponent in [-1, 0]
    return hi * math.exp(lo * u / (hi - lo) - 1.0)


def _agm_iterate(a, b, tol, sqrt=math.sqrt, max_iter=64):
    for _ in range(max_iter):
        if abs(a - b) <= tol * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), sqrt(a * b)
    return 0.5 * (a + b)


def agm(pair, tol: float = 1e-15) -> float:
    """Gauss arithmetic-geometric mean by the coupled iteration."""
    pair = _pair(pair)
    # homogeneous; scaling by the larger argument keeps a*b in range
    hi = max(pair.a, pair.b)
    return hi * _agm_iterate(pair.a / hi, pair.b / hi, tol)


def toader_mean(pair, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """(2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2) d theta by quadrature."""
    pair = _pair(pair)
    a, b = pair.a, pair.b
    if a == b:
        return a
    scale = max(a, b)
    x, y = a / scale, b / scale
    val = special.integrate(
        lambda th: np.hypot(x * np.cos(th), y * np.sin(th)), 0.0, special.HALF_PI, cfg)
    return scale * special.TWO_OVER_PI * val


def tq_quadrature(pair, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Toader-Qi mean straight from its integral (2/pi) int a^{cos^2} b^{sin^2}."""
    pair = _pair(pair)
    a, b = pair.a, pair.b
    g = geometric(a, b)
    t = 0.5 * log_ratio(a, b)
    # a^{cos^2} b^{sin^2} = sqrt(ab) exp(-t cos 2 theta)
    val = special.integrate(lambda th: np.exp(-t * np.cos(2.0 * th)), 0.0, special.HALF_PI, cfg)
    return g * special.TWO_OVER_PI * val


def tq_mean(pair, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Toader-Qi mean as sqrt(ab) I0(t), cross-checked against direct quadrature."""
    pair = _pair(pair)
    g = geometric(pair.a, pair.b)
    t = 0.5 * log_ratio(pair.a, pair.b)
    if abs(t) <= special.LARGE_T:
        value = g * special.i0_series(t)
    else:
        value = g * math.exp(abs(t)) * special.i0_scaled(abs(t), cfg)
    if math.isfinite(value):
        direct = tq_quadrature(pair, cfg)
        if abs(direct - value) > 100 * cfg.tolerance * value:
            raise ConsistencyError(
                f"TQ{(pair.a, pair.b)}: identity route {value!r} vs quadrature {direct!r}")
    return value


def evaluate(kind: MeanKind, pair, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    pair = _pair(pair)
    a, b = pair.a, pair.b
    name = kind.name
    if name == "geometric":
        return geometric(a, b)
    if name == "arithmetic":
        return arithmetic(a, b)
    if name == "power":
        return power_mean(kind.p, a, b)
    if name == "logarithmic":
        return logarithmic(a, b)
    if name == "identric":
        return identric(a, b)
    if name == "agm":
        return agm(pair)
    if name == "toader":
        return toader_mean(pair, cfg)
    if name == "toader-qi":
        return tq_mean(pair, cfg)
    raise UnsupportedKind(f"no evaluator for {kind}")


def p_order(kind: MeanKind, p: float, pair, cfg: QuadratureConfig = DEFAULT_QUAD) -> float:
    """M_p(a, b) = M(a^p, b^p)^(1/p)."""
    if p == 0:
        raise DomainError("p-order transform needs p != 0")
    pair = _pair(pair)
    # normalise by the geometric mean first; M is homogeneous
    g = geometric(pair.a, pair.b)
    inner = evaluate(kind, ((pair.a / g) ** p, (pair.b / g) ** p), cfg)
    return g * inner ** (1.0 / p)


def hyperbolic_form(kind: MeanKind, t) -> float:
    """M(e^-t, e^t): the mean divided by sqrt(ab) as a function of t."""
    if isinstance(t, HalfLogParam):
        t = t.t
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    name = kind.name
    if name == "geometric":
        return 1.0
    if name == "arithmetic":
        return math.cosh(t)
    if name == "power":
        p = kind.p
        if p < 0:
            return math.cosh(p * t) ** (1.0 / p)
        # cosh(pt)^(1/p) evaluated in log space; cosh(pt) overflows long before the result
        ap = abs(p * t)
        return math.exp((ap + math.log1p(math.exp(-2.0 * ap)) - math.log(2.0)) / p)
    if name == "logarithmic":
        if abs(t) < 0.5 * NEAR_DIAGONAL:
            return _sinhc_small(t)
        return math.sinh(t) / t
    if name == "identric":
        if abs(t) < 0.5 * NEAR_DIAGONAL:
            return math.exp(_tcoth_minus_one_small(t))
        return math.exp(t / math.tanh(t) - 1.0)
    if name == "toader-qi":
        return special.i0(t)
    raise UnsupportedKind(f"{kind} has no closed hyperbolic form")
