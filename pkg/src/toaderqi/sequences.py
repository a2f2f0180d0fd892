"""Integer-indexed sequences behind the coefficient arguments: Wallis ratio,
s_n, c_n/d_n, gamma_n, alpha_n/beta_n, mu_n/nu_n, rho_n/sigma_n, xi_n.

Rational sequences are exact (`fractions.Fraction`); the few that involve
sqrt(2) or a real parameter are returned as floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath

from .errors import DomainError, UnknownSequence

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SeqValue:
    n: int
    value: Fraction | float

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def to_json(self) -> dict:
        if self.exact:
            return {"n": self.n, "value": f"{self.value.numerator}/{self.value.denominator}"}
        return {"n": self.n, "value": self.value}


def _need(n: int, lo: int) -> None:
    if n < lo:
        raise DomainError(f"index must be >= {lo}, got {n}")


@lru_cache(maxsize=2048)
def wallis_ratio(n: int) -> Fraction:
    """W_n = (2n-1)!!/(2n)!! = (2n)! / (2^(2n) n!^2)."""
    _need(n, 0)
    return Fraction(math.comb(2 * n, n), 4 ** n)


@lru_cache(maxsize=2048)
def s_seq(n: int) -> Fraction:
    """s_n = (2n)! (2n+1)! / (2^(4n) n!^4) = (2n+1) W_n^2."""
    _need(n, 0)
    f = math.factorial
    return Fraction(f(2 * n) * f(2 * n + 1), 2 ** (4 * n) * f(n) ** 4)


def binom_square_sum(n: int) -> int:
    """sum_k C(n,k)^2, by direct summation."""
    _need(n, 0)
    return sum(math.comb(n, k) ** 2 for k in range(n + 1))


def central_binomial(n: int) -> int:
    _need(n, 0)
    return math.comb(2 * n, n)


def cd_ratio(n: int) -> Fraction:
    """c_n/d_n = (2^(2n) s_n - 1) / (2^(2n) - 1), coefficient ratio of R1."""
    _need(n, 1)
    q = 4 ** n
    return (q * s_seq(n) - 1) / (q - 1)


def gamma_seq(n: int) -> Fraction:
    _need(n, 1)
    return Fraction((n + 2) * (2 * n + 1), 2 * (n + 1)) * wallis_ratio(n)


def alphabeta_ratio(n: int) -> Fraction:
    """alpha_n/beta_n = ((2n+1)/(2n)) (1 - W_n), coefficient ratio of R2."""
    _need(n, 1)
    return Fraction(2 * n + 1, 2 * n) * (1 - wallis_ratio(n))


def munu_ratio(n: int, p: float) -> float:
    """mu_n/nu_n = W_n / p^(2n-2), coefficient ratio of R3 at parameter p."""
    _need(n, 1)
    if not p > 0:
        raise DomainError("p must be positive")
    return float(wallis_ratio(n)) / p ** (2 * n - 2)


def munu_difference(n: int, p: float) -> float:
    """mu_{n+1}/nu_{n+1} - mu_n/nu_n = -(W_n / p^(2n)) (p^2 - (2n+1)/(2n+2))."""
    _need(n, 1)
    if not p > 0:
        raise DomainError("p must be positive")
    return -float(wallis_ratio(n)) / p ** (2 * n) * (p * p - (2 * n + 1) / (2 * n + 2))


def rhosigma_ratio(n: int) -> float:
    """rho_n/sigma_n = (1/2) n!^2 sqrt2^n / (2n)! ((sqrt2-1)^n + (sqrt2+1)^n)."""
    _need(n, 0)
    return 0.5 * SQRT2 ** n / math.comb(2 * n, n) * ((SQRT2 - 1) ** n + (SQRT2 + 1) ** n)


def rhosigma_ratio_exact(n: int) -> Fraction:
    """rho_n/sigma_n as a rational: with (1 + sqrt2)^n = x + y sqrt2 the sqrt2
    parts cancel, leaving n!^2 2^(n/2) x / (2n)! for even n and
    n!^2 2^((n+1)/2) y / (2n)! for odd n."""
    _need(n, 0)
    x, y = 1, 0
    for _ in range(n):
        x, y = x + 2 * y, x + y
    top = 2 ** (n // 2) * x if n % 2 == 0 else 2 ** ((n + 1) // 2) * y
    return Fraction(math.factorial(n) ** 2 * top, math.factorial(2 * n))


def eta_seq(n: int) -> float:
    _need(n, 1)
    return (SQRT2 + 1) ** (2 * n - 1)


def xi_seq(n: int) -> Fraction:
    """xi_n = (3 sqrt2 - 4) eta_n + (3 sqrt2 + 4)/eta_n - 4, exactly.

    With eta_n = x + y sqrt2 in Z[sqrt2], 1/eta_n = -x + y sqrt2 (odd power of a
    unit of norm -1) and the sqrt2 parts cancel: xi_n = 12y - 8x - 4.
    """
    _need(n, 1)
    x, y = 1, 0
    for _ in range(2 * n - 1):
        x, y = x + 2 * y, x + y
    return Fraction(12 * y - 8 * x - 4)


def xi_seq_float(n: int) -> float:
    """The same quantity evaluated in floating point from eta_n."""
    eta = eta_seq(n)
    return (3 * SQRT2 - 4) * eta + (3 * SQRT2 + 4) / eta - 4


# ---------------------------------------------------------------------------
# log-gamma

# B_{2k} / (2k (2k-1)), k = 1..8
_STIRLING = (
    1 / 12, -1 / 360, 1 / 1260, -1 / 1680, 1 / 1188,
    -691 / 360360, 1 / 156, -3617 / 122400,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0: Stirling series for x >= 8, upward recursion below."""
    if not (x > 0 and math.isfinite(x)):
        raise DomainError(f"log_gamma needs finite x > 0, got {x!r}")
    shift = 0.0
    if x < 8.0:
        prod = 1.0
        while x < 8.0:
            prod *= x
            x += 1.0
        shift = math.log(prod)
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for c in reversed(_STIRLING):
        corr = corr * inv2 + c
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + corr * inv - shift


def gamma_ratio_bounds(x: float, a: float) -> tuple[float, float, float]:
    """(1/(x+a)^(1-a), Gamma(x+a)/Gamma(x+1), 1/x^(1-a)).

    The ratio is computed from x + 1 and the offset a - 1 without forming the
    rounded sum x + a, whose representation error would otherwise exceed the
    O(1/x) gap between the ratio and the upper bound at large x.
    """
    if not (x > 0 and math.isfinite(x)):
        raise DomainError("x must be > 0")
    if not 0 < a < 1:
        raise DomainError("a must lie in (0, 1)")
    return (x + a) ** (a - 1.0), math.exp(_log_gamma_shift(x + 1.0, a - 1.0)), x ** (a - 1.0)


def _stirling_tail(x: float) -> float:
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for c in reversed(_STIRLING):
        corr = corr * inv2 + c
    return corr * inv


def _log_gamma_shift(y: float, d: float) -> float:
    """ln(Gamma(y + d)/Gamma(y)) with the offset d carried separately."""
    shift = 0.0
    while min(y, y + d) < 8.0:
        # log1p only pays off when d is small against y
        shift -= math.log1p(d / y) if abs(d) < 0.5 * y else math.log(y + d) - math.log(y)
        y += 1.0
    x = y + d
    lead = (x - 0.5) * math.log1p(d / y) + d * (math.log(y) - 1.0)
    return lead + _stirling_tail(x) - _stirling_tail(y) + shift


def log_gamma_ratio(x: float, y: float) -> float:
    """ln(Gamma(x)/Gamma(y)) without subtracting two large log-gammas."""
    for v in (x, y):
        if not (v > 0 and math.isfinite(v)):
            raise DomainError(f"log_gamma_ratio needs finite arguments > 0, got {v!r}")
    shift = 0.0
    while min(x, y) < 8.0:
        d = x - y
        shift += math.log1p(d / y) if abs(d) < 0.5 * y else math.log(x) - math.log(y)
        x += 1.0
        y += 1.0
    return _log_gamma_shift(y, x - y) - shift


# ---------------------------------------------------------------------------
# Wallis inequalities


@dataclass(frozen=True)
class WallisCheck:
    n: int
    ki_lower: bool          # 1/sqrt(pi(n+1/2)) < W_n
    ki_upper: bool          # W_n < 1/sqrt(pi(n+1/4))
    yi_lower: bool          # sqrt(((pi-2)2^-2n + 2)/(pi(2n+1))) < W_n
    yi_upper: bool          # W_n <= sqrt((41 + 19 2^-2n)/(60(2n+1)))
    yi_upper_equality: bool
    yi_dominates_ki: bool   # the sharper lower bound exceeds the classical one
    margins: dict

    @property
    def holds(self) -> bool:
        return (self.ki_lower and self.ki_upper and self.yi_lower and self.yi_upper
                and self.yi_dominates_ki)


def wallis_bounds_check(n: int) -> WallisCheck:
    """Check both Wallis double inequalities at n, comparing squares.

    The upper sharper bound is attained with equality at n = 2, so it is
    checked as non-strict and equality is reported separately. Working
    precision grows with n because the two lower bounds differ by O(4^-n).
    """
    _need(n, 1)
    w2 = wallis_ratio(n) ** 2
    q = Fraction(1, 4 ** n)
    yi_up = (41 + 19 * q) / (60 * (2 * n + 1))   # exact
    with mpmath.workdps(30 + int(0.61 * n)):
        pi = mpmath.pi
        w2m = mpmath.mpf(w2.numerator) / w2.denominator
        qm = mpmath.mpf(1) / mpmath.mpf(4) ** n
        ki_lo = 1 / (pi * (n + mpmath.mpf(1) / 2))
        ki_hi = 1 / (pi * (n + mpmath.mpf(1) / 4))
        yi_lo = ((pi - 2) * qm + 2) / (pi * (2 * n + 1))
        margins = {
            "ki_lower": float(w2m / ki_lo - 1),
            "ki_upper": float(ki_hi / w2m - 1),
            "yi_lower": float(w2m / yi_lo - 1),
            "yi_upper": float(yi_up / w2 - 1),
            "yi_over_ki_lower": mpmath.nstr(yi_lo / ki_lo - 1, 6),
        }
        return WallisCheck(
            n=n,
            ki_lower=w2m > ki_lo,
            ki_upper=w2m < ki_hi,
            yi_lower=w2m > yi_lo,
            yi_upper=w2 <= yi_up,
            yi_upper_equality=w2 == yi_up,
            yi_dominates_ki=yi_lo > ki_lo,
            margins=margins,
        )


# ---------------------------------------------------------------------------
# table export

SEQUENCES: dict[str, tuple[int, Callable[[int], Fraction | float]]] = {
    "wallis-ratio": (0, wallis_ratio),
    "s-sequence": (0, s_seq),
    "binom-square-sum": (0, lambda n: Fraction(binom_square_sum(n))),
    "cd-ratio": (1, cd_ratio),
    "gamma-sequence": (1, gamma_seq),
    "alphabeta-ratio": (1, alphabeta_ratio),
    "rhosigma-ratio": (0, rhosigma_ratio_exact),
    "xi-sequence": (1, xi_seq),
    "v-sequence": (0, None),
}


def sequence_values(name: str, n_max: int) -> list[SeqValue]:
    """Values of a named sequence from its first valid index through n_max."""
    if name not in SEQUENCES:
        raise UnknownSequence(name)
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    start, fn = SEQUENCES[name]
    if name == "v-sequence":
        from .special import v_sequence
        return [SeqValue(n, c) for n, c in enumerate(v_sequence(n_max).coefficients)]
    return [SeqValue(n, fn(n)) for n in range(start, n_max + 1)]
