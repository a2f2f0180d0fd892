"""Declarative table of the inequalities, chains and conjectures, with a
seeded sampling verifier and endpoint sharpness probes.

A case is an ordered list of sides that should increase left to right.
Each side is a function `(x, B)` of the sample (t, a pair (a, b), or an
integer n) and a numeric backend B, so one expression serves both the
double-precision pass and the multiprecision re-evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import sequences, sharp
from .backends import FloatBackend, MPBackend, dps_for
from .errors import DomainError, NoSharpnessData, UnknownCase
from .means import log_ratio
from .rng import XorShift64Star


class Status(str, Enum):
    THEOREM = "theorem"
    EXTERNAL = "external_theorem"
    CONJECTURE = "conjecture"


@dataclass(frozen=True)
class Side:
    label: str
    fn: Callable


@dataclass(frozen=True)
class Link:
    status: Status = Status.THEOREM
    strict: bool = True


@dataclass(frozen=True)
class TDomain:
    lo: float = 1e-6
    hi: float = 50.0
    kind: str = "t"


@dataclass(frozen=True)
class PairDomain:
    ratio_lo: float = 1.0 + 1e-9
    ratio_hi: float = 1e8
    scale_lo: float = 1e-3
    scale_hi: float = 1e3
    kind: str = "pair"


@dataclass(frozen=True)
class IntDomain:
    lo: int = 1
    hi: int = 1000
    kind: str = "n"


@dataclass(frozen=True)
class Sharpness:
    """A statistic of t expected to approach `expected` at an endpoint.

    `expected` may be a zero-argument callable for constants resolved lazily.
    """

    label: str
    endpoint: str            # "0+", "inf" or "interior"
    statistic: Callable      # (t, B) -> number
    expected: float | Callable
    tolerance: float
    at: float | Callable | None = None   # probe point; defaults by endpoint


@dataclass(frozen=True)
class InequalityCase:
    id: str
    description: str
    sides: tuple
    domain: object = TDomain()
    status: Status = Status.THEOREM
    links: tuple = ()
    sharpness: tuple = ()
    t_form: tuple | None = None   # hyperbolic sides of a pair case

    def __post_init__(self):
        if len(self.sides) < 2:
            raise DomainError(f"{self.id}: a case needs at least two sides")
        if not self.links:
            object.__setattr__(self, "links", tuple(Link(self.status) for _ in self.sides[1:]))
        if len(self.links) != len(self.sides) - 1:
            raise DomainError(f"{self.id}: one link per adjacent pair of sides")
        if self.t_form is not None and len(self.t_form) != len(self.sides):
            raise DomainError(f"{self.id}: hyperbolic form must match the sides")

    @property
    def strict(self) -> bool:
        return all(l.strict for l in self.links)


# ---------------------------------------------------------------------------
# lazily resolved sharp constants


@lru_cache(maxsize=1)
def delta0() -> float:
    return sharp.find_t0_delta0().value


@lru_cache(maxsize=1)
def t0() -> float:
    return sharp.find_t0_delta0().location


@lru_cache(maxsize=16)
def lambda0(p: float) -> float:
    return sharp.find_lambda0(p).value


# ---------------------------------------------------------------------------
# expression helpers, t-forms


def _sinhc(t, B):
    return B.sinh(t) / t


def _tail_sinh(t, B):
    """(t sinh t - 2 cosh t + 2)/t^2, by its positive series for small float t."""
    if B.name == "float" and t < 0.5:
        # sum_{m>=2} (2m-2) t^(2m-2)/(2m)!, term holds t^(2m-2)/(2m)!
        x = t * t
        total, term, m = 0.0, x / 24.0, 2
        while True:
            s = (2 * m - 2) * term
            total += s
            if s < 1e-17 * total:
                return total
            term *= x / ((2 * m + 1) * (2 * m + 2))
            m += 1
    return (t * B.sinh(t) - 2 * B.cosh(t) + 2) / (t * t)


def _chpt(p, t, B):
    """1 - 1/(2p^2) + cosh(pt)/(2p^2)."""
    p2 = 2 * p * p
    return 1 - 1 / p2 + B.cosh(p * t) / p2


def _lam_chpt(lam, p, t, B):
    """1 - lambda/p^2 + lambda cosh(pt)/p^2."""
    return 1 - lam / (p * p) + lam * B.cosh(p * t) / (p * p)


def _cosh_power(p, t, B):
    """(cosh pt)^(1/(2p^2))."""
    return B.cosh(p * t) ** (1 / (2 * p * p))


def _theta_mix(theta, t, B):
    return (B.cosh(t * B.cos(theta)) + B.cosh(t * B.sin(theta))) / 2


def _identric_p(p, t, B):
    """Hyperbolic form of the p-order identric mean: exp((pt coth pt - 1)/p)."""
    pt = p * t
    return B.exp((pt / B.tanh(pt) - 1) / p)


def _power_t(p, t, B):
    """Hyperbolic form of the power mean of order p: (cosh pt)^(1/p)."""
    return B.cosh(p * t) ** (1 / p)


def _sqrt_mix(lam, t, B):
    return B.sqrt((lam * B.cosh(t) + 1 - lam) * _sinhc(t, B))


def _r1(t, B):
    s = _sinhc(t, B)
    i0 = B.i0(t)
    return (i0 * i0 - s) / ((B.cosh(t) - 1) * s)


def _i0(t, B):
    return B.i0(t)


I0 = Side("I0(t)", _i0)
TQ = Side("TQ", lambda ab, B: B.TQ(*ab))
G = Side("G", lambda ab, B: B.G(*ab))
A = Side("A", lambda ab, B: B.A(*ab))
L = Side("L", lambda ab, B: B.L(*ab))
IDENT = Side("I", lambda ab, B: B.I(*ab))


def _q(B, p, q=1):
    return B.frac(p, q)


# ---------------------------------------------------------------------------
# parametric families (also used to probe the failing side of iff thresholds)


def la_lower_case(p) -> InequalityCase:
    """(cosh t)^(1-p) (sinh t/t)^p < I0(t); holds iff p >= 3/4."""
    pf = Fraction(p).limit_denominator(10 ** 6) if isinstance(p, float) else Fraction(p)
    return InequalityCase(
        f"I_0-L-A:lower[p={float(pf):g}]",
        "geometric blend of cosh t and sinh t/t below I0",
        (Side(f"cosh^(1-p) sinhc^p, p={float(pf):g}",
              lambda t, B: B.cosh(t) ** (1 - B.num(pf)) * _sinhc(t, B) ** B.num(pf)), I0),
        sharpness=(Sharpness("t^2 coefficient (p - 3/4)/3", "0+",
                             lambda t, B: (B.i0(t) - B.cosh(t) ** (1 - B.num(pf))
                                           * _sinhc(t, B) ** B.num(pf)) / (t * t),
                             float(pf - Fraction(3, 4)) / 3, 1e-6),),
    )


def la_upper_case(q) -> InequalityCase:
    """I0(t) < q sinh t/t + (1-q) cosh t; holds iff q <= 3/4."""
    qf = Fraction(q).limit_denominator(10 ** 6) if isinstance(q, float) else Fraction(q)
    return InequalityCase(
        f"I_0-L-A:upper[q={float(qf):g}]",
        "linear blend of sinh t/t and cosh t above I0",
        (I0, Side(f"q sinhc + (1-q) cosh, q={float(qf):g}",
                  lambda t, B: B.num(qf) * _sinhc(t, B) + (1 - B.num(qf)) * B.cosh(t))),
        sharpness=(Sharpness("t^2 coefficient (3/4 - q)/3", "0+",
                             lambda t, B: (B.num(qf) * _sinhc(t, B) + (1 - B.num(qf)) * B.cosh(t)
                                           - B.i0(t)) / (t * t),
                             float(Fraction(3, 4) - qf) / 3, 1e-6),),
    )


@dataclass(frozen=True)
class SqrtOf:
    """An exact square-root parameter, e.g. SqrtOf(Fraction(3, 8)) for sqrt6/4."""

    square: Fraction

    def __float__(self):
        return math.sqrt(self.square)


def _param(v, B):
    return B.sqrt(B.num(v.square)) if isinstance(v, SqrtOf) else B.num(v)


def theta_case(theta_over_pi) -> InequalityCase:
    """(cosh(t cos theta) + cosh(t sin theta))/2 < I0(t) with theta = pi * theta_over_pi;
    holds iff theta in [pi/8, 3pi/8]."""
    r = Fraction(theta_over_pi)
    th = lambda B: B.pi * B.num(r)
    return InequalityCase(
        f"I_0-coshttr.[theta=pi*{r}]",
        "average of cosh(t cos theta) and cosh(t sin theta) below I0",
        (Side(f"theta-mix(pi*{r})", lambda t, B: _theta_mix(th(B), t, B)), I0),
        sharpness=(Sharpness("t^4 coefficient -cos(4 theta)/192", "0+",
                             lambda t, B: (B.i0(t) - _theta_mix(th(B), t, B)) / t ** 4,
                             -math.cos(4 * math.pi * float(r)) / 192, 1e-6),),
    )


def cosh_power_case(p, reverse: bool = False) -> InequalityCase:
    """(cosh pt)^(1/(2p^2)) < I0(t) (iff p >= sqrt6/4), or the reverse (iff p <= 1/2).

    `p` may be a number or a SqrtOf for boundary values.
    """
    pf = float(p)
    bound = Side(f"(cosh pt)^(1/(2p^2)), p={pf:.6g}",
                 lambda t, B: _cosh_power(_param(p, B), t, B))
    sides = (I0, bound) if reverse else (bound, I0)
    return InequalityCase(
        f"lnI_0>lnchpt[p={pf:.6g}{',reverse' if reverse else ''}]",
        "power of cosh(pt) compared with I0",
        sides,
        sharpness=(Sharpness("t^4 coefficient of ln I0 - ln(bound): (p^2 - 3/8)/24", "0+",
                             lambda t, B: (B.log(B.i0(t)) - B.log(_cosh_power(_param(p, B), t, B)))
                             / t ** 4,
                             (pf * pf - 0.375) / 24, 1e-6),),
    )


def chpt_lower_case(p) -> InequalityCase:
    """1 - 1/(2p^2) + cosh(pt)/(2p^2) < I0(t); holds iff p <= sqrt3/2."""
    pf = float(p)
    return InequalityCase(
        f"I_0-chpt:lower[p={pf:.6g}]",
        "cosh(pt) combination below I0",
        (Side(f"chpt({pf:.6g})", lambda t, B: _chpt(_param(p, B), t, B)), I0),
        sharpness=(Sharpness("t^4 coefficient -(p^2 - 3/4)/48", "0+",
                             lambda t, B: (B.i0(t) - _chpt(_param(p, B), t, B)) / t ** 4,
                             -(pf * pf - 0.75) / 48, 1e-6),),
    )


def tq_identric_case(p) -> InequalityCase:
    """TQ(a,b) < I_p(a,b); holds iff p >= 3/4."""
    pf = Fraction(p)
    return InequalityCase(
        f"TQ-I_p[p={float(pf):g}]",
        "Toader-Qi mean below the p-order identric mean",
        (TQ, Side(f"I_{float(pf):g}", lambda ab, B: B.order("identric", pf, *ab))),
        domain=PairDomain(),
        t_form=(I0, Side(f"I_{float(pf):g}(t)", lambda t, B: _identric_p(B.num(pf), t, B))),
        sharpness=(Sharpness("t^2 coefficient of ln I_p - ln I0: (p - 3/4)/3", "0+",
                             lambda t, B: (B.log(_identric_p(B.num(pf), t, B))
                                           - B.log(B.i0(t))) / (t * t),
                             float(pf - Fraction(3, 4)) / 3, 1e-6),),
    )


# ---------------------------------------------------------------------------
# the registry

SQRT3_2 = math.sqrt(3) / 2


def _build() -> tuple[InequalityCase, ...]:
    pair = PairDomain()
    ext = Link(Status.EXTERNAL)
    thm = Link(Status.THEOREM)
    conj = Link(Status.CONJECTURE)
    cases = []

    cases.append(InequalityCase(
        "G-TQ-A", "geometric < Toader-Qi < arithmetic",
        (G, TQ, A), pair,
        t_form=(Side("1", lambda t, B: B.num(1)), I0, Side("cosh t", lambda t, B: B.cosh(t))),
    ))

    cases.append(InequalityCase(
        "I-e^t", "exponential bounds on I0",
        (Side("e^t/(1+2t)", lambda t, B: B.exp(t) / (1 + 2 * t)), I0,
         Side("e^t/sqrt(1+2t)", lambda t, B: B.exp(t) / B.sqrt(1 + 2 * t))),
    ))

    cases.append(InequalityCase(
        "I_0-sh2t/2t", "sqrt(sinh 2t/(pi t)) < I0 < sqrt(sinh 2t/(2t))",
        (Side("sqrt(sinh2t/(pi t))", lambda t, B: B.sqrt(B.sinh(2 * t) / (B.pi * t))), I0,
         Side("sqrt(sinh2t/(2t))", lambda t, B: B.sqrt(B.sinh(2 * t) / (2 * t)))),
        sharpness=(
            Sharpness("lower: I0 / sqrt(sinh2t/(pi t)) -> 1", "inf",
                      lambda t, B: B.i0(t) / B.sqrt(B.sinh(2 * t) / (B.pi * t)), 1.0, 2e-3),
            Sharpness("upper: I0 / sqrt(sinh2t/(2t)) -> 1", "0+",
                      lambda t, B: B.i0(t) / B.sqrt(B.sinh(2 * t) / (2 * t)), 1.0, 1e-6),
        ),
    ))

    cases.append(InequalityCase(
        "I_0-sqr(LA)", "sqrt(2/pi) sqrt(LA) < TQ < sqrt(LA)",
        (Side("sqrt(2/pi) sqrt(LA)", lambda ab, B: B.sqrt(2 / B.pi * B.L(*ab) * B.A(*ab))), TQ,
         Side("sqrt(LA)", lambda ab, B: B.sqrt(B.L(*ab) * B.A(*ab)))), pair,
        t_form=(Side("sqrt(2/pi) sqrt(sinhc cosh)",
                     lambda t, B: B.sqrt(2 / B.pi * _sinhc(t, B) * B.cosh(t))), I0,
                Side("sqrt(sinhc cosh)", lambda t, B: B.sqrt(_sinhc(t, B) * B.cosh(t)))),
    ))

    # the upper link is attained at t = t0 when delta = delta0
    cases.append(InequalityCase(
        "I-TQ-sqrLA-w", "weighted sqrt bounds with lambda = 2/pi and delta = delta0",
        (Side("sqrt((2/pi cosh + 1 - 2/pi) sinhc)", lambda t, B: _sqrt_mix(2 / B.pi, t, B)), I0,
         Side("sqrt((delta0 cosh + 1 - delta0) sinhc)",
              lambda t, B: _sqrt_mix(B.num(delta0()), t, B))),
        links=(thm, Link(Status.THEOREM, strict=False)),
        sharpness=(
            Sharpness("R1 -> 2/pi", "inf", _r1, 2 / math.pi, 2e-3),
            Sharpness("R1(t0) = delta0", "interior", _r1, delta0, 1e-9, at=t0),
        ),
    ))

    la_lo = la_lower_case(Fraction(3, 4))
    la_hi = la_upper_case(Fraction(3, 4))
    cases.append(InequalityCase(
        "I_0-L-A", "(cosh)^(1/4) sinhc^(3/4) < I0 < (3/4) sinhc + (1/4) cosh",
        (la_lo.sides[0], I0, la_hi.sides[1]),
        sharpness=(
            Sharpness("lower t^2 coefficient vanishes at p = 3/4", "0+",
                      la_lo.sharpness[0].statistic, 0.0, 1e-6),
            Sharpness("upper t^2 coefficient vanishes at q = 3/4", "0+",
                      la_hi.sharpness[0].statistic, 0.0, 1e-6),
        ),
    ))

    cases.append(InequalityCase(
        "I_0-L-A-m", "L^(3/4) A^(1/4) < TQ < (3/4)L + (1/4)A",
        (Side("L^(3/4) A^(1/4)", lambda ab, B: B.L(*ab) ** _q(B, 3, 4) * B.A(*ab) ** _q(B, 1, 4)),
         TQ,
         Side("(3/4)L + (1/4)A", lambda ab, B: _q(B, 3, 4) * B.L(*ab) + _q(B, 1, 4) * B.A(*ab))),
        pair,
        t_form=la_lo.sides[:1] + (I0,) + la_hi.sides[1:],
    ))

    cases.append(InequalityCase(
        "I_0-chpt", "cosh(pt) combinations at p = sqrt3/2 (lower) and q = 1 (upper)",
        (Side("chpt(sqrt3/2)", lambda t, B: _chpt(B.sqrt(3) / 2, t, B)), I0,
         Side("(1 + cosh t)/2", lambda t, B: (1 + B.cosh(t)) / 2)),
        sharpness=(Sharpness("lower t^4 coefficient vanishes at p = sqrt3/2", "0+",
                             lambda t, B: (B.i0(t) - _chpt(B.sqrt(3) / 2, t, B)) / t ** 4,
                             0.0, 1e-6),),
    ))

    # lambda0(p) is the infimum of R3, attained at an interior t: non-strict
    for p in (0.9, 0.95):
        cases.append(InequalityCase(
            f"I_0>chpt-a[p={p:g}]", f"lambda0 cosh(pt) combination below I0 at p = {p:g}",
            (Side(f"1 - l0/p^2 + l0 cosh(pt)/p^2, p={p:g}",
                  lambda t, B, p=p: _lam_chpt(B.num(lambda0(p)), B.num(p), t, B)), I0),
            links=(Link(Status.THEOREM, strict=False),),
        ))

    cases.append(InequalityCase(
        "C-TQ-A_p+G", "chain of cosh combinations below I0 and (1 + cosh t)/2 above",
        (Side("sqrt(cosh t)", lambda t, B: B.sqrt(B.cosh(t))),
         Side("2cosh(t/2) - 1", lambda t, B: 2 * B.cosh(t / 2) - 1),
         Side("(9/8)cosh(2t/3) - 1/8", lambda t, B: _chpt(_q(B, 2, 3), t, B)),
         Side("cosh(t/sqrt2)", lambda t, B: B.cosh(t / B.sqrt(2))),
         Side("(8/9)cosh(3t/4) + 1/9", lambda t, B: _chpt(_q(B, 3, 4), t, B)),
         Side("(2/3)cosh(sqrt3 t/2) + 1/3", lambda t, B: _chpt(B.sqrt(3) / 2, t, B)),
         I0,
         Side("(1 + cosh t)/2", lambda t, B: (1 + B.cosh(t)) / 2)),
    ))

    cases.append(InequalityCase(
        "Ch.-I-4", "powers of cosh(pt) around I0 and e^(t^2/4)",
        (Side("sqrt(cosh t)", lambda t, B: B.sqrt(B.cosh(t))),
         Side("cosh(t/sqrt2)", lambda t, B: B.cosh(t / B.sqrt(2))),
         Side("cosh(sqrt6 t/4)^(4/3)", lambda t, B: B.cosh(B.sqrt(6) * t / 4) ** _q(B, 4, 3)),
         I0,
         Side("cosh(t/2)^2", lambda t, B: B.cosh(t / 2) ** 2),
         Side("e^(t^2/4)", lambda t, B: B.exp(t * t / 4))),
        sharpness=(Sharpness("t^4 coefficient of ln I0 - ln cosh(sqrt6 t/4)^(4/3) vanishes", "0+",
                             lambda t, B: (B.log(B.i0(t))
                                           - _q(B, 4, 3) * B.log(B.cosh(B.sqrt(6) * t / 4))) / t ** 4,
                             0.0, 1e-6),),
    ))

    cases.append(InequalityCase(
        "I_0-coshttr.-ch", "theta-averages of cosh at pi/4, pi/6, pi/8 below I0",
        (Side("theta-mix(pi/4)", lambda t, B: _theta_mix(B.pi / 4, t, B)),
         Side("theta-mix(pi/6)", lambda t, B: _theta_mix(B.pi / 6, t, B)),
         Side("theta-mix(pi/8)", lambda t, B: _theta_mix(B.pi / 8, t, B)),
         I0),
        sharpness=(Sharpness("t^4 coefficient vanishes at theta = pi/8", "0+",
                             lambda t, B: (B.i0(t) - _theta_mix(B.pi / 8, t, B)) / t ** 4,
                             0.0, 1e-6),),
    ))

    cases.append(InequalityCase(
        "I_0>Y", "sinh t/t plus a second-moment correction below I0",
        (Side("sinhc + 3(4-pi)/pi (t sinh t - 2cosh t + 2)/t^2",
              lambda t, B: _sinhc(t, B) + 3 * (4 - B.pi) / B.pi * _tail_sinh(t, B)), I0),
    ))

    cases.append(InequalityCase(
        "Qi-I-1", "L < TQ < I", (L, TQ, IDENT), pair,
        t_form=(Side("sinhc", _sinhc), I0,
                Side("exp(t coth t - 1)", lambda t, B: _identric_p(B.num(1), t, B))),
    ))

    cases.append(InequalityCase(
        "Qi-I-2", "TQ < (A+G)/2 < (2A+G)/3 < I",
        (TQ, Side("(A+G)/2", lambda ab, B: (B.A(*ab) + B.G(*ab)) / 2),
         Side("(2A+G)/3", lambda ab, B: (2 * B.A(*ab) + B.G(*ab)) / 3), IDENT), pair,
        links=(thm, ext, ext),
    ))

    tq_i = tq_identric_case(Fraction(3, 4))
    cases.append(InequalityCase(
        "TQ-A-T-I", "TQ < A_{1/2} < T_{1/3} < I_{3/4}",
        (TQ, Side("A_{1/2}", lambda ab, B: B.Ap(_q(B, 1, 2), *ab)),
         Side("T_{1/3}", lambda ab, B: B.order("toader", Fraction(1, 3), *ab)),
         tq_i.sides[1]), pair,
        links=(thm, ext, ext),
    ))
    cases.append(InequalityCase(
        "TQ-I_p", "TQ < I_{3/4}", tq_i.sides, pair, t_form=tq_i.t_form,
        sharpness=(Sharpness("t^2 coefficient vanishes at p = 3/4", "0+",
                             tq_i.sharpness[0].statistic, 0.0, 1e-6),),
    ))

    cases.append(InequalityCase(
        "T-A_p", "A_{3/2} < T < A_{ln2/ln(pi/2)}",
        (Side("A_{3/2}", lambda ab, B: B.Ap(_q(B, 3, 2), *ab)),
         Side("T", lambda ab, B: B.T(*ab)),
         Side("A_{ln2/ln(pi/2)}", lambda ab, B: B.Ap(B.log(2) / B.log(B.pi / 2), *ab))), pair,
        status=Status.EXTERNAL,
    ))
    cases.append(InequalityCase(
        "T-I_p", "T < I_{9/4}",
        (Side("T", lambda ab, B: B.T(*ab)),
         Side("I_{9/4}", lambda ab, B: B.order("identric", Fraction(9, 4), *ab))), pair,
        status=Status.EXTERNAL,
    ))

    la_m = cases[[c.id for c in cases].index("I_0-L-A-m")]
    agm = Side("AGM", lambda ab, B: B.AGM(*ab))
    cases.append(InequalityCase(
        "AGM-L-A", "L < AGM < L^(3/4) A^(1/4) < L_{3/2}",
        (L, agm, la_m.sides[0], Side("L_{3/2}", lambda ab, B: B.order("logarithmic", Fraction(3, 2), *ab))),
        pair, status=Status.EXTERNAL,
    ))
    cases.append(InequalityCase(
        "AGM-TQi-T_p", "L < AGM < L^(3/4)A^(1/4) < TQ < (3/4)L + (1/4)A < A_{1/2} < T_{1/3} < I_{3/4}",
        (L, agm, la_m.sides[0], TQ, la_m.sides[2],
         Side("A_{1/2}", lambda ab, B: B.Ap(_q(B, 1, 2), *ab)),
         Side("T_{1/3}", lambda ab, B: B.order("toader", Fraction(1, 3), *ab)),
         tq_i.sides[1]), pair,
        links=(ext, ext, thm, thm, thm, ext, ext),
    ))

    def wallis(n, B):
        return B.num(sequences.wallis_ratio(n))

    cases.append(InequalityCase(
        "W-KI", "1/sqrt(pi(n+1/2)) < W_n < 1/sqrt(pi(n+1/4))",
        (Side("1/sqrt(pi(n+1/2))", lambda n, B: 1 / B.sqrt(B.pi * (n + _q(B, 1, 2)))),
         Side("W_n", wallis),
         Side("1/sqrt(pi(n+1/4))", lambda n, B: 1 / B.sqrt(B.pi * (n + _q(B, 1, 4))))),
        IntDomain(), status=Status.EXTERNAL,
    ))
    # equality at n = 2 in the upper bound
    cases.append(InequalityCase(
        "W-YI", "sqrt(((pi-2)4^-n + 2)/(pi(2n+1))) < W_n <= sqrt((41 + 19 4^-n)/(60(2n+1)))",
        (Side("sqrt(((pi-2)4^-n + 2)/(pi(2n+1)))",
              lambda n, B: B.sqrt(((B.pi - 2) * _q(B, 1, 4 ** n) + 2) / (B.pi * (2 * n + 1)))),
         Side("W_n", wallis),
         Side("sqrt((41 + 19 4^-n)/(60(2n+1)))",
              lambda n, B: B.sqrt((41 + 19 * _q(B, 1, 4 ** n)) / (60 * (2 * n + 1))))),
        IntDomain(), links=(thm, Link(Status.THEOREM, strict=False)),
    ))

    cases.append(InequalityCase(
        "conjecture-L32", "TQ > L_{3/2}",
        (Side("L_{3/2}", lambda ab, B: B.order("logarithmic", Fraction(3, 2), *ab)), TQ), pair,
        status=Status.CONJECTURE,
        t_form=(Side("L_{3/2}(t)", lambda t, B: (_sinhc(_q(B, 3, 2) * t, B)) ** _q(B, 2, 3)), I0),
    ))
    cases.append(InequalityCase(
        "conjecture-2", "sqrt(AG) < TQ < sqrt(LI) < (L+I)/2 < (A+G)/2",
        (Side("sqrt(AG)", lambda ab, B: B.sqrt(B.A(*ab) * B.G(*ab))), TQ,
         Side("sqrt(LI)", lambda ab, B: B.sqrt(B.L(*ab) * B.I(*ab))),
         Side("(L+I)/2", lambda ab, B: (B.L(*ab) + B.I(*ab)) / 2),
         Side("(A+G)/2", lambda ab, B: (B.A(*ab) + B.G(*ab)) / 2)), pair,
        status=Status.CONJECTURE, links=(thm, conj, thm, ext),
        t_form=(Side("sqrt(cosh t)", lambda t, B: B.sqrt(B.cosh(t))), I0,
                Side("sqrt(sinhc exp(t coth t - 1))",
                     lambda t, B: B.sqrt(_sinhc(t, B) * _identric_p(B.num(1), t, B))),
                Side("(sinhc + exp(t coth t - 1))/2",
                     lambda t, B: (_sinhc(t, B) + _identric_p(B.num(1), t, B)) / 2),
                Side("(cosh t + 1)/2", lambda t, B: (B.cosh(t) + 1) / 2)),
    ))
    return tuple(cases)


@lru_cache(maxsize=1)
def _registry() -> tuple[InequalityCase, ...]:
    cases = _build()
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate case ids")
    return cases


def registry() -> list[InequalityCase]:
    return list(_registry())


def get_case(case_id: str) -> InequalityCase:
    for c in _registry():
        if c.id == case_id:
            return c
    raise UnknownCase(case_id)


# ---------------------------------------------------------------------------
# verification

SCALED_POINTS = (100.0, 200.0, 500.0)
# double-precision margins agree with 60+ digit ones to ~3e-14 (Toader quadrature
# ~2e-13); anything closer to zero than this is re-evaluated in mpmath
TRUST_MARGIN = 1e-11
MAX_REPORTED = 100

_FLOAT = FloatBackend()


@dataclass(frozen=True)
class Violation:
    index: int | str
    location: object
    link: int
    left: str
    right: str
    margin: float
    status: str

    def to_json(self) -> dict:
        return {"index": self.index, "location": self.location, "link": self.link,
                "left": self.left, "right": self.right, "margin": self.margin,
                "status": self.status}


@dataclass(frozen=True)
class VerifyReport:
    id: str
    status: str
    samples: int
    seed: int
    min_margin: float
    min_location: object
    min_link: int
    violations: tuple = ()
    violation_count: int = 0
    fatal_count: int = 0
    strict: bool = True

    @property
    def passed(self) -> bool:
        return self.fatal_count == 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "samples": self.samples,
            "seed": self.seed,
            "min_margin": {"value": self.min_margin, "location": self.min_location,
                           "link": self.min_link},
            "violations": [v.to_json() for v in self.violations],
            "violation_count": self.violation_count,
            "passed": self.passed,
        }


def _margins(sides, x, B) -> list[float]:
    with B:
        x = B.convert(x)
        vals = [s.fn(x, B) for s in sides]
        out = []
        for l, r in zip(vals, vals[1:]):
            out.append(float((r - l) / min(abs(l), abs(r))))
        return out


def margins_at(case: InequalityCase, x, form: str = "native") -> list[float]:
    """Relative margins (right - left)/min(|left|, |right|) of adjacent sides at x.

    `form="t"` evaluates the hyperbolic form of a pair case at t.
    """
    sides = case.sides
    if form == "t":
        if case.t_form is None:
            raise DomainError(f"{case.id} has no hyperbolic form")
        sides = case.t_form
        kind = "t"
    else:
        kind = case.domain.kind
    if kind == "n":
        return _margins(sides, x, MPBackend(30))
    t = abs(0.5 * log_ratio(*x)) if kind == "pair" else float(x)
    try:
        m = _margins(sides, x, _FLOAT)
        if all(math.isfinite(v) and abs(v) > TRUST_MARGIN for v in m):
            return m
    except ArithmeticError:
        pass
    return _margins(sides, x, MPBackend(dps_for(t)))


def _scaled_margins(case, t) -> list[float]:
    return _margins(case.sides, t, MPBackend(30, scaled_i0=True))


def sample_points(domain, samples: int, seed: int) -> list:
    """Seeded sample locations for a domain: t values, (a, b) pairs or integers."""
    if samples < 1:
        raise DomainError("samples must be >= 1")
    if domain.kind == "n":
        return list(range(domain.lo, domain.hi + 1))
    rng = XorShift64Star(seed)
    if domain.kind == "t":
        lo, hi = math.log(domain.lo), math.log(domain.hi)
        return [math.exp(rng.uniform(lo, hi)) for _ in range(samples)]
    pts = []
    ulo, uhi = 0.5 * math.log1p(domain.ratio_lo - 1.0), 0.5 * math.log(domain.ratio_hi)
    slo, shi = math.log(domain.scale_lo), math.log(domain.scale_hi)
    for _ in range(samples):
        t = math.exp(rng.uniform(math.log(ulo), math.log(uhi)))
        s = math.exp(rng.uniform(slo, shi))
        a, b = s * math.exp(-t), s * math.exp(t)
        if rng.random() < 0.5:
            a, b = b, a
        pts.append((a, b))
    return pts


def _location(x):
    return list(x) if isinstance(x, tuple) else x


def verify(case: InequalityCase, samples: int, seed: int) -> VerifyReport:
    """Evaluate every adjacent link of `case` at seeded samples.

    t-domain cases additionally get a scaled pass at t = 100, 200, 500.
    Violations of theorem and external_theorem links are fatal; conjecture
    links are reported only.
    """
    points = [(i, x) for i, x in enumerate(sample_points(case.domain, samples, seed))]
    evals = [(i, x, margins_at(case, x)) for i, x in points]
    if case.domain.kind == "t":
        evals += [("scaled", t, _scaled_margins(case, t)) for t in SCALED_POINTS]
    best = (math.inf, None, -1)
    violations = []
    count = fatal = 0
    for idx, x, ms in evals:
        for k, m in enumerate(ms):
            if m < best[0]:
                best = (m, _location(x), k)
            link = case.links[k]
            if m < 0 or (link.strict and m == 0):
                count += 1
                if link.status is not Status.CONJECTURE:
                    fatal += 1
                if len(violations) < MAX_REPORTED:
                    violations.append(Violation(idx, _location(x), k, case.sides[k].label,
                                                case.sides[k + 1].label, m, link.status.value))
    return VerifyReport(case.id, case.status.value, len(points), seed, best[0], best[1], best[2],
                        tuple(violations), count, fatal, case.strict)


def verify_case(case_id: str, samples: int = 10_000, seed: int = 42) -> VerifyReport:
    return verify(get_case(case_id), samples, seed)


def _verify_worker(args):
    return verify_case(*args)


def verify_all(ids=None, samples: int = 10_000, seed: int = 42, workers: int = 1) -> list[VerifyReport]:
    """Verify several cases; results come back in registry (or given) order."""
    ids = [c.id for c in _registry()] if ids is None else list(ids)
    for i in ids:
        get_case(i)
    jobs = [(i, samples, seed) for i in ids]
    if workers <= 1 or len(jobs) <= 1:
        return [_verify_worker(j) for j in jobs]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_worker, jobs))


# ---------------------------------------------------------------------------
# sharpness probes

PROBE_T = {"0+": 1e-4, "inf": 500.0}


@dataclass(frozen=True)
class ProbeResult:
    label: str
    endpoint: str
    t: float
    value: float
    expected: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return abs(self.value - self.expected) <= self.tolerance

    def to_json(self) -> dict:
        return {"label": self.label, "endpoint": self.endpoint, "t": self.t, "value": self.value,
                "expected": self.expected, "tolerance": self.tolerance, "ok": self.ok}


def _resolve(v):
    return float(v()) if callable(v) else float(v)


def probe(case: InequalityCase) -> list[ProbeResult]:
    if not case.sharpness:
        raise NoSharpnessData(case.id)
    out = []
    for s in case.sharpness:
        t = _resolve(s.at) if s.at is not None else PROBE_T[s.endpoint]
        B = MPBackend(30, scaled_i0=True) if t > 30 else MPBackend(60)
        with B:
            value = float(s.statistic(B.num(t), B))
        out.append(ProbeResult(s.label, s.endpoint, t, value, _resolve(s.expected), s.tolerance))
    return out


def sharpness_probe(case_id: str) -> list[ProbeResult]:
    return probe(get_case(case_id))
