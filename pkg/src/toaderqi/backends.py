"""Numeric backends for evaluating inequality sides.

Side expressions are written once against a small backend interface
(elementary functions, I0, the bivariate means) and evaluated either in
double precision through the library routines or in gmpy2 multiprecision
at a working precision chosen per sample. The multiprecision route exists because the
sharp inequalities separate only at order t^4 or t^6 near t = 0.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import gmpy2

from . import means, special

# float-side memo of expensive means; samples repeat across cases with a shared seed
_MEAN_CACHE = 1 << 17


@lru_cache(maxsize=_MEAN_CACHE)
def _float_mean(name: str, a: float, b: float) -> float:
    return means.evaluate(means.MeanKind.parse(name), (a, b))


@lru_cache(maxsize=_MEAN_CACHE)
def _float_order(name: str, p: float, a: float, b: float) -> float:
    return means.p_order(means.MeanKind.parse(name), p, (a, b))


@lru_cache(maxsize=_MEAN_CACHE)
def _float_i0(t: float) -> float:
    return special.i0(t)


class FloatBackend:
    name = "float"
    pi = math.pi
    exp = staticmethod(math.exp)
    log = staticmethod(math.log)
    sqrt = staticmethod(math.sqrt)
    cosh = staticmethod(math.cosh)
    sinh = staticmethod(math.sinh)
    tanh = staticmethod(math.tanh)
    cos = staticmethod(math.cos)
    sin = staticmethod(math.sin)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False

    def num(self, x) -> float:
        return float(x)

    def convert(self, x):
        return x

    def frac(self, p, q=1) -> float:
        return p / q

    def i0(self, t) -> float:
        return _float_i0(abs(float(t)))

    def G(self, a, b):
        return means.geometric(a, b)

    def A(self, a, b):
        return means.arithmetic(a, b)

    def L(self, a, b):
        return means.logarithmic(a, b)

    def I(self, a, b):
        return means.identric(a, b)

    def TQ(self, a, b):
        return _float_mean("toader-qi", a, b)

    def T(self, a, b):
        return _float_mean("toader", a, b)

    def AGM(self, a, b):
        return _float_mean("agm", a, b)

    def Ap(self, p, a, b):
        return means.power_mean(float(p), a, b)

    def order(self, name: str, p, a, b):
        return _float_order(name, float(p), a, b)


def dps_for(t: float) -> int:
    """Decimal digits needed to resolve margins of order t^6 with guard digits."""
    if t >= 1.0:
        return 30
    return 30 + int(math.ceil(-6.0 * math.log10(t)))


_MEMOS = []


def clear_caches() -> None:
    """Drop all memoised values (used to time cold runs)."""
    for f in (_float_mean, _float_order, _float_i0, _mp_mean, _mp_order, _mp_i0, *_MEMOS):
        f.cache_clear()


def _memo_mp(fn):
    """Memoise a one-argument gmpy2 function per working precision.

    Cases share their seeded samples, so the same cosh(t), sqrt(ab), ...
    recur across the whole registry.
    """
    @lru_cache(maxsize=1 << 18)
    def cached(x, prec):
        return fn(x)

    def wrapper(x):
        return cached(x, gmpy2.get_context().precision)

    _MEMOS.append(cached)
    return staticmethod(wrapper)


def _bits(dps: int) -> int:
    return int(dps * 3.3219280948873626) + 8


class MPBackend:
    """Multiprecision evaluation (gmpy2 mpfr) at `dps` decimal digits.

    Use as a context manager; the working precision applies inside the block.
    With `scaled_i0`, I0 beyond special.LARGE_T is taken as e^t times the
    double-precision scaled quadrature (used for the large-t pass).
    """

    name = "mp"

    def __init__(self, dps: int, scaled_i0: bool = False):
        self.dps = dps
        self.scaled_i0 = scaled_i0
        self._ctx = None

    def __enter__(self):
        self._ctx = gmpy2.context(gmpy2.get_context(), precision=_bits(self.dps))
        self._ctx.__enter__()
        return self

    def __exit__(self, *exc):
        self._ctx.__exit__(*exc)
        return False

    exp = _memo_mp(gmpy2.exp)
    log = _memo_mp(gmpy2.log)
    sqrt = _memo_mp(gmpy2.sqrt)
    cosh = _memo_mp(gmpy2.cosh)
    sinh = _memo_mp(gmpy2.sinh)
    tanh = _memo_mp(gmpy2.tanh)
    cos = _memo_mp(gmpy2.cos)
    sin = _memo_mp(gmpy2.sin)

    @property
    def pi(self):
        return gmpy2.const_pi()

    def num(self, x):
        if isinstance(x, Fraction):
            return gmpy2.mpfr(x.numerator) / x.denominator
        return gmpy2.mpfr(x)

    def frac(self, p, q=1):
        return gmpy2.mpfr(p) / q

    def convert(self, x):
        """Sample point in working precision; integers stay integers."""
        if isinstance(x, tuple):
            return tuple(gmpy2.mpfr(v) for v in x)
        if isinstance(x, int):
            return x
        return gmpy2.mpfr(x)

    def i0(self, t):
        t = abs(self.num(t))
        if self.scaled_i0 and t > special.LARGE_T:
            return gmpy2.mpfr(special.i0_scaled(float(t))) * gmpy2.exp(t)
        return _mp_i0(t, gmpy2.get_context().precision)

    # means, through their hyperbolic reductions where those are exact identities
    def _key(self, a, b):
        return self.num(a), self.num(b), gmpy2.get_context().precision, self.scaled_i0

    def G(self, a, b):
        return _mp_mean("gt", *self._key(a, b))[0]

    def A(self, a, b):
        return (self.num(a) + self.num(b)) / 2

    def L(self, a, b):
        return _mp_mean("L", *self._key(a, b))

    def I(self, a, b):
        return _mp_mean("I", *self._key(a, b))

    def TQ(self, a, b):
        return _mp_mean("TQ", *self._key(a, b))

    def T(self, a, b):
        return _mp_mean("T", *self._key(a, b))

    def AGM(self, a, b):
        return _mp_mean("AGM", *self._key(a, b))

    def Ap(self, p, a, b):
        g, t = _mp_mean("gt", *self._key(a, b))
        p = self.num(p)
        return g * gmpy2.cosh(p * t) ** (1 / p)

    def order(self, name: str, p, a, b):
        a, b, prec, scaled = self._key(a, b)
        return _mp_order(name, self.num(p), a, b, prec, scaled)


def _eps():
    return gmpy2.mpfr(2) ** (1 - gmpy2.get_context().precision)


def _agm(a, b):
    return means._agm_iterate(a, b, 4 * _eps(), sqrt=gmpy2.sqrt, max_iter=200)


def toader_mp(a, b):
    """Toader mean from the Legendre-Gauss AGM series for E(m).

    With m = 1 - (lo/hi)^2 and c_0^2 = m, c_{n+1} = (a_n - b_n)/2,
    T = hi (1 - sum_n 2^(n-1) c_n^2) / AGM(1, lo/hi).
    """
    lo, hi = (a, b) if a <= b else (b, a)
    x, y = gmpy2.mpfr(1), lo / hi
    c2 = (hi - lo) * (hi + lo) / (hi * hi)
    total = c2 / 2
    w = gmpy2.mpfr(1) / 2
    eps = _eps()
    for _ in range(200):
        if abs(x - y) <= 4 * eps * x:
            break
        c2 = ((x - y) / 2) ** 2
        x, y = (x + y) / 2, gmpy2.sqrt(x * y)
        w *= 2
        total += w * c2
    return hi * (1 - total) / ((x + y) / 2)


@lru_cache(maxsize=1 << 17)
def _mp_mean(name, a, b, prec, scaled_i0):
    if name == "gt":
        return gmpy2.sqrt(a * b), gmpy2.log1p((b - a) / a) / 2
    g, t = _mp_mean("gt", a, b, prec, scaled_i0)
    if name == "L":
        return g if t == 0 else g * gmpy2.sinh(t) / t
    if name == "I":
        return g if t == 0 else g * gmpy2.exp(t / gmpy2.tanh(t) - 1)
    if name == "TQ":
        if scaled_i0 and abs(t) > special.LARGE_T:
            return g * gmpy2.mpfr(special.i0_scaled(float(abs(t)))) * gmpy2.exp(abs(t))
        return g * _mp_i0(abs(t), prec)
    if name == "T":
        return toader_mp(a, b)
    if name == "AGM":
        return _agm(a, b)
    raise KeyError(name)


_ORDER_BASE = {"logarithmic": "L", "identric": "I", "toader": "T", "toader-qi": "TQ",
               "agm": "AGM"}


@lru_cache(maxsize=1 << 17)
def _mp_order(name, p, a, b, prec, scaled_i0):
    g = gmpy2.sqrt(a * b)
    x, y = (a / g) ** p, (b / g) ** p
    if name == "arithmetic":
        inner = (x + y) / 2
    else:
        inner = _mp_mean(_ORDER_BASE[name], x, y, prec, scaled_i0)
    return g * inner ** (1 / p)


@lru_cache(maxsize=1 << 16)
def _mp_i0(t, prec):
    """I0 by its power series at the current precision."""
    x = t * t / 4
    term = gmpy2.mpfr(1)
    total = term
    eps = _eps()
    n = 0
    while True:
        n += 1
        term = term * x / (n * n)
        total += term
        if term < eps * total:
            return total
