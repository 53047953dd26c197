"""Precision plumbing shared by the analytic formulas.

Rational quantities are :class:`fractions.Fraction`.  Quantities involving
``pi`` or ``e`` are ``mpf`` values from a private mpmath context fixed at
50 significant digits; the context is never reconfigured after import, so
concurrent callers see identical results.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

import mpmath

DPS = 50
ctx = mpmath.MPContext()
ctx.dps = DPS
mpf = ctx.mpf

ExactValue = Union[Fraction, "mpmath.mpf"]

# Fixed-point scale for the fast R_1 sum; about 60 decimal digits.
_FIX_BITS = 200


def to_mpf(x):
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


def to_fraction(x) -> Fraction:
    """Exact rational value of a Fraction, int or mpf (binary) number."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    sign, man, exp, _ = ctx.mpf(x)._mpf_
    man = -int(man) if sign else int(man)
    exp = int(exp)
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)


def render(x, digits: int = 6) -> str:
    """Fixed-point decimal string, rounded half-to-even on the exact value."""
    q = round(to_fraction(x) * 10 ** digits)
    sign = "-" if q < 0 else ""
    q = abs(q)
    if digits == 0:
        return f"{sign}{q}"
    whole, frac = divmod(q, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def require_square(n: int) -> int:
    """Return ``sqrt(n)`` or raise for non-square ``n``."""
    if n < 1 or not is_square(n):
        raise ValueError(f"n must be a positive perfect square, got {n}")
    return isqrt(n)


def require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


@lru_cache(maxsize=None)
def r1_decimal(n: int):
    """``R_1(n) = sum_k prod_{j<=k} (1 - j/n)`` in fixed point.

    Terms decay like ``exp(-k^2 / 2n)`` so the sum stops once a term
    underflows the scale; truncation error is below ``n * 2**-200``.
    """
    require_positive(n)
    one = 1 << _FIX_BITS
    t = one
    total = 0
    for j in range(1, n):
        total += t
        t = t * (n - j) // n
        if not t:
            break
    else:
        total += t
    return ctx.mpf(total) / one


def log_factorial_ratio(n: int):
    """``ln(n! / n^n)``."""
    return ctx.loggamma(n + 1) - n * ctx.log(n)


def factorial_ratio_decimal(n: int):
    """``n! / n^n`` computed in log space (no overflow for large ``n``)."""
    require_positive(n)
    return ctx.exp(log_factorial_ratio(n))


def sqrt(x):
    return ctx.sqrt(to_mpf(x))


PI = ctx.pi
