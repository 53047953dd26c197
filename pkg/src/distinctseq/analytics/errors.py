"""Error terms of the asymptotic cost formulas, evaluated to 50 digits.

Each term is computed from its defining identity against the exact
expected cost (``kappa = R_1 - sqrt(pi n / 2) + 1/3`` and so on), so no
approximation is stacked on another.  The ``*_as_printed`` and
``*_expansion`` helpers evaluate alternative closed forms; they exist to
be compared against the defining values, not to replace them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .moments import stirling_tau
from .numeric import (PI, ctx, factorial_ratio_decimal, is_square, log_factorial_ratio,
                      r1_decimal, require_positive, require_square)

_THIRD = ctx.mpf(1) / 3


def _sqrt_pi_n_2(n):
    return ctx.sqrt(PI * n / 2)


def szego_sigma(n: int):
    """``sigma`` in ``e^n / 2 = S_0 + (1/3 + sigma) n^n / n!``; ``sigma(0) = 1/6``."""
    if n == 0:
        return ctx.mpf(1) / 6
    require_positive(n)
    # (e^n/2 - S_0) n!/n^n = e^n n!/(2 n^n) - R_1
    return ctx.exp(n + log_factorial_ratio(n)) / 2 - r1_decimal(n) - _THIRD


def kappa(n: int):
    """``kappa = R_1 - sqrt(pi n / 2) + 1/3``."""
    require_positive(n)
    return r1_decimal(n) - _sqrt_pi_n_2(n) + _THIRD


def kappa_1(n: int):
    """``sqrt(pi n / 2)(e^tau - 1)``."""
    return _sqrt_pi_n_2(n) * ctx.expm1(stirling_tau(n))


def kappa_2_as_printed(n: int):
    """``sqrt(pi n / 2) 2 sigma e^tau / e^n``."""
    return _sqrt_pi_n_2(n) * 2 * szego_sigma(n) * ctx.exp(stirling_tau(n) - n)


def kappa_expansion(n: int):
    """``kappa = kappa_1 - sigma`` (Stirling and Szego substituted into R_1)."""
    return kappa_1(n) - szego_sigma(n)


def kappa_expansion_as_printed(n: int):
    return kappa_1(n) - kappa_2_as_printed(n)


def kappa_ratio(n: int):
    """``gamma = kappa(n+1) / kappa(n)``; below 1 exactly when kappa decreases."""
    return kappa(n + 1) / kappa(n)


def delta(n: int):
    """``delta = kappa - n!/n^n``, so that ``T_L = n + sqrt(2 pi n) + 7/3 + 2 delta``."""
    return kappa(n) - factorial_ratio_decimal(n)


def lambda_(n: int):
    """``lambda`` from ``R_2 = 2n + 1/3 - sqrt(pi n/2) e^tau - lambda``.

    Since ``R_2 = 2n - R_1`` this is ``R_1 + 1/3 - sqrt(pi n/2) e^tau``,
    which equals ``-sigma``.
    """
    require_positive(n)
    return r1_decimal(n) + _THIRD - _sqrt_pi_n_2(n) * ctx.exp(stirling_tau(n))


def lambda_as_printed(n: int):
    return kappa_1(n) + szego_sigma(n)


# -- Backward ------------------------------------------------------------

def _cw_decimal(n: int):
    # C_W = n + 1/2 - R_1/2 - (n!/n^n)(n+1)/2
    return n + ctx.mpf(1) / 2 - r1_decimal(n) / 2 - factorial_ratio_decimal(n) * (n + 1) / 2


def alpha(n: int):
    """``alpha = n - sqrt(pi n / 8) + 2/3 - C_W``."""
    require_positive(n)
    return n - ctx.sqrt(PI * n / 8) + 2 * _THIRD - _cw_decimal(n)


def backward_time_as_printed(n: int):
    """``n - sqrt(pi n / 8) + 5/3 - alpha``.

    Under the line cost model ``T_W`` is larger by ``1 - n!/n^n``.
    """
    return n - ctx.sqrt(PI * n / 8) + 5 * _THIRD - alpha(n)


# -- Bucket --------------------------------------------------------------

_SQRT_PI_2 = ctx.sqrt(PI / 2)
_SQRT_PI_8 = ctx.sqrt(PI / 8)


def mu(n: int):
    """``mu = sqrt(pi/2) - E{b_1}`` with ``E{b_1} = R_1 / sqrt(n)``.

    Defined for every ``n`` by taking ``sqrt(n)`` real-valued.
    """
    require_positive(n)
    return _SQRT_PI_2 - r1_decimal(n) / ctx.sqrt(n)


def mu_expansion(n: int):
    """``1/(3 sqrt n) - kappa / sqrt n``."""
    return (_THIRD - kappa(n)) / ctx.sqrt(n)


def _ef_decimal(n: int, m: int):
    r1 = r1_decimal(n)
    return (2 * m + 1 + r1) / (2 * m + 2) - factorial_ratio_decimal(n) * (m + 1) / 2


def _cb_decimal(n: int, m: int):
    # m E{c_1} = (n - R_1) / (m + 1) because R_2 = 2n - R_1 and n = m^2
    return (n - r1_decimal(n)) / (m + 1) + _ef_decimal(n, m)


def _tb_decimal(n: int, m: int):
    return (_cb_decimal(n, m) + 4 + m + 3 * r1_decimal(n)
            - 2 * factorial_ratio_decimal(n))


def eta(n: int):
    """``eta = 1 + sqrt(pi/8) - E{f}`` on perfect squares."""
    m = require_square(n)
    return 1 + _SQRT_PI_8 - _ef_decimal(n, m)


def eta_expansion(n: int):
    """``(2/3 + sqrt(pi/8) - kappa/2)/(sqrt n + 1) + (n!/n^n)(sqrt n + 1)/2``."""
    m = require_square(n)
    return ((2 * _THIRD + _SQRT_PI_8 - kappa(n) / 2) / (m + 1)
            + factorial_ratio_decimal(n) * (m + 1) / 2)


def eta_as_printed(n: int):
    """``(1/6 + sqrt(pi/8) - kappa/2)/(sqrt n + 1)``."""
    return (ctx.mpf(1) / 6 + _SQRT_PI_8 - kappa(n) / 2) / (ctx.sqrt(n) + 1)


def rho(n: int):
    """``rho = C_B - (sqrt n + 1/3 - sqrt(pi/8))`` on perfect squares.

    Tends to ``-1/3``, not to zero: the constant term of ``C_B`` is
    ``-sqrt(pi/8)``.
    """
    m = require_square(n)
    return _cb_decimal(n, m) - (m + _THIRD - _SQRT_PI_8)


def rho_expansion(n: int):
    m = require_square(n)
    return (-_THIRD + (2 * _THIRD + _SQRT_PI_8 - kappa(n) / 2) / (m + 1)
            - factorial_ratio_decimal(n) * (m + 1) / 2)


def rho_as_printed(n: int):
    """``(5/6 - sqrt(9 pi/8) - 3 kappa/2)/(sqrt n + 1)``."""
    return (5 * _THIRD / 2 - ctx.sqrt(9 * PI / 8) - 3 * kappa(n) / 2) / (ctx.sqrt(n) + 1)


def rho_as_printed_alt(n: int):
    """``(sqrt(9 pi/8) + 5/6 - 3 kappa/2)/(sqrt n + 1)``."""
    return (ctx.sqrt(9 * PI / 8) + 5 * _THIRD / 2 - 3 * kappa(n) / 2) / (ctx.sqrt(n) + 1)


def phi(n: int):
    """``phi = T_B - sqrt(n)(3 + 3 sqrt(pi/2)) - sqrt(25 pi/8)`` on perfect squares.

    Under the line cost model ``T_B = sqrt(n)(2 + 3 sqrt(pi/2)) + O(1)``, so
    ``phi`` grows like ``-sqrt(n)``.
    """
    m = require_square(n)
    return _tb_decimal(n, m) - m * (3 + 3 * _SQRT_PI_2) - ctx.sqrt(25 * PI / 8)


def phi_as_printed(n: int):
    k = kappa(n)
    return (3 * k - rho_as_printed(n) - 3 * eta_as_printed(n) - factorial_ratio_decimal(n)
            - (3 * _SQRT_PI_8 - _THIRD - 3 * k / 2) / (ctx.sqrt(n) + 1))


def bucket_time_as_printed(n: int):
    """``sqrt(n)(3 + 3 sqrt(pi/2)) + sqrt(25 pi/8) + phi`` with the printed phi."""
    return ctx.sqrt(n) * (3 + 3 * _SQRT_PI_2) + ctx.sqrt(25 * PI / 8) + phi_as_printed(n)


@dataclass(frozen=True)
class ErrorTermReport:
    n: int
    kappa: object
    sigma: object
    delta: object
    alpha: object
    mu: object
    lambda_: object
    eta: Optional[object] = None
    rho: Optional[object] = None
    phi: Optional[object] = None


def error_terms(n: int) -> ErrorTermReport:
    """All error terms at ``n``; the Bucket-only ones are ``None`` off the squares."""
    sq = is_square(n)
    return ErrorTermReport(
        n=n,
        kappa=kappa(n),
        sigma=szego_sigma(n),
        delta=delta(n),
        alpha=alpha(n),
        mu=mu(n),
        lambda_=lambda_(n),
        eta=eta(n) if sq else None,
        rho=rho(n) if sq else None,
        phi=phi(n) if sq else None,
    )
