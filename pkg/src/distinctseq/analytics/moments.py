"""Exact combinatorial building blocks: n!/n^n, p_k, S_i, R_i and Q(n)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .numeric import PI, ctx, require_positive


def factorial_ratio(n: int) -> Fraction:
    """``n! / n^n``, the probability that a random sequence is a permutation."""
    require_positive(n)
    return Fraction(factorial(n), n ** n)


def p_k(n: int, k: int) -> Fraction:
    """Probability that the longest repetition-free prefix has length ``k``.

    ``p_k = n! k / ((n-k)! n^(k+1))``.
    """
    require_positive(n)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    return Fraction(factorial(n) * k, factorial(n - k) * n ** (k + 1))


def stop_distribution(n: int) -> dict[int, Fraction]:
    return {k: p_k(n, k) for k in range(1, n + 1)}


def a_k(n: int, k: int) -> Fraction:
    """``n^k / k!``."""
    return Fraction(n ** k, factorial(k))


def power_sum_S(n: int, i: int) -> Fraction:
    """``S_i = sum_{k=0}^{n-1} k^i n^k / k!`` by direct summation.

    The ``k = 0`` term is 1 for ``i = 0`` (it is what makes ``S_0`` the
    truncated exponential series) and 0 otherwise.
    """
    require_positive(n)
    if i < 0:
        raise ValueError("i must be nonnegative")
    # Horner in n over descending k; c_k = k^i (n-1)!/k!
    num = 0
    ratio = 1
    for k in range(n - 1, -1, -1):
        num = num * n + ratio * k ** i   # Python: 0 ** 0 == 1
        ratio *= k
    return Fraction(num, factorial(n - 1))


def power_sum_S_recurrence(n: int, i: int) -> Fraction:
    """``S_i`` from ``S_0, ..., S_{i-1}``.

    ``S_i = n sum_{k<i} B(i-1, k) S_k - n^i a_{n-1}``.  The correction term
    carries ``n^i``; with ``n^(i-1)`` the identity fails already at ``i = 1``.
    """
    require_positive(n)
    s = [power_sum_S(n, 0)]
    for j in range(1, i + 1):
        s.append(n * sum(comb(j - 1, k) * s[k] for k in range(j))
                 - n ** j * a_k(n, n - 1))
    return s[i]


def power_sum_closed_form(n: int, i: int) -> Fraction:
    """``S_1, S_2, S_3`` written through ``S_0`` and ``a_n``."""
    s0 = power_sum_S(n, 0)
    an = a_k(n, n)
    if i == 0:
        return s0
    if i == 1:
        return n * s0 - n * a_k(n, n - 1)
    if i == 2:
        return s0 * (n ** 2 + n) - 2 * n ** 2 * an
    if i == 3:
        return s0 * (n ** 3 + 3 * n ** 2 + n) - (3 * n ** 3 + 2 * n ** 2) * an
    raise ValueError("closed forms exist for i <= 3 only")


def power_sum_S0_szego(n: int):
    """``S_0 = e^n / 2 - (n^n / n!) (1/3 + sigma)`` evaluated in decimal."""
    from .errors import szego_sigma
    return ctx.exp(n) / 2 - ctx.mpf(n) ** n / ctx.factorial(n) * (
        ctx.mpf(1) / 3 + szego_sigma(n))


@lru_cache(maxsize=1024)
def moment_R(n: int, i: int) -> Fraction:
    """``R_i = sum_{k=1}^n p_k k^i`` by direct summation."""
    require_positive(n)
    if i < 0:
        raise ValueError("i must be nonnegative")
    # p_k k^i = n(n-1)...(n-k+1) k^(i+1) / n^(k+1); over n^(n+1), Horner in n
    num = 0
    falling = 1
    for k in range(1, n + 1):
        falling *= n - k + 1
        num = num * n + falling * k ** (i + 1)
    return Fraction(num, n ** (n + 1))


def moment_R_via_S(n: int, i: int) -> Fraction:
    """``R_i = n!/n^(n+1) sum_l (-1)^l B(i+1, l) n^(i+1-l) S_l``."""
    total = sum((-1) ** l * comb(i + 1, l) * n ** (i + 1 - l) * power_sum_S(n, l)
                for l in range(i + 2))
    return Fraction(factorial(n), n ** (n + 1)) * total


def q_ramanujan(n: int) -> Fraction:
    """Ramanujan's ``Q(n) = 1 + (n-1)/n + (n-1)(n-2)/n^2 + ... + (n-1)!/n^(n-1)``."""
    require_positive(n)
    num = 0
    falling = 1
    for k in range(n):
        num = num * n + falling
        falling *= n - 1 - k
    return Fraction(num, n ** (n - 1))


def knuth_q_series(n: int):
    """Asymptotic series for Q(n) through the ``n^(-3/2)`` term."""
    n = ctx.mpf(n)
    return (ctx.sqrt(PI * n / 2) - ctx.mpf(1) / 3
            + ctx.sqrt(PI / (2 * n)) / 12
            - ctx.mpf(4) / (135 * n)
            + ctx.sqrt(PI / (2 * n ** 3)) / 288)


def knuth_q_series_as_printed(n: int):
    """The same series with a common misprint of the coefficients (no
    square roots on the correction terms, ``14/135`` for ``4/135``)."""
    n = ctx.mpf(n)
    return (ctx.sqrt(PI * n / 2) - ctx.mpf(1) / 3
            + PI / (2 * n) / 12
            - ctx.mpf(14) / (135 * n)
            + PI / (2 * n ** 3) / 288)


def stirling_tau(n: int):
    """``tau`` in ``n! = (n/e)^n sqrt(2 pi n) e^tau``."""
    require_positive(n)
    return ctx.loggamma(n + 1) - n * ctx.log(n) + n - ctx.log(2 * PI * n) / 2
