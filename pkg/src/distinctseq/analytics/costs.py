"""Expected comparison, assignment and time counts as exact rationals.

All formulas use the per-line cost model of :mod:`distinctseq.algorithms`
and agree exactly with the exhaustive oracle wherever it can be run.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple, Union

from .moments import factorial_ratio, moment_R
from .numeric import ctx, is_square, r1_decimal, require_positive, require_square


class Interval(NamedTuple):
    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, x, slack=0) -> bool:
        return self.lower - slack <= x <= self.upper + slack


# -- Linear ---------------------------------------------------------------

def expected_comparisons_linear(n: int) -> Fraction:
    """``C_L = 1 - n!/n^n + R_1``."""
    require_positive(n)
    return 1 - factorial_ratio(n) + moment_R(n, 1)


def expected_assignments_linear(n: int) -> Fraction:
    # every run performs A = n + 1 + C
    return n + 1 + expected_comparisons_linear(n)


def expected_time_linear(n: int) -> Fraction:
    """``T_L = n + 1 + 2 C_L``."""
    return n + 1 + 2 * expected_comparisons_linear(n)


# -- Backward -------------------------------------------------------------

def expected_comparisons_backward(n: int) -> Fraction:
    """``C_W = R_2/2 + R_0/2 - (n!/n^n)(n+1)/2``.

    Conditioned on a repetition-free prefix of length ``k < n`` the run costs
    ``B(k,2)`` comparisons plus a uniform ``1..k`` search for the repeat,
    i.e. ``(k^2 + 1)/2`` on average; that is where ``+R_0/2`` comes from.
    """
    require_positive(n)
    return (moment_R(n, 2) + moment_R(n, 0)) / 2 - factorial_ratio(n) * Fraction(n + 1, 2)


def expected_assignments_backward(n: int) -> Fraction:
    # line 1 always, line 5 exactly on bad inputs
    require_positive(n)
    return 2 - factorial_ratio(n)


def expected_time_backward(n: int) -> Fraction:
    return expected_comparisons_backward(n) + expected_assignments_backward(n)


# -- Bucket ---------------------------------------------------------------

def expected_bucket_occupancy(n: int, strict: bool = True):
    """``E{b_1} = (m/n) R_1``: mean size of a bucket at the first repetition.

    Exact for perfect squares.  With ``strict=False`` other ``n`` are
    accepted and ``m = sqrt(n)`` is taken real-valued (decimal result).
    """
    if is_square(n) and n >= 1:
        return moment_R(n, 1) / require_square(n)
    if strict:
        require_square(n)
    require_positive(n)
    return r1_decimal(n) / ctx.sqrt(n)


def expected_first_repeat_cost_extended(n: int) -> Fraction:
    """``E'{f} = (2m + 1 + R_1) / (2m + 2)``, which still counts the
    phantom search when all ``n`` elements are distinct."""
    m = require_square(n)
    return (2 * m + 1 + moment_R(n, 1)) / (2 * m + 2)


def expected_first_repeat_cost(n: int) -> Fraction:
    """``E{f}``: expected comparisons spent locating the first repeat.

    ``E{f} = E'{f} - p_n (m + 1)/2``; the ``k = n`` term of the
    hypergeometric sum equals ``p_n (m + 1)/2`` when ``n = m^2``.
    """
    m = require_square(n)
    return expected_first_repeat_cost_extended(n) - factorial_ratio(n) * Fraction(m + 1, 2)


def first_repeat_cost_by_buckets(n: int) -> Fraction:
    """``E{f}`` summed directly over (prefix length, bucket load) pairs.

    Independent of the closed form: the repeat falls into a bucket holding
    ``i`` of the ``k`` distinct values with weight
    ``B(m,i) B(n-m,k-i) k! i / n^(k+1)`` and costs ``(i+1)/2`` on average.
    """
    m = require_square(n)
    total = Fraction(0)
    for k in range(1, n):
        inner = sum(comb(m, i) * comb(n - m, k - i) * i * (i + 1)
                    for i in range(1, min(k, m) + 1))
        total += Fraction(factorial(k) * inner, n ** (k + 1))
    return m * total / 2


def expected_bucket_comparisons_per_bucket(n: int) -> Fraction:
    """``E{c_1} = m(m-1) / (2n(n-1)) (R_2 - R_1)``; zero for ``n = 1``."""
    m = require_square(n)
    if n == 1:
        return Fraction(0)
    return Fraction(m * (m - 1), 2 * n * (n - 1)) * (moment_R(n, 2) - moment_R(n, 1))


def expected_comparisons_bucket(n: int) -> Fraction:
    """``C_B = m E{c_1} + E{f}``."""
    m = require_square(n)
    return m * expected_bucket_comparisons_per_bucket(n) + expected_first_repeat_cost(n)


def expected_assignments_bucket(n: int) -> Fraction:
    """``A_B = 4 + m + 3 R_1 - 2 n!/n^n``.

    Lines 1, 2: 2; line 4: m; line 6: ``R_1 + 1 - p_n``; line 9: ``1 - p_n``;
    lines 11, 12: ``2 R_1``.
    """
    m = require_square(n)
    return 4 + m + 3 * moment_R(n, 1) - 2 * factorial_ratio(n)


def bucket_assignments_as_printed(n: int) -> Fraction:
    """``2 + m + 3R_1 + C_B + 3E{f} - n!/n^n`` (line 8 comparisons booked
    as assignments as well); kept for comparison only."""
    m = require_square(n)
    return (2 + m + 3 * moment_R(n, 1) + expected_comparisons_bucket(n)
            + 3 * expected_first_repeat_cost(n) - factorial_ratio(n))


def expected_time_bucket(n: int) -> Fraction:
    return expected_comparisons_bucket(n) + expected_assignments_bucket(n)


# -- Matrix ---------------------------------------------------------------

_EXACT_POWER_BITS = 1 << 21


def _line_weights(n: int):
    """Sum of probabilities of reaching row k (rows) and column k (columns).

    ``(n!/n^n)^n`` has about ``n^2 log2 n`` bits; past ``_EXACT_POWER_BITS``
    the weights are evaluated in 50-digit decimal instead.
    """
    p = factorial_ratio(n)
    if p == 1:
        return Fraction(n), Fraction(n)
    if n * n * n.bit_length() > _EXACT_POWER_BITS:
        p = ctx.mpf(p.numerator) / p.denominator
    pn = p ** n
    rows = (1 - pn) / (1 - p)
    return rows, pn * rows


def _matrix_interval(n: int, per_line: Fraction, fixed: int) -> Interval:
    rows, cols = _line_weights(n)
    if not isinstance(rows, Fraction):
        per_line = ctx.mpf(per_line.numerator) / per_line.denominator
    return Interval(fixed + per_line, fixed + per_line * (rows + cols))


def expected_time_matrix(n: int) -> Interval:
    """Bounds on the expected total operations of Matrix.

    Row ``k`` is tested only when rows ``1..k-1`` are good (probability
    ``(n!/n^n)^(k-1)``), column ``k`` only after all rows and ``k-1``
    columns.  Lower: the first row alone.  Upper: every line charged
    ``T_B`` at its reach probability.  Both include the line-1 assignment.
    The bounds are exact rationals up to ``n`` of a few hundred and 50-digit
    decimals beyond.
    """
    require_square(n)
    return _matrix_interval(n, expected_time_bucket(n), 1)


def expected_comparisons_matrix(n: int) -> Interval:
    require_square(n)
    return _matrix_interval(n, expected_comparisons_bucket(n), 0)


def expected_assignments_matrix(n: int) -> Interval:
    require_square(n)
    return _matrix_interval(n, expected_assignments_bucket(n), 1)


# -- reports --------------------------------------------------------------

Value = Union[Fraction, Interval]


@dataclass(frozen=True)
class ExpectedCostReport:
    n: int
    algorithm: str
    expected_comparisons: Value
    expected_assignments: Value
    expected_time: Value


_FORMULAS = {
    "linear": (expected_comparisons_linear, expected_assignments_linear, expected_time_linear),
    "backward": (expected_comparisons_backward, expected_assignments_backward,
                 expected_time_backward),
    "bucket": (expected_comparisons_bucket, expected_assignments_bucket, expected_time_bucket),
    "matrix": (expected_comparisons_matrix, expected_assignments_matrix, expected_time_matrix),
}


def expected_cost_report(n: int, algorithm: str) -> ExpectedCostReport:
    try:
        fc, fa, ft = _FORMULAS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    return ExpectedCostReport(n, algorithm, fc(n), fa(n), ft(n))
