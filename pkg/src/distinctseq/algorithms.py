"""Instrumented permutation testers: Linear, Backward, Bucket and Matrix.

Each tester follows its pseudocode line by line and tallies the
assignments and comparisons executed on the numbered lines.  Loop control
(``i <- i + 1``, loop-bound tests) is never counted.

Cost model (line -> counter):

=========  ==============================================  ==========
algorithm  line                                            counter
=========  ==============================================  ==========
Linear     1 ``g <- True``                                 assignment
Linear     3 ``v_i <- 0`` (n times)                        assignment
Linear     5 ``v[s_i] > 0``                                comparison
Linear     6 ``g <- False``                                assignment
Linear     8 ``v[s_i] <- v[s_i] + 1``                      assignment
Backward   1 ``g <- True``                                 assignment
Backward   4 ``s_i = s_j``                                 comparison
Backward   5 ``g <- False``                                assignment
Bucket     1 ``g <- True``                                 assignment
Bucket     2 ``m <- sqrt(n)``                              assignment
Bucket     4 ``c_j <- 1`` (m times)                        assignment
Bucket     6 ``r <- ceil(s_i / m)``                        assignment
Bucket     8 ``s_i = Q[r, j]``                             comparison
Bucket     9 ``g <- False``                                assignment
Bucket     11 ``Q[r, c_r] <- s_i``                         assignment
Bucket     12 ``c_r <- c_r + 1``                           assignment
Matrix     1 ``g <- True``                                 assignment
Matrix     2, 6, 10: every Bucket call, with its own costs
=========  ==============================================  ==========

With this table every Linear run satisfies ``A = n + 1 + C`` exactly, so
the expected running time is ``n + 1 + 2 C_L``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence as _Seq, Tuple, Union


class InvalidInputError(ValueError):
    """Raised for inputs outside the probability space (never a verdict)."""


def bucket_count(n: int) -> int:
    """Number of buckets used for alphabet size ``n``: ``ceil(sqrt(n))``."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    return isqrt(n - 1) + 1


def _check_values(n: int, values: _Seq[int], what: str = "sequence") -> None:
    if len(values) != n:
        raise InvalidInputError(f"{what} has length {len(values)}, expected {n}")
    for pos, v in enumerate(values, 1):
        if not 1 <= v <= n:
            raise InvalidInputError(
                f"{what} element {pos} is {v}, outside [1, {n}]")


class Sequence:
    """A realization ``s = (s_1, ..., s_n)`` with every ``s_i`` in ``[1, n]``."""

    __slots__ = ("n", "values")

    def __init__(self, values: Iterable[int], n: int | None = None):
        values = tuple(int(v) for v in values)
        if n is None:
            n = len(values)
        if n < 1:
            raise InvalidInputError(f"n must be positive, got {n}")
        _check_values(n, values)
        self.n = n
        self.values = values

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, Sequence):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Sequence({list(self.values)})"


class SquareMatrix:
    """An ``n x n`` realization with cells in ``[1, n]``.

    ``row(i)`` and ``column(j)`` are 1-based and return :class:`Sequence`.
    """

    def __init__(self, cells: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in cells)
        n = len(rows)
        if n < 1:
            raise InvalidInputError("matrix must have at least one row")
        for i, r in enumerate(rows, 1):
            _check_values(n, r, what=f"row {i}")
        self.n = n
        self.cells = rows

    def row(self, i: int) -> Sequence:
        return Sequence(self.cells[i - 1], self.n)

    def column(self, j: int) -> Sequence:
        return Sequence((r[j - 1] for r in self.cells), self.n)

    def __repr__(self):
        return f"SquareMatrix({[list(r) for r in self.cells]})"


@dataclass(frozen=True)
class CostCounters:
    comparisons: int = 0
    assignments: int = 0

    @property
    def total_ops(self) -> int:
        return self.comparisons + self.assignments

    def __add__(self, other: "CostCounters") -> "CostCounters":
        return CostCounters(self.comparisons + other.comparisons,
                            self.assignments + other.assignments)


MatrixStop = Tuple[str, int, int]


@dataclass(frozen=True)
class TestOutcome:
    """Verdict, operation counts and stop position of one run.

    ``stop_index`` is the number of input elements consumed.  For Matrix it
    is ``(phase, line, element)`` with phase ``"row"`` or ``"column"``.
    """

    __test__ = False  # not a pytest class

    good: bool
    counters: CostCounters
    stop_index: Union[int, MatrixStop]

    @property
    def comparisons(self) -> int:
        return self.counters.comparisons

    @property
    def assignments(self) -> int:
        return self.counters.assignments

    @property
    def total_ops(self) -> int:
        return self.counters.total_ops


def _as_sequence(s) -> Sequence:
    return s if isinstance(s, Sequence) else Sequence(s)


# The ``_run_*`` cores take already-validated data and return the raw tuple
# ``(good, comparisons, assignments, stop_index)``.  The simulation calls
# them directly on generated inputs.

def _run_linear(n: int, s: _Seq[int]):
    a = 1                         # line 1
    v = [0] * (n + 1)
    a += n                        # line 3, n times
    c = 0
    for i in range(n):
        x = s[i]
        c += 1                    # line 5
        if v[x] > 0:
            a += 1                # line 6
            return False, c, a, i + 1
        v[x] += 1
        a += 1                    # line 8
    return True, c, a, n


def _run_backward(n: int, s: _Seq[int]):
    a = 1                         # line 1
    c = 0
    for i in range(1, n):
        x = s[i]
        for j in range(i - 1, -1, -1):
            c += 1                # line 4
            if x == s[j]:
                a += 1            # line 5
                return False, c, a, i + 1
    return True, c, a, n


def _run_bucket(n: int, s: _Seq[int]):
    m = isqrt(n - 1) + 1
    a = 2 + m                     # lines 1, 2 and m times line 4
    c = 0
    q = [[0] * m for _ in range(m)]
    cnt = [1] * m
    for i in range(n):
        x = s[i]
        r = (x + m - 1) // m - 1
        a += 1                    # line 6
        row = q[r]
        top = cnt[r] - 1
        for j in range(top):
            c += 1                # line 8
            if x == row[j]:
                a += 1            # line 9
                return False, c, a, i + 1
        row[top] = x
        cnt[r] = top + 2
        a += 2                    # lines 11, 12
    return True, c, a, n


def _outcome(raw) -> TestOutcome:
    good, c, a, stop = raw
    return TestOutcome(good, CostCounters(c, a), stop)


def linear_test(s) -> TestOutcome:
    """Test ``s`` with a presence vector (one pass, early exit on repeat).

    >>> linear_test([1, 1]).comparisons
    2
    """
    s = _as_sequence(s)
    return _outcome(_run_linear(s.n, s.values))


def backward_test(s) -> TestOutcome:
    """Compare each ``s_i`` with ``s_{i-1}, ..., s_1`` until a collision."""
    s = _as_sequence(s)
    return _outcome(_run_backward(s.n, s.values))


def bucket_test(s) -> TestOutcome:
    """Route elements into ``ceil(sqrt(n))`` buckets, linear search in each."""
    s = _as_sequence(s)
    return _outcome(_run_bucket(s.n, s.values))


def _run_matrix(n: int, row, column):
    a = 1                         # line 1
    c = 0
    for phase, line in (("row", row), ("column", column)):
        for i in range(1, n + 1):
            good, bc, ba, stop = _run_bucket(n, line(i))
            c += bc
            a += ba
            if not good:
                return False, c, a, (phase, i, stop)
    return True, c, a, ("column", n, n)


def matrix_test(M) -> TestOutcome:
    """Bucket-test row 1, rows 2..n, then columns 1..n; stop at the first bad line.

    Cells shared by a row and a column are scanned twice when every row is good.
    """
    if not isinstance(M, SquareMatrix):
        M = SquareMatrix(M)
    cells = M.cells
    n = M.n
    return _outcome(_run_matrix(
        n,
        lambda i: cells[i - 1],
        lambda j: [r[j - 1] for r in cells],
    ))


def is_permutation(values: _Seq[int], n: int) -> bool:
    """Naive sort-and-scan reference checker."""
    return sorted(values) == list(range(1, n + 1))


ALGORITHMS = {
    "linear": linear_test,
    "backward": backward_test,
    "bucket": bucket_test,
    "matrix": matrix_test,
}
SEQUENCE_ALGORITHMS = ("linear", "backward", "bucket")
_CORES = {
    "linear": _run_linear,
    "backward": _run_backward,
    "bucket": _run_bucket,
}
