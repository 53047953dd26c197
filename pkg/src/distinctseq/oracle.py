"""Exhaustive ground truth over all n^n sequences (or n^(n^2) matrices).

Every input is run through the instrumented algorithm with equal weight;
sums are kept as Python integers so the resulting means are exact
rationals and independent of how the enumeration is partitioned.
"""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import algorithms

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    """Raised instead of silently falling back to sampling."""


@dataclass(frozen=True)
class ExhaustiveReport:
    n: int
    algorithm: str
    runs: int
    mean_comparisons: Fraction
    mean_assignments: Fraction
    mean_total: Fraction
    good_probability: Fraction
    stop_distribution: dict = field(default_factory=dict)


@dataclass
class _Tally:
    runs: int = 0
    comparisons: int = 0
    assignments: int = 0
    good: int = 0
    prefix: Counter = field(default_factory=Counter)

    def merge(self, other: "_Tally") -> "_Tally":
        self.runs += other.runs
        self.comparisons += other.comparisons
        self.assignments += other.assignments
        self.good += other.good
        self.prefix.update(other.prefix)
        return self


def _space_size(n: int, algorithm: str) -> int:
    return n ** (n * n) if algorithm == "matrix" else n ** n


def _check_budget(n: int, algorithm: str, budget: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if algorithm not in algorithms.ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    size = _space_size(n, algorithm)
    if size > budget:
        raise BudgetExceeded(
            f"{algorithm} at n={n} needs {size} runs, budget is {budget}")
    return size


def _inputs(n: int, algorithm: str, first: int):
    """Lexicographic inputs whose first cell equals ``first``."""
    alphabet = range(1, n + 1)
    if algorithm == "matrix":
        for rest in itertools.product(alphabet, repeat=n * n - 1):
            cells = (first,) + rest
            yield [cells[i * n:(i + 1) * n] for i in range(n)]
    else:
        for rest in itertools.product(alphabet, repeat=n - 1):
            yield (first,) + rest


def _tally_block(n: int, algorithm: str, first: int) -> _Tally:
    # looked up at call time so a patched registry is honoured
    run = algorithms.ALGORITHMS[algorithm]
    t = _Tally()
    for x in _inputs(n, algorithm, first):
        out = run(x)
        t.runs += 1
        t.comparisons += out.comparisons
        t.assignments += out.assignments
        if out.good:
            t.good += 1
        if algorithm != "matrix":
            # length of the repetition-free prefix
            t.prefix[out.stop_index if out.good else out.stop_index - 1] += 1
    return t


def _enumerate(n: int, algorithm: str, budget: int, workers: int) -> _Tally:
    _check_budget(n, algorithm, budget)
    firsts = range(1, n + 1)
    total = _Tally()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_block, [n] * n, [algorithm] * n, firsts))
    else:
        parts = [_tally_block(n, algorithm, f) for f in firsts]
    for part in parts:
        total.merge(part)
    return total


def exhaustive_expectation(n: int, algorithm: str, budget: int = DEFAULT_BUDGET,
                           workers: int = 1) -> ExhaustiveReport:
    """Exact means over the uniform input space.

    The space is split into ``n`` lexicographic blocks by the first cell;
    with ``workers > 1`` the blocks run in separate processes and are merged
    by integer addition, which gives the same report as a serial run.
    """
    t = _enumerate(n, algorithm, budget, workers)
    size = t.runs
    dist = {k: Fraction(t.prefix.get(k, 0), size) for k in range(1, n + 1)} \
        if algorithm != "matrix" else {}
    return ExhaustiveReport(
        n=n,
        algorithm=algorithm,
        runs=size,
        mean_comparisons=Fraction(t.comparisons, size),
        mean_assignments=Fraction(t.assignments, size),
        mean_total=Fraction(t.comparisons + t.assignments, size),
        good_probability=Fraction(t.good, size),
        stop_distribution=dist,
    )


def stop_distribution_check(n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the enumerated prefix-length law equals ``p_k(n, .)`` exactly."""
    from .analytics import p_k
    report = exhaustive_expectation(n, "linear", budget)
    return all(report.stop_distribution[k] == p_k(n, k) for k in range(1, n + 1))


def first_repeat_counts(n: int, budget: int = DEFAULT_BUDGET) -> dict:
    """``{k: Counter(q)}``: position ``q`` of the earlier copy of ``s_{k+1}``
    among sequences whose repetition-free prefix has length ``k < n``."""
    _check_budget(n, "linear", budget)
    counts: dict = {k: Counter() for k in range(1, n)}
    for s in itertools.product(range(1, n + 1), repeat=n):
        seen = {}
        for i, x in enumerate(s):
            if x in seen:
                counts[i][seen[x] + 1] += 1
                break
            seen[x] = i
    return counts


def first_repeat_position_uniformity(n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether, given prefix length ``k``, the repeated index is uniform on ``1..k``."""
    for k, c in first_repeat_counts(n, budget).items():
        if sorted(c) != list(range(1, k + 1)) or len(set(c.values())) != 1:
            return False
    return True

