"""Seeded Monte Carlo estimates of the expected operation counts.

Generator: numpy ``PCG64DXSM`` (128-bit state).  Trials are split into
fixed chunks of ``CHUNK_TRIALS``; chunk ``c`` draws from
``SeedSequence(seed, spawn_key=(c,))``, so any chunk can be reproduced on
its own and the result does not depend on how many workers run the chunks.
Cells are drawn with ``Generator.integers``, which uses rejection sampling
(no modulo bias).  Sums of counts and of squared counts are exact integers.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algorithms import SEQUENCE_ALGORITHMS, _CORES, _run_matrix

CHUNK_TRIALS = 1 << 16
_BATCH_CELLS = 1 << 18
ALGORITHM_NAMES = SEQUENCE_ALGORITHMS + ("matrix",)


@dataclass(frozen=True)
class SimulationConfig:
    n: int
    algorithm: str
    trials: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.algorithm not in ALGORITHM_NAMES:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class ExpectationEstimate:
    mean: float
    sample_variance: float
    standard_error: float
    trials: int
    good_fraction: float

    @classmethod
    def from_sums(cls, total: int, total_sq: int, trials: int, good: int):
        mean = Fraction(total, trials)
        if trials > 1:
            var = (total_sq - total * mean) / (trials - 1)
        else:
            var = Fraction(0)
        return cls(float(mean), float(var), math.sqrt(float(var) / trials), trials,
                   good / trials)

    def within(self, target, k: float = 4.0) -> bool:
        """``|mean - target| <= k * SE`` (exact equality when SE is zero)."""
        return abs(self.mean - float(target)) <= k * self.standard_error


@dataclass(frozen=True)
class SimulationResult:
    config: SimulationConfig
    comparisons: ExpectationEstimate
    assignments: ExpectationEstimate
    total: ExpectationEstimate


class _RowStream:
    """Rows of ``n`` i.i.d. uniform cells, drawn in batches on demand."""

    def __init__(self, rng: np.random.Generator, n: int):
        self.rng = rng
        self.n = n
        self.batch = max(1, _BATCH_CELLS // n)
        self.rows: list = []
        self.pos = 0

    def next_row(self) -> list:
        if self.pos == len(self.rows):
            self.rows = self.rng.integers(1, self.n + 1, size=(self.batch, self.n)).tolist()
            self.pos = 0
        row = self.rows[self.pos]
        self.pos += 1
        return row


def _chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(chunk,))
    return np.random.Generator(np.random.PCG64DXSM(ss))


def _matrix_trial(n: int, stream: _RowStream):
    # rows are drawn only when the tester reaches them; columns are read
    # only after every row has been drawn
    rows: list = []

    def row(i):
        while len(rows) < i:
            rows.append(stream.next_row())
        return rows[i - 1]

    def column(j):
        return [row(i)[j - 1] for i in range(1, n + 1)]

    return _run_matrix(n, row, column)


def _run_chunk(n: int, algorithm: str, seed: int, chunk: int, trials: int):
    stream = _RowStream(_chunk_rng(seed, chunk), n)
    sc = sc2 = sa = sa2 = st2 = good = 0
    if algorithm == "matrix":
        def trial():
            return _matrix_trial(n, stream)
    else:
        core = _CORES[algorithm]

        def trial():
            return core(n, stream.next_row())
    for _ in range(trials):
        g, c, a, _stop = trial()
        sc += c
        sa += a
        sc2 += c * c
        sa2 += a * a
        st2 += (c + a) * (c + a)
        good += g
    return sc, sc2, sa, sa2, st2, good


def _chunks(trials: int):
    full, rest = divmod(trials, CHUNK_TRIALS)
    sizes = [CHUNK_TRIALS] * full + ([rest] if rest else [])
    return list(enumerate(sizes))


def simulate(config: SimulationConfig, workers: int = 1) -> SimulationResult:
    chunks = _chunks(config.trials)
    args = ([config.n] * len(chunks), [config.algorithm] * len(chunks),
            [config.seed] * len(chunks), [c for c, _ in chunks], [t for _, t in chunks])
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, *args))
    else:
        parts = list(map(_run_chunk, *args))
    sc, sc2, sa, sa2, st2, good = (sum(col) for col in zip(*parts))
    t = config.trials
    return SimulationResult(
        config,
        ExpectationEstimate.from_sums(sc, sc2, t, good),
        ExpectationEstimate.from_sums(sa, sa2, t, good),
        ExpectationEstimate.from_sums(sc + sa, st2, t, good),
    )


def simulate_sequence(config: SimulationConfig, workers: int = 1) -> SimulationResult:
    """Run ``config.trials`` uniform sequences through a sequence tester."""
    if config.algorithm == "matrix":
        raise ValueError("use simulate_matrix for the matrix tester")
    return simulate(config, workers)


def simulate_matrix(config: SimulationConfig, workers: int = 1) -> SimulationResult:
    """Run ``config.trials`` uniform ``n x n`` matrices through Matrix.

    Cells are i.i.d. uniform; rows are materialised lazily, which leaves
    the distribution of every tested line unchanged.
    """
    if config.algorithm != "matrix":
        config = SimulationConfig(config.n, "matrix", config.trials, config.seed)
    return simulate(config, workers)
