from fractions import Fraction

import pytest

from distinctseq import analytics as an
from distinctseq import oracle
from distinctseq.oracle import BudgetExceeded, exhaustive_expectation


@pytest.mark.parametrize("n", range(1, 6))
def test_linear_and_backward_exact(n):
    lin = exhaustive_expectation(n, "linear")
    back = exhaustive_expectation(n, "backward")
    assert lin.runs == back.runs == n ** n
    assert lin.mean_comparisons == an.expected_comparisons_linear(n)
    assert back.mean_comparisons == an.expected_comparisons_backward(n)
    assert lin.mean_assignments == an.expected_assignments_linear(n)
    assert back.mean_assignments == an.expected_assignments_backward(n)
    assert lin.mean_total == an.expected_time_linear(n)
    assert lin.good_probability == back.good_probability == an.factorial_ratio(n)


@pytest.mark.parametrize("n", [1, 4])
def test_bucket_exact(n):
    rep = exhaustive_expectation(n, "bucket")
    assert rep.mean_comparisons == an.expected_comparisons_bucket(n)
    assert rep.mean_assignments == an.expected_assignments_bucket(n)
    assert rep.mean_total == an.expected_time_bucket(n)


def test_spot_values():
    assert exhaustive_expectation(2, "linear").mean_comparisons == 2
    assert exhaustive_expectation(3, "backward").mean_comparisons == Fraction(19, 9)
    assert exhaustive_expectation(4, "bucket").mean_comparisons == Fraction(53, 32)
    for alg in ("linear", "backward", "bucket", "matrix"):
        assert exhaustive_expectation(1, alg).good_probability == 1


def test_stop_distribution():
    assert exhaustive_expectation(2, "linear").stop_distribution == {
        1: Fraction(1, 2), 2: Fraction(1, 2)}
    assert exhaustive_expectation(1, "linear").stop_distribution == {1: 1}
    for n in range(1, 6):
        assert oracle.stop_distribution_check(n)
        rep = exhaustive_expectation(n, "backward")
        assert sum(rep.stop_distribution.values()) == 1


def test_first_repeat_uniform():
    counts = oracle.first_repeat_counts(3)
    assert counts[2][1] == counts[2][2] > 0
    assert list(oracle.first_repeat_counts(2)[1]) == [1]
    for n in range(1, 5):
        assert oracle.first_repeat_position_uniformity(n)


def test_matrix_two():
    rep = exhaustive_expectation(2, "matrix")
    assert rep.runs == 16
    assert rep.good_probability == Fraction(2, 16)


def test_budget_refuses():
    with pytest.raises(BudgetExceeded):
        exhaustive_expectation(6, "linear", budget=6 ** 6 - 1)
    with pytest.raises(BudgetExceeded):
        exhaustive_expectation(4, "matrix")
    with pytest.raises(BudgetExceeded):
        oracle.first_repeat_counts(5, budget=100)
    assert exhaustive_expectation(6, "linear", budget=6 ** 6).runs == 6 ** 6


def test_bad_arguments():
    with pytest.raises(ValueError):
        exhaustive_expectation(0, "linear")
    with pytest.raises(ValueError):
        exhaustive_expectation(2, "quick")


def test_parallel_matches_serial():
    for alg in ("linear", "bucket"):
        assert (exhaustive_expectation(5, alg, workers=3)
                == exhaustive_expectation(5, alg))


def test_patched_registry_is_used(monkeypatch):
    from distinctseq import algorithms
    real = algorithms.ALGORITHMS["backward"]

    def doubled(s):
        out = real(s)
        return algorithms.TestOutcome(
            out.good, algorithms.CostCounters(2 * out.comparisons, out.assignments),
            out.stop_index)
    monkeypatch.setitem(algorithms.ALGORITHMS, "backward", doubled)
    assert exhaustive_expectation(3, "backward").mean_comparisons == Fraction(38, 9)


@pytest.mark.slow
def test_six():
    for alg in ("linear", "backward"):
        rep = exhaustive_expectation(6, alg)
        fc = an.expected_comparisons_linear if alg == "linear" else an.expected_comparisons_backward
        assert rep.mean_comparisons == fc(6)
