import itertools
from math import comb, isqrt

import pytest
from hypothesis import given, settings, strategies as st

from distinctseq import (InvalidInputError, Sequence, SquareMatrix, backward_test,
                         bucket_test, linear_test, matrix_test)
from distinctseq.algorithms import bucket_count, is_permutation

TESTERS = (linear_test, backward_test, bucket_test)


@st.composite
def sequences(draw, max_n=64):
    n = draw(st.integers(1, max_n))
    return draw(st.lists(st.integers(1, n), min_size=n, max_size=n))


@st.composite
def near_permutations(draw, max_n=64):
    # a permutation with a few cells overwritten, so good and bad both show up
    n = draw(st.integers(1, max_n))
    s = draw(st.permutations(range(1, n + 1)))
    for _ in range(draw(st.integers(0, 2))):
        s[draw(st.integers(0, n - 1))] = draw(st.integers(1, n))
    return s


# -- hand traces ------------------------------------------------------------

def test_linear_repeat_at_two():
    out = linear_test([1, 1])
    assert not out.good
    assert out.comparisons == 2
    # lines 1, 3, 3, 8 and the g <- False at line 6
    assert out.assignments == 5
    assert out.stop_index == 2


def test_linear_permutation():
    out = linear_test([1, 2, 3])
    assert out.good and out.comparisons == 3 and out.assignments == 7
    assert out.stop_index == 3


def test_backward_examples():
    out = backward_test([1, 1])
    assert (out.good, out.comparisons, out.assignments) == (False, 1, 2)
    out = backward_test([1, 2, 3, 4])
    assert (out.good, out.comparisons, out.assignments) == (True, 6, 1)
    out = backward_test([2, 2, 1])
    assert (out.good, out.comparisons, out.stop_index) == (False, 1, 2)


def test_bucket_examples():
    for tail in itertools.product(range(1, 5), repeat=2):
        out = bucket_test((1, 1) + tail)
        assert (out.good, out.comparisons, out.stop_index) == (False, 1, 2)
    out = bucket_test([1, 2, 3, 4])
    assert out.good and out.comparisons == 2
    # 1, 2, c_1 c_2, 4 x (r, Q, c)
    assert out.assignments == 2 + 2 + 4 * 3


def test_matrix_examples():
    assert matrix_test([[1, 2], [2, 1]]).good
    out = matrix_test([[1, 1], [2, 1]])
    assert not out.good
    assert out.stop_index[:2] == ("row", 1)
    out = matrix_test([[1, 2], [1, 2]])
    assert not out.good and out.stop_index[:2] == ("column", 1)
    assert matrix_test([[1, 2], [2, 1]]).stop_index == ("column", 2, 2)


def test_matrix_scans_overlap_twice():
    M = [[1, 2], [2, 1]]
    row_cost = sum(bucket_test(r).total_ops for r in M)
    col_cost = sum(bucket_test(c).total_ops for c in zip(*M))
    assert matrix_test(M).total_ops == 1 + row_cost + col_cost


# -- validation -------------------------------------------------------------

@pytest.mark.parametrize("bad", [[0], [2], [1, 3], [], [1, 2, 3, 4, 5, -1]])
def test_out_of_range_is_an_error_not_a_verdict(bad):
    for t in TESTERS:
        with pytest.raises(InvalidInputError):
            t(bad)


def test_length_mismatch():
    with pytest.raises(InvalidInputError):
        Sequence([1, 2], n=3)
    with pytest.raises(InvalidInputError):
        SquareMatrix([[1, 2], [1]])
    with pytest.raises(InvalidInputError):
        matrix_test([[1, 2, 3], [1, 2, 3]])


def test_square_matrix_lines():
    M = SquareMatrix([[1, 2], [2, 1]])
    assert list(M.row(2)) == [2, 1]
    assert list(M.column(1)) == [1, 2]


def test_bucket_count():
    assert [bucket_count(n) for n in (1, 2, 4, 5, 9, 10, 16)] == [1, 2, 2, 3, 3, 4, 4]
    with pytest.raises(InvalidInputError):
        bucket_count(0)


# -- properties -------------------------------------------------------------

@given(st.one_of(sequences(), near_permutations()))
def test_verdicts_agree_with_sort_and_scan(s):
    want = is_permutation(s, len(s))
    assert [t(s).good for t in TESTERS] == [want] * 3


@given(st.one_of(sequences(), near_permutations()))
def test_count_bounds(s):
    n = len(s)
    lin, back, buck = (t(s) for t in TESTERS)
    assert lin.comparisons <= n
    assert back.comparisons <= comb(n, 2) or (n == 1 and back.comparisons == 0)
    m = bucket_count(n)
    if m * m == n:
        assert buck.comparisons <= m * comb(m, 2)
    # the cost model makes every Linear run satisfy A = n + 1 + C
    assert lin.assignments == n + 1 + lin.comparisons


@given(st.one_of(sequences(), near_permutations()))
def test_stop_index_semantics(s):
    n = len(s)
    for t in TESTERS:
        out = t(s)
        k = out.stop_index
        if out.good:
            assert k == n
        else:
            assert len(set(s[:k])) < k
            assert len(set(s[:k - 1])) == k - 1


@given(sequences(max_n=20))
def test_determinism(s):
    for t in TESTERS:
        assert t(s) == t(list(s))


@settings(max_examples=50)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(1, n), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_matrix_verdict(M):
    n = len(M)
    want = all(is_permutation(r, n) for r in M) and all(is_permutation(c, n) for c in zip(*M))
    assert matrix_test(M).good == want


def test_verdict_agreement_exhaustive():
    for n in range(1, 6):
        for s in itertools.product(range(1, n + 1), repeat=n):
            g = is_permutation(s, n)
            assert linear_test(s).good == backward_test(s).good == bucket_test(s).good == g


def test_worst_cases_at_64():
    ident = list(range(1, 65))
    assert linear_test(ident).comparisons == 64
    assert backward_test(ident).comparisons == comb(64, 2)
    m = isqrt(64)
    assert bucket_test(ident).comparisons == m * comb(m, 2)


def test_counters_total():
    out = bucket_test([3, 1, 2])
    assert out.total_ops == out.comparisons + out.assignments
    assert (out.counters + out.counters).total_ops == 2 * out.total_ops
