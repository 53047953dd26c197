from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from distinctseq import analytics as an
from distinctseq.analytics.numeric import ctx, render, to_fraction, to_mpf

SQUARES = [m * m for m in range(1, 101)]


# -- building blocks ----------------------------------------------------------

@pytest.mark.parametrize("n,want", [(1, "1.000000"), (4, "0.093750"), (10, "0.000363")])
def test_factorial_ratio(n, want):
    assert render(an.factorial_ratio(n)) == want


def test_factorial_ratio_decimal_large_n():
    n = 10 ** 4
    got = an.factorial_ratio_decimal(n)
    want = ctx.exp(ctx.loggamma(n + 1) - n * ctx.log(n))
    assert abs(got / want - 1) < ctx.mpf(10) ** -40


def test_domain_errors():
    for f in (an.factorial_ratio, an.kappa, an.expected_comparisons_linear):
        with pytest.raises(ValueError):
            f(0)
    with pytest.raises(ValueError):
        an.p_k(3, 4)
    for f in (an.expected_comparisons_bucket, an.expected_bucket_occupancy,
              an.expected_first_repeat_cost, an.expected_time_matrix, an.eta):
        with pytest.raises(ValueError):
            f(3)


def test_p_k_examples():
    assert an.p_k(1, 1) == 1
    assert an.stop_distribution(2) == {1: Fraction(1, 2), 2: Fraction(1, 2)}
    assert sum(an.stop_distribution(5).values()) == 1


@given(st.integers(1, 60))
def test_p_k_is_a_distribution(n):
    d = an.stop_distribution(n)
    assert sum(d.values()) == 1
    assert all(v > 0 for v in d.values())
    assert d[n] == an.factorial_ratio(n)


def test_power_sum_examples():
    assert an.power_sum_S(1, 0) == 1
    assert an.power_sum_S(2, 0) == 3
    for n in range(1, 21):
        s0, s1 = an.power_sum_S(n, 0), an.power_sum_S(n, 1)
        assert s1 == n * s0 - n * an.a_k(n, n - 1)


@given(st.integers(1, 25), st.integers(0, 6))
def test_power_sum_recurrence(n, i):
    assert an.power_sum_S_recurrence(n, i) == an.power_sum_S(n, i)


def test_power_sum_closed_forms():
    for n in range(1, 30):
        for i in (1, 2, 3):
            assert an.power_sum_closed_form(n, i) == an.power_sum_S(n, i)


def test_moments():
    assert an.moment_R(2, 1) == Fraction(3, 2)
    for n in range(1, 51):
        r1 = an.moment_R(n, 1)
        assert an.moment_R(n, 0) == 1
        assert r1 + an.moment_R(n, 2) == 2 * n
        assert r1 == an.factorial_ratio(n) * an.power_sum_S(n, 0)
        assert an.moment_R(n, 2) == 2 * n - an.factorial_ratio(n) * an.power_sum_S(n, 0)


@given(st.integers(1, 30), st.integers(0, 4))
def test_moments_via_power_sums(n, i):
    assert an.moment_R_via_S(n, i) == an.moment_R(n, i)


def test_q_function():
    # Q(n) = 1 + (n-1)/n + (n-1)(n-2)/n^2 + ...
    assert an.q_ramanujan(1) == 1
    assert an.q_ramanujan(2) == Fraction(3, 2)
    for n in range(1, 51):
        direct = sum(Fraction(factorial(n - 1), factorial(n - 1 - k) * n ** k)
                     for k in range(n))
        assert an.q_ramanujan(n) == direct
        assert an.expected_comparisons_linear(n) - 1 + an.factorial_ratio(n) == direct
        assert an.q_ramanujan(n) == an.moment_R(n, 1)


def test_knuth_series():
    q = to_mpf(an.q_ramanujan(1000))
    assert abs(q - an.knuth_q_series(1000)) < 1e-8
    # the coefficients without square roots and with 14/135 miss by ~3e-3
    assert abs(q - an.knuth_q_series_as_printed(1000)) > 1e-3


def test_stirling_bracket():
    for n in list(range(1, 200)) + [10 ** 3, 10 ** 4]:
        tau = an.stirling_tau(n)
        assert ctx.mpf(1) / (12 * n + 1) < tau < ctx.mpf(1) / (12 * n)


# -- Linear and Backward ------------------------------------------------------

@pytest.mark.parametrize("n,want", [(1, "1.000000"), (3, "2.666667"), (10, "4.659853")])
def test_linear_values(n, want):
    assert render(an.expected_comparisons_linear(n)) == want


def test_linear_time():
    for n in range(1, 30):
        assert an.expected_time_linear(n) == n + 1 + 2 * an.expected_comparisons_linear(n)
        assert an.expected_time_linear(n) == (an.expected_comparisons_linear(n)
                                              + an.expected_assignments_linear(n))


@pytest.mark.parametrize("n,want", [(1, "0.000000"), (7, "5.966451"), (2, "1.000000")])
def test_backward_values(n, want):
    assert render(an.expected_comparisons_backward(n)) == want


def test_backward_exact():
    assert an.expected_comparisons_backward(2) == 1
    assert an.expected_comparisons_backward(3) == Fraction(19, 9)
    assert an.expected_assignments_backward(3) == 2 - Fraction(6, 27)


def test_backward_time_closed_form_gap():
    # the n - sqrt(pi n/8) + 5/3 - alpha form is short by exactly 1 - n!/n^n
    for n in (1, 2, 5, 10, 50):
        gap = to_mpf(an.expected_time_backward(n)) - an.backward_time_as_printed(n)
        assert abs(gap - (1 - to_mpf(an.factorial_ratio(n)))) < 1e-40


@pytest.mark.parametrize("n", [1, 5, 8])
def test_sigma_kappa_values(n):
    want_sigma = {1: "0.025808", 5: "0.005799"}
    want_kappa = {1: "0.080019", 8: "0.033444"}
    if n in want_sigma:
        assert render(an.szego_sigma(n)) == want_sigma[n]
    if n in want_kappa:
        assert render(an.kappa(n)) == want_kappa[n]


def test_error_term_identities():
    tol = ctx.mpf(10) ** -40
    for n in range(1, 200):
        assert abs(an.kappa(n) - an.kappa_expansion(n)) < tol
        assert abs(an.lambda_(n) + an.szego_sigma(n)) < tol
        assert abs(an.mu(n) - an.mu_expansion(n)) < tol
        assert abs(an.alpha(n) - (an.kappa(n) / 2
                                  + to_mpf(an.factorial_ratio(n)) * (n + 1) / 2)) < tol
        assert abs(an.delta(n) - (an.kappa(n) - to_mpf(an.factorial_ratio(n)))) < tol
    assert an.szego_sigma(0) == ctx.mpf(1) / 6


def test_printed_kappa_expansion_is_off():
    # kappa_1 - kappa_2 misses kappa by far more than rounding
    assert abs(an.kappa_expansion_as_printed(10) - an.kappa(10)) > 1e-3
    assert abs(an.lambda_as_printed(10) - an.lambda_(10)) > 1e-3


def test_delta_time_identity():
    for n in range(1, 40):
        t = to_mpf(an.expected_time_linear(n))
        want = n + ctx.sqrt(2 * ctx.pi * n) + ctx.mpf(7) / 3 + 2 * an.delta(n)
        assert abs(t - want) < 1e-40


# -- Bucket -------------------------------------------------------------------

def test_bucket_occupancy():
    assert an.expected_bucket_occupancy(1) == 1
    assert render(an.expected_bucket_occupancy(4)) == "1.109375"
    for n in SQUARES[:30]:
        m = int(n ** 0.5)
        assert an.expected_bucket_occupancy(n) == Fraction(m, n) * an.moment_R(n, 1)
        assert abs(to_mpf(an.expected_bucket_occupancy(n))
                   - (ctx.sqrt(ctx.pi / 2) - an.mu(n))) < 1e-40


def test_first_repeat_cost():
    assert an.expected_first_repeat_cost_extended(1) == 1
    assert an.expected_first_repeat_cost(1) == 0
    for n in SQUARES[:12]:
        assert an.expected_first_repeat_cost(n) == an.first_repeat_cost_by_buckets(n)
        ef = to_mpf(an.expected_first_repeat_cost(n))
        assert abs(ef - (1 + ctx.sqrt(ctx.pi / 8) - an.eta(n))) < 1e-40
        assert abs(an.eta(n) - an.eta_expansion(n)) < 1e-40


def test_bucket_exact_small():
    assert an.expected_comparisons_bucket(1) == 0
    assert an.expected_comparisons_bucket(4) == Fraction(53, 32)
    assert an.expected_time_bucket(4) == Fraction(113, 8)
    assert an.expected_bucket_comparisons_per_bucket(1) == 0


def test_bucket_rho_limits():
    assert abs(an.rho(10 ** 4) + ctx.mpf(1) / 3) < 0.02
    for n in (4, 100, 2500):
        assert abs(an.rho(n) - an.rho_expansion(n)) < 1e-40
    # phi grows like -sqrt(n) under the line cost model
    assert an.phi(10 ** 4) < -50


def test_bucket_assignments_printed_double_counts():
    for n in (4, 9, 16):
        diff = an.bucket_assignments_as_printed(n) - an.expected_assignments_bucket(n)
        want = (an.expected_comparisons_bucket(n) + 3 * an.expected_first_repeat_cost(n)
                - 2 + an.factorial_ratio(n))
        assert diff == want


RATIO_TOL = {100: 0.05, 10 ** 4: 0.005}


@pytest.mark.parametrize("n", sorted(RATIO_TOL))
def test_linear_ratio(n):
    cl = to_mpf(an.expected_comparisons_linear(n)) / ctx.sqrt(ctx.pi * n / 2)
    assert abs(cl - 1) < RATIO_TOL[n]


@pytest.mark.parametrize("n", sorted(RATIO_TOL))
def test_backward_ratio(n):
    # C_W / n - 1 is about -sqrt(pi / (8 n)): 0.063 at n=100, 0.0063 at n=10^4
    cw = to_mpf(an.expected_comparisons_backward(n)) / n
    assert abs(cw - 1) < RATIO_TOL[n]


def test_bucket_ratio_at_ten_thousand():
    cb = to_mpf(an.expected_comparisons_bucket(10 ** 4)) / 100
    assert abs(cb - 1) < 0.05


@pytest.mark.parametrize("n", sorted(RATIO_TOL))
def test_bucket_ratio(n):
    cb = to_mpf(an.expected_comparisons_bucket(n)) / ctx.sqrt(n)
    assert abs(cb - 1) < RATIO_TOL[n]


# -- Matrix -------------------------------------------------------------------

def test_matrix_interval_bounds():
    tb = an.expected_time_bucket(4)
    iv = an.expected_time_matrix(4)
    p = an.factorial_ratio(4)
    assert iv.lower == 1 + tb
    assert iv.width < tb * p / (1 - p) + 4 * tb * p ** 4
    iv100 = an.expected_time_matrix(100)
    assert iv100.width < Fraction(1, 1000) * an.expected_time_bucket(100)
    one = an.expected_time_matrix(1)
    assert one.lower == 1 + an.expected_time_bucket(1)


def test_matrix_large_n_decimal():
    iv = an.expected_time_matrix(1024)
    assert iv.lower <= iv.upper
    assert abs(iv.lower - 1 - to_mpf(an.expected_time_bucket(1024))) < 1e-40


# -- reports and numerics -----------------------------------------------------

def test_cost_reports():
    for alg in ("linear", "backward", "bucket"):
        rep = an.expected_cost_report(16, alg)
        assert rep.expected_time == rep.expected_comparisons + rep.expected_assignments
    rep = an.expected_cost_report(16, "matrix")
    assert isinstance(rep.expected_time, an.Interval)
    with pytest.raises(ValueError):
        an.expected_cost_report(4, "nope")


def test_error_report_off_squares():
    rep = an.error_terms(5)
    assert rep.eta is None and rep.rho is None and rep.phi is None
    assert an.error_terms(9).eta is not None


def test_render_half_even():
    assert render(Fraction(1, 8), 2) == "0.12"
    assert render(Fraction(3, 8), 2) == "0.38"
    assert render(Fraction(-1, 3)) == "-0.333333"
    assert to_fraction(ctx.mpf("0.5")) == Fraction(1, 2)


def test_monotone_small_range():
    vals = [an.kappa(n) for n in range(1, 101)]
    assert all(a > b > 0 for a, b in zip(vals, vals[1:]))
    d = [an.delta(n) for n in range(1, 12)]
    assert all(d[i] < d[i + 1] for i in range(7))
    assert all(d[i] > d[i + 1] for i in range(7, 10))
    assert an.kappa_ratio(5) < 1


@pytest.mark.slow
def test_monotonicity_to_ten_thousand():
    top = 10 ** 4
    for f in (an.szego_sigma, an.kappa, an.alpha, an.mu):
        prev = f(1)
        for n in range(2, top + 1):
            v = f(n)
            assert v < prev, (f.__name__, n)
            prev = v
    etas = [an.eta(n) for n in SQUARES]
    assert all(a > b for a, b in zip(etas, etas[1:]))
    d = [an.delta(n) for n in range(8, top + 1)]
    assert all(a > b for a, b in zip(d, d[1:]))
