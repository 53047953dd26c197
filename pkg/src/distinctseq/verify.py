"""Self-check suite behind ``distinctseq verify``.

Each check is a named identity evaluated against the exhaustive oracle or
between two independent evaluations; nothing here raises on a mismatch.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Iterator, NamedTuple

from . import analytics as an
from . import oracle
from .analytics.numeric import ctx, render
from .simulation import SimulationConfig, simulate


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str = ""
    skipped: bool = False

    def line(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped ({self.detail})"
        status = "pass" if self.ok else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail and not self.ok
                                            else "")


def _guarded(name: str, thunk) -> CheckResult:
    """Evaluate one check; an over-budget oracle call is a skip, any other
    exception a failure."""
    try:
        out = thunk()
    except oracle.BudgetExceeded as exc:
        return CheckResult(name, True, str(exc), skipped=True)
    except Exception as exc:  # noqa: BLE001 - reported, never raised
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return CheckResult(name, *out)
    return CheckResult(name, bool(out))


_FORMULA = {
    "linear": (an.expected_comparisons_linear, an.expected_assignments_linear),
    "backward": (an.expected_comparisons_backward, an.expected_assignments_backward),
    "bucket": (an.expected_comparisons_bucket, an.expected_assignments_bucket),
}
_SYMBOL = {"linear": "L", "backward": "W", "bucket": "B"}


def _all(pred: Callable[[int], bool], ns) -> tuple[bool, str]:
    for n in ns:
        if not pred(n):
            return False, f"first failure at n={n}"
    return True, ""


def _strictly_decreasing(f, ns) -> tuple[bool, str]:
    prev = None
    for n in ns:
        v = f(n)
        if prev is not None and not v < prev:
            return False, f"not decreasing at n={n}"
        prev = v
    return True, ""


class _Oracle:
    """Memoised oracle reports so several checks can share one enumeration."""

    def __init__(self, budget: int):
        self.budget = budget
        self.cache: dict = {}

    def __call__(self, n: int, alg: str):
        key = (n, alg)
        if key not in self.cache:
            self.cache[key] = oracle.exhaustive_expectation(n, alg, self.budget)
        return self.cache[key]


def _oracle_checks(orc: _Oracle, ns, squares) -> Iterator[CheckResult]:
    for alg in ("linear", "backward", "bucket"):
        grid = list(squares if alg == "bucket" else ns)
        if not grid:
            continue
        fc, fa = _FORMULA[alg]
        sym = _SYMBOL[alg]
        for kind, f, attr in (("C", fc, "mean_comparisons"), ("A", fa, "mean_assignments")):
            def check(alg=alg, f=f, attr=attr, grid=grid):
                bad = [n for n in grid if getattr(orc(n, alg), attr) != f(n)]
                return not bad, f"mismatch at n={bad}" if bad else ""
            yield _guarded(f"{kind}_{sym}(n) == oracle for n in {grid}", check)
    lin = list(ns)
    yield _guarded(f"T_L = n + 1 + 2 C_L against oracle totals for n in {lin}",
                   lambda: all(orc(n, "linear").mean_total == an.expected_time_linear(n)
                               for n in lin))


def _oracle_value(orc, n, alg, want):
    def check():
        got = orc(n, alg).mean_comparisons
        return got == want, f"oracle gives {got}"
    return check


def fast_checks(budget: int = oracle.DEFAULT_BUDGET) -> Iterator[CheckResult]:
    orc = _Oracle(budget)
    small = range(1, 5)
    ident = range(1, 51)

    # oracle spot values
    yield _guarded("C_L(2) == 2", _oracle_value(orc, 2, "linear", 2))
    yield _guarded("C_W(3) == 19/9", _oracle_value(orc, 3, "backward", Fraction(19, 9)))
    yield _guarded("C_B(4) == 53/32", _oracle_value(orc, 4, "bucket", Fraction(53, 32)))
    yield from _oracle_checks(orc, small, (1, 4))
    yield _guarded("Pr{y=k} == p_k by enumeration for n=1..4",
                   lambda: all(oracle.stop_distribution_check(n, budget) for n in small))
    yield _guarded("first-repeat index uniform given y=k for n=1..4",
                   lambda: all(oracle.first_repeat_position_uniformity(n, budget)
                               for n in small))

    # exact identities
    yield _guarded("Σp_k = 1 for n=1..50",
                   lambda: _all(lambda n: sum(an.stop_distribution(n).values()) == 1, ident))
    yield _guarded("R_0 = 1 for n=1..50", lambda: _all(lambda n: an.moment_R(n, 0) == 1, ident))
    yield _guarded("R_1 + R_2 = 2n for n=1..50",
                   lambda: _all(lambda n: an.moment_R(n, 1) + an.moment_R(n, 2) == 2 * n,
                                ident))
    yield _guarded("R_1 = (n!/n^n) S_0 for n=1..50",
                   lambda: _all(lambda n: an.moment_R(n, 1)
                                == an.factorial_ratio(n) * an.power_sum_S(n, 0), ident))
    yield _guarded("C_L - 1 + n!/n^n = Q(n) for n=1..50",
                   lambda: _all(lambda n: an.expected_comparisons_linear(n) - 1
                                + an.factorial_ratio(n) == an.q_ramanujan(n), ident))
    yield _guarded("T_L = n + 1 + 2 C_L for n=1..50",
                   lambda: _all(lambda n: an.expected_time_linear(n)
                                == n + 1 + 2 * an.expected_comparisons_linear(n), ident))
    yield _guarded("S_i recurrence == direct sum for n=1..20, i=0..5",
                   lambda: _all(lambda n: all(an.power_sum_S_recurrence(n, i)
                                              == an.power_sum_S(n, i) for i in range(6)),
                                range(1, 21)))
    yield _guarded("S_i closed forms for i=1..3, n=1..20",
                   lambda: _all(lambda n: all(an.power_sum_closed_form(n, i)
                                              == an.power_sum_S(n, i) for i in (1, 2, 3)),
                                range(1, 21)))
    yield _guarded("R_i from S_i == R_i from p_k for n=1..20, i=0..4",
                   lambda: _all(lambda n: all(an.moment_R_via_S(n, i) == an.moment_R(n, i)
                                              for i in range(5)), range(1, 21)))
    squares100 = [m * m for m in range(1, 11)]
    yield _guarded("E{f} closed form == bucket-wise sum for n=1,4,...,100",
                   lambda: _all(lambda n: an.expected_first_repeat_cost(n)
                                == an.first_repeat_cost_by_buckets(n), squares100))

    # decimal identities
    tol = ctx.mpf(10) ** -40
    hundred = range(1, 101)
    yield _guarded("kappa = kappa_1 - sigma for n=1..100",
                   lambda: _all(lambda n: abs(an.kappa(n) - an.kappa_expansion(n)) < tol,
                                hundred))
    yield _guarded("lambda = -sigma for n=1..100",
                   lambda: _all(lambda n: abs(an.lambda_(n) + an.szego_sigma(n)) < tol,
                                hundred))
    yield _guarded("mu = (1/3 - kappa)/sqrt n for n=1..100",
                   lambda: _all(lambda n: abs(an.mu(n) - an.mu_expansion(n)) < tol, hundred))
    yield _guarded("eta expansion for square n <= 100",
                   lambda: _all(lambda n: abs(an.eta(n) - an.eta_expansion(n)) < tol,
                                squares100))
    yield _guarded("rho expansion for square n <= 100",
                   lambda: _all(lambda n: abs(an.rho(n) - an.rho_expansion(n)) < tol,
                                squares100))
    yield _guarded("1/(12n+1) < tau < 1/(12n) for n=1..100", lambda: _stirling(hundred))

    yield from _monotonicity(100)

    # matrix
    def matrix_one():
        rep, iv = orc(1, "matrix"), an.expected_time_matrix(1)
        return iv.contains(rep.mean_total), f"{rep.mean_total} vs {iv}"
    yield _guarded("matrix oracle T at n=1 inside [lower, upper]", matrix_one)
    # Latin squares: 2 of order 2, 12 of order 3
    for n, latin in ((2, 2), (3, 12)):
        def latin_check(n=n, latin=latin):
            got = orc(n, "matrix").good_probability
            return got == Fraction(latin, n ** (n * n)), f"oracle gives {got}"
        yield _guarded(f"matrix oracle Pr{{good}} = {latin}/{n}^{n * n} at n={n}", latin_check)

    # reference tables
    from .tables import build_table
    for tid in (1, 2):
        def table_check(tid=tid):
            flags = build_table(tid, range(1, 11)).flags
            return not flags, f"{len(flags)} flagged cells"
        yield _guarded(f"Table {tid} cells match the reference values for n=1..10", table_check)


def _stirling(ns):
    def ok(n):
        tau = an.stirling_tau(n)
        return ctx.mpf(1) / (12 * n + 1) < tau < ctx.mpf(1) / (12 * n)
    return _all(ok, ns)


def _monotonicity(top: int) -> Iterator[CheckResult]:
    rng = range(1, top + 1)
    for name, f in (("sigma", an.szego_sigma), ("kappa", an.kappa), ("alpha", an.alpha),
                    ("mu", an.mu)):
        yield _guarded(f"{name} strictly decreasing for n=1..{top}",
                       lambda f=f: _strictly_decreasing(f, rng))
    sq = [m * m for m in range(1, isqrt(top) + 1)]
    yield _guarded(f"eta strictly decreasing on square n <= {top}",
                   lambda: _strictly_decreasing(an.eta, sq))
    yield _guarded("delta strictly increasing for n=1..7",
                   lambda: _strictly_decreasing(lambda n: -an.delta(n), range(1, 8)))
    yield _guarded(f"delta strictly decreasing for n=8..{top}",
                   lambda: _strictly_decreasing(an.delta, range(8, top + 1)))


def full_checks(budget: int = oracle.DEFAULT_BUDGET) -> Iterator[CheckResult]:
    yield from fast_checks(budget)
    orc = _Oracle(budget)
    yield from _oracle_checks(orc, range(5, 7), ())
    yield _guarded("Pr{y=k} == p_k by enumeration for n=5",
                   lambda: oracle.stop_distribution_check(5, budget))
    yield _guarded("1/(12n+1) < tau < 1/(12n) for n=1..10^4",
                   lambda: _stirling(range(1, 10 ** 4 + 1)))

    def knuth():
        err = abs(an.to_mpf(an.q_ramanujan(1000)) - an.knuth_q_series(1000))
        return err < 1e-4, f"error {ctx.nstr(err, 3)}"
    yield _guarded("Knuth series matches Q(1000) within 1e-4", knuth)
    yield from _monotonicity(10 ** 4)

    trials = 200_000

    def mc(alg, target):
        est = simulate(SimulationConfig(10, alg, trials, 42)).comparisons
        return est.within(target), f"mean {est.mean:.6f}, SE {est.standard_error:.6f}"
    for alg, target in (("linear", an.expected_comparisons_linear(10)),
                        ("backward", an.expected_comparisons_backward(10))):
        yield _guarded(f"Monte Carlo {alg} n=10 mean within 4 SE of {render(target)}",
                       lambda alg=alg, target=target: mc(alg, target))

    def mc_matrix_two():
        exact = orc(2, "matrix").mean_comparisons
        est = simulate(SimulationConfig(2, "matrix", trials, 42)).comparisons
        return est.within(exact), f"mean {est.mean:.6f} vs {float(exact):.6f}"
    yield _guarded("Monte Carlo matrix n=2 mean within 4 SE of the oracle", mc_matrix_two)

    def mc_matrix(n):
        iv = an.expected_time_matrix(n)
        est = simulate(SimulationConfig(n, "matrix", 50_000, 42)).total
        return iv.contains(est.mean, 4 * est.standard_error), f"mean {est.mean:.4f} vs {iv}"
    for n in (4, 16):
        yield _guarded(f"Monte Carlo matrix n={n} total inside the interval +- 4 SE",
                       lambda n=n: mc_matrix(n))


def run_checks(level: str = "fast", budget: int = oracle.DEFAULT_BUDGET) -> list[CheckResult]:
    if level not in ("fast", "full"):
        raise ValueError(f"unknown level {level!r}")
    gen = fast_checks if level == "fast" else full_checks
    return list(gen(budget))
