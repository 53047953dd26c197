"""Exact and high-precision evaluation of the expected-cost formulas."""
from .costs import (ExpectedCostReport, Interval, bucket_assignments_as_printed,
                    expected_assignments_backward, expected_assignments_bucket,
                    expected_assignments_linear, expected_assignments_matrix,
                    expected_bucket_comparisons_per_bucket, expected_bucket_occupancy,
                    expected_comparisons_backward, expected_comparisons_bucket,
                    expected_comparisons_linear, expected_comparisons_matrix,
                    expected_cost_report, expected_first_repeat_cost,
                    expected_first_repeat_cost_extended, expected_time_backward,
                    expected_time_bucket, expected_time_linear, expected_time_matrix,
                    first_repeat_cost_by_buckets)
from .errors import (ErrorTermReport, alpha, backward_time_as_printed,
                     bucket_time_as_printed, delta, error_terms, eta, eta_as_printed,
                     eta_expansion, kappa, kappa_1, kappa_2_as_printed, kappa_expansion,
                     kappa_expansion_as_printed, kappa_ratio, lambda_, lambda_as_printed,
                     mu, mu_expansion, phi, phi_as_printed, rho, rho_as_printed,
                     rho_as_printed_alt, rho_expansion, szego_sigma)
from .moments import (a_k, factorial_ratio, knuth_q_series, knuth_q_series_as_printed,
                      moment_R, moment_R_via_S, p_k, power_sum_closed_form, power_sum_S,
                      power_sum_S0_szego, power_sum_S_recurrence, q_ramanujan,
                      stirling_tau, stop_distribution)
from .numeric import (ExactValue, factorial_ratio_decimal, is_square, r1_decimal, render,
                      to_fraction, to_mpf)
