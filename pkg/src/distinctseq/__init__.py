"""Average-case cost analysis of permutation testers for random sequences
and matrices: instrumented algorithms, exact formulas, an exhaustive
oracle and a seeded Monte Carlo simulator."""
from .algorithms import (ALGORITHMS, CostCounters, InvalidInputError, Sequence,
                         SquareMatrix, TestOutcome, backward_test, bucket_test,
                         linear_test, matrix_test)

__version__ = "0.1.0"
