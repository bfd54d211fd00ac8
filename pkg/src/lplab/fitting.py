"""Least-squares estimation of recurrence coefficients and the basis set it
implicitly selects.

The covariance method minimizes the one-step prediction error on the observed
samples directly; the autocorrelation method solves the biased-autocorrelation
Toeplitz system instead, which practitioners often prefer for stability
(roots inside the unit circle are empirically common but not guaranteed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .bases import (
    BasisTerm,
    WeightedExpansion,
    characteristic_polynomial,
    find_roots,
    roots_to_bases,
    solve_weights,
)
from .core import ApproxReport, LpCoefficients, Signal, mean_square, residuals
from .errors import (
    InsufficientDataError,
    InvalidArgumentError,
    NumericFailureError,
)

METHODS = ("covariance", "autocorrelation")


@dataclass(frozen=True)
class FitDiagnostics:
    """Numerical context of a least-squares fit.

    ``rank`` below the requested order means the minimizer was not unique and
    the minimum-norm solution was returned.
    """

    residual_mse: float
    rank: int
    condition_estimate: float
    method: str


def _prediction_matrix(f: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Design matrix with rows [f(n-1), ..., f(n-p)] and targets f(n), n = p..N-1."""
    windows = sliding_window_view(f, p)[:-1]
    return windows[:, ::-1], f[p:]


def _min_norm_solve(matrix: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, int, float]:
    """Least-squares solve returning (solution, rank, condition estimate)."""
    solution, _, rank, singular = np.linalg.lstsq(matrix, rhs, rcond=None)
    if not np.all(np.isfinite(solution)):
        raise NumericFailureError("least-squares solve produced non-finite coefficients")
    if singular.size and singular[-1] > 0:
        condition = float(singular[0] / singular[-1])
    else:
        condition = float("inf")
    return solution, int(rank), condition


def fit(signal: Signal, order: int, method: str = "covariance") -> tuple[LpCoefficients, FitDiagnostics]:
    """Least-squares estimate of the order-p recurrence coefficients.

    The covariance method (default) minimizes
    sum_{n=p..N-1} (f(n) - sum_k a_k f(n-k))^2; at full rank the minimizer is
    unique, at rank deficiency the minimum-norm minimizer is returned and the
    deficiency is flagged through ``FitDiagnostics.rank``. The reported
    ``residual_mse`` is the mean squared one-step residual on n = p..N-1 for
    both methods, so fits are comparable across methods.
    """
    if order < 1:
        raise InvalidArgumentError("order must be at least 1")
    if method not in METHODS:
        raise InvalidArgumentError(f"method must be one of {METHODS}, got {method!r}")
    f = signal.samples
    if f.size < 2 * order:
        raise InsufficientDataError(
            f"need at least 2*order = {2 * order} samples, got {f.size}"
        )

    if method == "covariance":
        matrix, rhs = _prediction_matrix(f, order)
        solution, rank, condition = _min_norm_solve(matrix, rhs)
    else:
        n = f.size
        acf = np.array(
            [float(f[: n - j] @ f[j:]) / n for j in range(order + 1)]
        )
        if not np.all(np.isfinite(acf)):
            raise NumericFailureError("autocorrelation computation overflowed")
        from scipy.linalg import toeplitz

        solution, rank, condition = _min_norm_solve(toeplitz(acf[:order]), acf[1:])

    coeffs = LpCoefficients(solution)
    res = residuals(coeffs, signal)
    diagnostics = FitDiagnostics(
        residual_mse=mean_square(res.samples),
        rank=rank,
        condition_estimate=condition,
        method=method,
    )
    return coeffs, diagnostics


def identify_bases(
    signal: Signal, order: int, method: str = "covariance"
) -> tuple[list[BasisTerm], WeightedExpansion, ApproxReport]:
    """Fit a recurrence and recover the interpolation bases it selected.

    Composes fit -> characteristic polynomial -> roots -> bases, then solves
    the basis weights from the first p samples. The report carries no bound:
    least squares comes with no a-priori error bound.
    """
    coeffs, _ = fit(signal, order, method=method)
    roots = find_roots(characteristic_polynomial(coeffs))
    basis_terms = roots_to_bases(roots)
    expansion = solve_weights(basis_terms, signal.samples[:order])
    res = residuals(coeffs, signal)
    report = ApproxReport(
        mse=mean_square(res.samples),
        residuals=res,
        method="least-squares",
        order=order,
        bound=None,
    )
    return basis_terms, expansion, report
