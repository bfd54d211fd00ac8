"""Recurrence construction from backward differences.

The order-p difference construction predicts each sample from the alternating
binomial combination of its p predecessors; the per-sample prediction error
is exactly the p-th difference of the signal, which vanishes on samples of a
polynomial of degree below p and shrinks like h^p on smooth functions as the
sampling step h shrinks. The bound machinery tracks lambda (the even-index
binomial half-sum, 2^(p-1)) and omega (the worst sample range over any
(p+1)-wide window): |difference| <= lambda*omega per sample and
mse <= lambda^2 * omega^2 overall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .core import ApproxReport, Grid, LpCoefficients, LpModel, Signal, mean_square
from .errors import InvalidArgumentError

#: Binomial coefficients grow past exact float64 headroom beyond this order.
MAX_ORDER = 30


@dataclass(frozen=True)
class DiffBoundReport:
    """Error-bound bookkeeping for a difference construction.

    lam = sum of even-index binomial coefficients of order p (always 2^(p-1));
    omega = max over n of (max - min) of the samples in the window
    {n-p, ..., n}; the bound lam^2 * omega^2 dominates the mse, and
    lam * omega dominates every |p-th difference|.
    """

    p: int
    lam: float
    omega: float
    bound: float
    mse: float
    max_abs_diff: float


def _check_order(k: int, what: str = "order") -> None:
    if k > MAX_ORDER:
        raise InvalidArgumentError(
            f"{what} {k} exceeds the supported maximum {MAX_ORDER}"
        )


def difference_kernel(k: int) -> np.ndarray:
    """Alternating binomial weights [(-1)^i * C(k, i)] for i = 0..k."""
    if k < 0:
        raise InvalidArgumentError("difference order must be nonnegative")
    _check_order(k, "difference order")
    return np.array([(-1) ** i * math.comb(k, i) for i in range(k + 1)], dtype=float)


def binomial_half_sum(p: int) -> int:
    """Sum of the even-index binomial coefficients of order p (equals 2^(p-1))."""
    if p < 1:
        raise InvalidArgumentError("order must be at least 1")
    return sum(math.comb(p, i) for i in range(0, p + 1, 2))


def forward_difference(signal: Signal, k: int) -> Signal:
    """k-th backward difference sum_i (-1)^i C(k,i) f(m-i) for m = k..N-1."""
    if len(signal) <= k:
        raise InvalidArgumentError(
            f"signal length {len(signal)} must exceed the difference order {k}"
        )
    if k == 0:
        return Signal(signal.samples)
    return Signal(np.convolve(signal.samples, difference_kernel(k), mode="valid"))


def diff_lp_coefficients(p: int) -> LpCoefficients:
    """Closed-form recurrence weights a_k = (-1)^(k-1) * C(p, k), k = 1..p."""
    if p < 1:
        raise InvalidArgumentError("order must be at least 1")
    _check_order(p)
    return LpCoefficients(
        np.array([(-1) ** (k - 1) * math.comb(p, k) for k in range(1, p + 1)], dtype=float)
    )


def construct_diff_lp(
    signal: Signal, p: int
) -> tuple[LpModel, ApproxReport, DiffBoundReport]:
    """Build the order-p difference recurrence for a signal.

    Predictions use the true past samples (one-step prediction), so the
    residual at each n equals the p-th difference of f there. The model is
    seeded with f(0)..f(p-1) for free-running iteration, which reproduces the
    signal exactly only in the polynomial case.
    """
    f = signal.samples
    if f.size <= p:
        raise InvalidArgumentError(
            f"signal length {f.size} must exceed the order p={p}"
        )
    coeffs = diff_lp_coefficients(p)
    model = LpModel(coeffs, f[:p])

    predicted = np.convolve(f, np.concatenate(([0.0], coeffs.a)), mode="valid")
    res = Signal(f[p:] - predicted)

    windows = sliding_window_view(f, p + 1)
    omega = float((windows.max(axis=1) - windows.min(axis=1)).max())
    lam = float(binomial_half_sum(p))
    bound = lam * lam * omega * omega
    error = mean_square(res.samples)

    approx = ApproxReport(
        mse=error, residuals=res, method="diff-op", order=p, bound=bound
    )
    detail = DiffBoundReport(
        p=p,
        lam=lam,
        omega=omega,
        bound=bound,
        mse=error,
        max_abs_diff=float(np.abs(res.samples).max()),
    )
    return model, approx, detail


def sample_function(
    fn: Callable[[float], float], x_lo: float, x_hi: float, count: int
) -> Signal:
    """Sample fn at count equidistant points spanning [x_lo, x_hi]."""
    if count < 2:
        raise InvalidArgumentError("need at least two sample points")
    if not (np.isfinite(x_lo) and np.isfinite(x_hi)) or x_lo >= x_hi:
        raise InvalidArgumentError(f"bad interval [{x_lo}, {x_hi}]")
    step = (x_hi - x_lo) / (count - 1)
    xs = x_lo + step * np.arange(count)
    values = np.array([float(fn(float(x))) for x in xs])
    return Signal(values, grid=Grid(start=x_lo, step=step))


def refinement_experiment(
    fn: Callable[[float], float],
    x_lo: float,
    x_hi: float,
    p: int,
    n_values: Sequence[int],
) -> list[dict]:
    """Difference-construction error as the sampling density grows.

    For each N the function is sampled equidistantly on [x_lo, x_hi] and the
    order-p construction is run; rows carry N, mse, the largest absolute
    p-th difference, and the lambda-omega bound. For smooth functions both
    error columns shrink as N doubles.
    """
    rows = []
    for count in n_values:
        if count <= p:
            raise InvalidArgumentError(f"N={count} must exceed the order p={p}")
        sampled = sample_function(fn, x_lo, x_hi, count)
        _, approx, detail = construct_diff_lp(sampled, p)
        rows.append(
            {
                "n": int(count),
                "mse": approx.mse,
                "max_abs_diff": detail.max_abs_diff,
                "bound": detail.bound,
            }
        )
    return rows


def order_sweep(signal: Signal, p_values: Sequence[int]) -> list[dict]:
    """Difference-construction mse for each requested order.

    On samples of a degree-k polynomial the error is exactly zero for every
    p >= k + 1.
    """
    rows = []
    for p in p_values:
        _, approx, _ = construct_diff_lp(signal, p)
        rows.append({"p": int(p), "mse": approx.mse})
    return rows
