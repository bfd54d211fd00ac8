"""Signals, recurrence models, and the shared error metric.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, NumericOverflowError


def _as_readonly_array(values, what: str) -> np.ndarray:
    """Copy ``values`` into a locked float64 array, rejecting NaN/Inf."""
    arr = np.array(values, dtype=float)
    if arr.ndim != 1:
        raise InvalidArgumentError(f"{what} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise InvalidArgumentError(f"{what} contains a non-finite value at index {bad}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Grid:
    """Equidistant sampling positions x_j = start + j * step."""

    start: float
    step: float

    def __post_init__(self):
        if not (np.isfinite(self.start) and np.isfinite(self.step)):
            raise InvalidArgumentError("grid start and step must be finite")
        if self.step <= 0:
            raise InvalidArgumentError(f"grid step must be positive, got {self.step}")


@dataclass(frozen=True)
class Signal:
    """A finite sequence of real samples f(0)..f(N-1).

    Samples are stored as a read-only float64 array. The optional grid records
    where the samples sit when the signal was cut from a continuous function.
    """

    samples: np.ndarray
    grid: Grid | None = None

    def __post_init__(self):
        arr = _as_readonly_array(self.samples, "signal")
        if arr.size < 1:
            raise InvalidArgumentError("signal must contain at least one sample")
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def sup_norm(self) -> float:
        return float(np.abs(self.samples).max())


@dataclass(frozen=True)
class LpCoefficients:
    """Recurrence weights a_1..a_p of f(n) = sum_{k=1..p} a_k f(n-k)."""

    a: np.ndarray

    def __post_init__(self):
        arr = _as_readonly_array(self.a, "coefficients")
        if arr.size < 1:
            raise InvalidArgumentError("recurrence order must be at least 1")
        object.__setattr__(self, "a", arr)

    @property
    def p(self) -> int:
        """Recurrence order."""
        return self.a.size


@dataclass(frozen=True)
class LpModel:
    """A recurrence together with the seed values f(0)..f(p-1)."""

    coefficients: LpCoefficients
    initial: np.ndarray

    def __post_init__(self):
        arr = _as_readonly_array(self.initial, "initial values")
        if arr.size != self.coefficients.p:
            raise InvalidArgumentError(
                f"expected {self.coefficients.p} initial values, got {arr.size}"
            )
        object.__setattr__(self, "initial", arr)

    @property
    def p(self) -> int:
        return self.coefficients.p


@dataclass(frozen=True)
class ApproxReport:
    """Approximation quality summary attached to every constructor result.

    ``mse`` is the mean of the squared residuals over their evaluation range;
    ``bound`` is the a-priori upper bound when the construction provides one
    (DCT-1 and difference-operator constructions do, least squares does not).
    """

    mse: float
    residuals: Signal
    method: str
    order: int
    bound: float | None = None

    def __post_init__(self):
        if self.mse < 0:
            raise InvalidArgumentError("mse cannot be negative")
        if self.method not in ("least-squares", "dct-1", "diff-op"):
            raise InvalidArgumentError(f"unknown method tag {self.method!r}")
        if self.order < 1:
            raise InvalidArgumentError("order must be positive")
        if self.bound is not None and self.bound < 0:
            raise InvalidArgumentError("bound cannot be negative")


def iterate(model: LpModel, count: int) -> Signal:
    """Run the recurrence forward and return f(0)..f(count-1).

    Deterministic; raises NumericOverflowError naming the first index at which
    the iteration leaves the finite float64 range.
    """
    p = model.p
    if count < p:
        raise InvalidArgumentError(f"count must be at least the order p={p}, got {count}")
    a = model.coefficients.a
    out = np.empty(count)
    out[:p] = model.initial
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(p, count):
            value = float(a @ out[n - p:n][::-1])
            if not np.isfinite(value):
                raise NumericOverflowError(
                    f"iteration produced a non-finite value at index {n}"
                )
            out[n] = value
    return Signal(out)


def residuals(coeffs: LpCoefficients, signal: Signal) -> Signal:
    """One-step prediction residuals r(n) = f(n) - sum_k a_k f(n-k), n = p..N-1."""
    p = coeffs.p
    if len(signal) <= p:
        raise InvalidArgumentError(
            f"signal length {len(signal)} must exceed the order p={p}"
        )
    # r = convolution of f with [1, -a_1, ..., -a_p], valid part only
    kernel = np.concatenate(([1.0], -coeffs.a))
    return Signal(np.convolve(signal.samples, kernel, mode="valid"))


def mse(actual: Signal, predicted: Signal) -> float:
    """Mean squared per-sample difference between two equal-length signals."""
    if len(actual) != len(predicted):
        raise InvalidArgumentError(
            f"length mismatch: {len(actual)} vs {len(predicted)}"
        )
    diff = actual.samples - predicted.samples
    return float(np.mean(diff * diff))


def mean_square(values: np.ndarray) -> float:
    """Mean of squares; the mse convention used for residual arrays."""
    arr = np.asarray(values, dtype=float)
    return float(np.mean(arr * arr))
