"""Recurrence construction from a DCT-1 cosine interpolation.

A length-N signal has a unique representation
f(n) = b_0 + sum_{k=1..N-1} b_k cos(n * pi * k / (N-1)). Keeping only the p
coefficients of largest absolute value yields a cosine approximant whose
mean-square error is bounded by the sum of squares of the dropped
coefficients, and whose frequencies convert directly into characteristic
roots: k = 0 gives the root +1, k = N-1 gives -1, interior k give the pair
e^(+-i*theta_k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.fft import dct

from .bases import BasisTerm, bases_to_coefficients
from .core import ApproxReport, LpModel, Signal, mean_square
from .errors import InvalidArgumentError


@dataclass(frozen=True)
class Dct1Coefficients:
    """Cosine-sum weights b_0..b_{N-1} for frequencies theta_k = pi*k/(N-1)."""

    b: np.ndarray

    def __post_init__(self):
        arr = np.array(self.b, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise InvalidArgumentError("need at least two coefficients")
        if not np.all(np.isfinite(arr)):
            raise InvalidArgumentError("coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "b", arr)

    @property
    def length(self) -> int:
        """The source signal length N."""
        return self.b.size

    def theta(self, k: int) -> float:
        """Angular frequency of coefficient k, exact at the boundaries."""
        m = self.length - 1
        if k == 0:
            return 0.0
        if k == m:
            return math.pi
        return math.pi * k / m


@dataclass(frozen=True)
class SelectionResult:
    """Indices kept/dropped by top-|b| selection, and the dropped energy.

    ``selected`` and ``rejected`` partition the nonzero-coefficient indices,
    both ordered by decreasing |b| with ties broken toward smaller index;
    ``bound`` is the sum of squared rejected coefficients, an upper bound for
    the mean-square error of the selected approximant.
    """

    selected: tuple[int, ...]
    rejected: tuple[int, ...]
    bound: float


def dct1_forward(signal: Signal) -> Dct1Coefficients:
    """The unique cosine-sum coefficients reproducing the signal.

    Computed from the orthogonal DCT-I with endpoint reweighting; synthesis
    at n = 0..N-1 reproduces the source to within 1e-9 * (1 + max|f|) per
    sample.
    """
    f = signal.samples
    if f.size < 2:
        raise InvalidArgumentError("DCT-1 needs at least two samples")
    m = f.size - 1
    b = dct(f, type=1)
    b[0] /= 2 * m
    b[-1] /= 2 * m
    if f.size > 2:
        b[1:-1] /= m
    return Dct1Coefficients(b)


def dct1_synthesize(coeffs: Dct1Coefficients, count: int) -> Signal:
    """Evaluate the cosine sum at n = 0..count-1.

    ``count`` may exceed the source length: the cosine model extrapolates.
    """
    if count < 1:
        raise InvalidArgumentError("count must be positive")
    n = np.arange(count)[:, None]
    k = np.arange(coeffs.length)[None, :]
    table = np.cos(n * k * (math.pi / (coeffs.length - 1)))
    return Signal(table @ coeffs.b)


def select_top_p(
    coeffs: Dct1Coefficients, p: int, zero_tol: float | None = None
) -> SelectionResult:
    """Keep the p coefficients of largest absolute value.

    Coefficients with |b_k| <= zero_tol (default 1e-12 * max|b|) are treated
    as exactly zero and excluded from both sides of the partition.
    """
    if p < 1:
        raise InvalidArgumentError("p must be at least 1")
    b = coeffs.b
    if zero_tol is None:
        zero_tol = 1e-12 * float(np.abs(b).max())
    elif zero_tol < 0:
        raise InvalidArgumentError("zero_tol cannot be negative")
    nonzero = [k for k in range(b.size) if abs(b[k]) > zero_tol]
    if p > len(nonzero):
        raise InvalidArgumentError(
            f"p={p} exceeds the {len(nonzero)} nonzero coefficients"
        )
    ranked = sorted(nonzero, key=lambda k: (-abs(b[k]), k))
    rejected = ranked[p:]
    return SelectionResult(
        selected=tuple(ranked[:p]),
        rejected=tuple(rejected),
        bound=float(np.sum(b[rejected] ** 2)) if rejected else 0.0,
    )


def _selected_synthesis(
    coeffs: Dct1Coefficients, selected: tuple[int, ...], count: int
) -> np.ndarray:
    """Evaluate the selected-coefficient cosine approximant at n = 0..count-1."""
    n = np.arange(count)
    out = np.zeros(count)
    for k in selected:
        out += coeffs.b[k] * np.cos(n * coeffs.theta(k))
    return out


def construct_lp_from_selection(
    coeffs: Dct1Coefficients, sel: SelectionResult
) -> tuple[LpModel, ApproxReport]:
    """Build the recurrence iterating the selected cosine approximant.

    Selected frequencies become characteristic roots (+1 for theta=0, -1 for
    theta=pi, conjugate pairs for interior theta), so the recurrence order is
    2 * #interior + #boundary. The model is seeded with samples of the
    approximant itself, the only signal the recurrence reproduces exactly;
    the report compares the approximant to the source over n = 0..N-1 and
    carries the dropped-energy bound.
    """
    basis_terms = [BasisTerm(rho=1.0, theta=coeffs.theta(k), power=0) for k in sel.selected]
    basis_terms.sort(key=lambda t: t.theta)
    lp_coeffs = bases_to_coefficients(basis_terms)
    q = lp_coeffs.p

    n_source = coeffs.length
    approx = _selected_synthesis(coeffs, sel.selected, max(q, n_source))
    model = LpModel(lp_coeffs, approx[:q])

    source = dct1_synthesize(coeffs, n_source).samples
    res = Signal(source - approx[:n_source])
    report = ApproxReport(
        mse=mean_square(res.samples),
        residuals=res,
        method="dct-1",
        order=q,
        bound=sel.bound,
    )
    return model, report
