"""Endpoint implementations shared by the HTTP app and the CLI's local mode.

Each handler turns a request model into core-package calls and packages the
result as a report document (see lplab.report). Domain errors propagate to
the caller: the app maps them to HTTP statuses, the CLI to exit codes.
"""

from __future__ import annotations

import math

import numpy as np

from ..bases import BasisTerm, WeightedExpansion, WeightedTerm, synthesize
from ..core import LpCoefficients, LpModel, Signal, iterate
from ..dct1 import construct_lp_from_selection, dct1_forward, select_top_p
from ..diffop import construct_diff_lp, order_sweep, refinement_experiment, sample_function
from ..errors import InternalInvariantError, InvalidArgumentError
from ..fitting import fit, identify_bases
from ..report import build_report
from .models import (
    ConstructRequest,
    ExperimentRequest,
    FitRequest,
    ReportResponse,
    SynthRequest,
    SynthResponse,
)

#: Slack allowed when cross-checking mse against its a-priori bound.
BOUND_SLACK = 1e-12


def _expansion_terms(expansion: WeightedExpansion) -> list[dict]:
    return [
        {
            "rho": t.basis.rho,
            "theta": t.basis.theta,
            "power": t.basis.power,
            "b": t.b,
            "c": t.c,
        }
        for t in expansion.terms
    ]


def run_synth(request: SynthRequest) -> SynthResponse:
    """Generate a signal from a recurrence or a weighted basis expansion."""
    spec = request.spec
    if spec.a is not None:
        model = LpModel(LpCoefficients(np.array(spec.a)), np.array(spec.initial))
        signal = iterate(model, request.count)
    else:
        terms = []
        for (rho, theta, power), (b, c) in zip(spec.bases, spec.weights):
            terms.append(WeightedTerm(BasisTerm(rho, theta, power), b=b, c=c))
        signal = synthesize(WeightedExpansion(tuple(terms)), request.count)
    return SynthResponse(values=[float(v) for v in signal.samples])


def run_fit(request: FitRequest) -> dict:
    """Least-squares fit plus the interpolation bases it selects."""
    signal = Signal(np.array(request.values))
    coeffs, diagnostics = fit(signal, request.order, method=request.method)
    _, expansion, approx = identify_bases(signal, request.order, method=request.method)
    condition = diagnostics.condition_estimate
    return build_report(
        command="fit",
        inputs={
            "signal_length": len(signal),
            "order": request.order,
            "method": request.method,
        },
        coefficients=[float(v) for v in coeffs.a],
        bases=_expansion_terms(expansion),
        mse=approx.mse,
        diagnostics={
            "rank": diagnostics.rank,
            "condition_estimate": condition if math.isfinite(condition) else None,
            "residual_mse": diagnostics.residual_mse,
        },
    )


def _check_bound(mse: float, bound: float) -> None:
    if mse > bound + BOUND_SLACK:
        raise InternalInvariantError(
            f"mse {mse!r} exceeds its a-priori bound {bound!r}"
        )


def run_construct(request: ConstructRequest) -> dict:
    """DCT-1 or difference-operator construction with its error bound."""
    signal = Signal(np.array(request.values))
    inputs = {
        "signal_length": len(signal),
        "method": request.method,
        "order": request.order,
    }
    if request.method == "dct":
        coeffs = dct1_forward(signal)
        selection = select_top_p(coeffs, request.order)
        model, approx = construct_lp_from_selection(coeffs, selection)
        _check_bound(approx.mse, approx.bound)
        bases = [
            {
                "rho": 1.0,
                "theta": coeffs.theta(k),
                "power": 0,
                "b": float(coeffs.b[k]),
                "c": 0.0,
            }
            for k in sorted(selection.selected, key=coeffs.theta)
        ]
        diagnostics = {
            "selected": list(selection.selected),
            "rejected": list(selection.rejected),
            "model_order": model.p,
        }
    else:
        model, approx, detail = construct_diff_lp(signal, request.order)
        _check_bound(approx.mse, approx.bound)
        bases = None
        diagnostics = {
            "lambda": detail.lam,
            "omega": detail.omega,
            "max_abs_diff": detail.max_abs_diff,
        }
    return build_report(
        command="construct",
        inputs=inputs,
        coefficients=[float(v) for v in model.coefficients.a],
        initial=[float(v) for v in model.initial],
        bases=bases,
        mse=approx.mse,
        bound=approx.bound,
        diagnostics=diagnostics,
    )


#: Built-in sample functions for experiments; poly takes ascending coefficients.
_FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "linear": lambda x: x,
}


def _resolve_function(name: str, coefficients):
    if name == "poly":
        if not coefficients:
            raise InvalidArgumentError("function `poly` needs `coefficients`")
        coeffs = [float(c) for c in coefficients]

        def poly(x: float) -> float:
            acc = 0.0
            for c in reversed(coeffs):
                acc = acc * x + c
            return acc

        return poly
    try:
        return _FUNCTIONS[name]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown function {name!r}; choose sin, cos, exp, linear, or poly"
        ) from None


def run_experiment(request: ExperimentRequest) -> dict:
    """Sampling-refinement or order-sweep table for a built-in function."""
    fn = _resolve_function(request.function, request.coefficients)
    inputs: dict = {
        "kind": request.kind,
        "function": request.function,
        "x_lo": request.x_lo,
        "x_hi": request.x_hi,
    }
    if request.coefficients is not None:
        inputs["coefficients"] = [float(c) for c in request.coefficients]
    if request.kind == "refine":
        inputs["order"] = request.order
        inputs["n_values"] = list(request.n_values)
        rows = refinement_experiment(
            fn, request.x_lo, request.x_hi, request.order, request.n_values
        )
    else:
        inputs["n"] = request.n
        inputs["p_values"] = list(request.p_values)
        sampled = sample_function(fn, request.x_lo, request.x_hi, request.n)
        rows = order_sweep(sampled, request.p_values)
    return build_report(command="experiment", inputs=inputs, tables=rows)


def report_response(doc: dict) -> ReportResponse:
    return ReportResponse.model_validate(doc)
