"""Linear prediction toolkit.

Recurrences, characteristic roots, and interpolation bases are three views of
the same object; this package converts between them, fits recurrences by
least squares, and builds them explicitly from DCT-1 coefficients or backward
differences, each with its error bound.
"""

from .bases import (
    BasisTerm,
    RootSet,
    WeightedExpansion,
    WeightedTerm,
    bases_to_coefficients,
    characteristic_polynomial,
    find_roots,
    roots_to_bases,
    solve_weights,
    synthesize,
)
from .core import (
    ApproxReport,
    Grid,
    LpCoefficients,
    LpModel,
    Signal,
    iterate,
    mse,
    residuals,
)
from .dct1 import (
    Dct1Coefficients,
    SelectionResult,
    construct_lp_from_selection,
    dct1_forward,
    dct1_synthesize,
    select_top_p,
)
from .diffop import (
    DiffBoundReport,
    binomial_half_sum,
    construct_diff_lp,
    diff_lp_coefficients,
    forward_difference,
    order_sweep,
    refinement_experiment,
    sample_function,
)
from .errors import (
    DataError,
    IllConditionedError,
    InsufficientDataError,
    InternalInvariantError,
    InvalidArgumentError,
    LpLabError,
    NumericError,
    NumericFailureError,
    NumericOverflowError,
    SignalParseError,
    UnsupportedRootError,
)
from .fitting import FitDiagnostics, fit, identify_bases

__version__ = "0.1.0"

__all__ = [
    "ApproxReport",
    "BasisTerm",
    "DataError",
    "Dct1Coefficients",
    "DiffBoundReport",
    "FitDiagnostics",
    "Grid",
    "IllConditionedError",
    "InsufficientDataError",
    "InternalInvariantError",
    "InvalidArgumentError",
    "LpCoefficients",
    "LpLabError",
    "LpModel",
    "NumericError",
    "NumericFailureError",
    "NumericOverflowError",
    "RootSet",
    "SelectionResult",
    "Signal",
    "SignalParseError",
    "UnsupportedRootError",
    "WeightedExpansion",
    "WeightedTerm",
    "bases_to_coefficients",
    "binomial_half_sum",
    "characteristic_polynomial",
    "construct_diff_lp",
    "construct_lp_from_selection",
    "dct1_forward",
    "dct1_synthesize",
    "diff_lp_coefficients",
    "find_roots",
    "fit",
    "forward_difference",
    "identify_bases",
    "iterate",
    "mse",
    "order_sweep",
    "refinement_experiment",
    "residuals",
    "roots_to_bases",
    "sample_function",
    "select_top_p",
    "solve_weights",
    "synthesize",
]
