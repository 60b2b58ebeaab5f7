"""Dawson integral, Voigt function and Faddeeva function on the upper half-plane.

Fast double-precision evaluation via fixed-coefficient rational
approximations with a dedicated small-y branch, backed by independent
arbitrary-precision reference oracles, error-map tooling and a CLI.
"""

from .coefficients import (
    ApproximationParams,
    CoefficientSet,
    build_coefficients,
    default_params,
    high_accuracy_params,
)
from .contfrac import laplace_cf, laplace_cf_adaptive
from .core import (
    ComplexValue,
    EvalPoint,
    Region,
    dawson_complex,
    dawson_real,
    faddeeva_w,
    kappa,
    lambda_fn,
    sinc,
    voigt_K,
    voigt_L,
    voigt_small_y,
    voigt_small_y_full,
)
from .errors import (
    ConvergenceError,
    DawsonVoigtError,
    DomainError,
    InvalidParamsError,
    MissingReferenceError,
    NegativeYError,
    NonFiniteInputError,
    PrecisionError,
)
from .reference import (
    OraclePrecision,
    dawson_oracle,
    dawson_oracle_quadrature,
    w_erfc,
    w_oracle,
)

__all__ = [
    "ApproximationParams",
    "CoefficientSet",
    "ComplexValue",
    "ConvergenceError",
    "DawsonVoigtError",
    "DomainError",
    "EvalPoint",
    "InvalidParamsError",
    "MissingReferenceError",
    "NegativeYError",
    "NonFiniteInputError",
    "OraclePrecision",
    "PrecisionError",
    "Region",
    "build_coefficients",
    "dawson_complex",
    "dawson_oracle",
    "dawson_oracle_quadrature",
    "dawson_real",
    "default_params",
    "faddeeva_w",
    "high_accuracy_params",
    "kappa",
    "lambda_fn",
    "laplace_cf",
    "laplace_cf_adaptive",
    "sinc",
    "voigt_K",
    "voigt_L",
    "voigt_small_y",
    "voigt_small_y_full",
    "w_erfc",
    "w_oracle",
]

__version__ = "0.1.0"
