"""Positive Fox H-functions: construction, certification, evaluation, rewrites."""

from .construct import ConvolutionSpec, EpReport, build_foxh, ep_report, spec_kernels, spec_mellin
from .errors import FoxHError
from .kernels import Kernel, KernelKind, eta, kernel_eval, kernel_mellin, kernel_strip, phi, psi, varphi
from .loggamma import log_gamma
from .mbquad import EvalOptions, EvalResult, eval_h, eval_h_grid, xi_value
from .oracle import convolve_pair, eval_f, mellin_numeric
from .params import (
    CharParams,
    FoxHParams,
    MellinStrip,
    ValidationReport,
    char_params,
    mellin_strip,
    pole_separation,
    pole_separation_ok,
    validate_params,
)
from .rewrite import (
    WeightedH,
    euler_extend,
    laplace_extend,
    omega_range,
    power_arg,
    power_weight,
    product_extend,
    reciprocal,
)
from .special import (
    MacRobertParams,
    MeijerParams,
    WrightParams,
    as_macrobert,
    as_meijer,
    as_wright,
    meijer_shift,
    positive_wright,
    wright_series,
)

__version__ = "0.1.0"

__all__ = [
    "ConvolutionSpec",
    "EpReport",
    "build_foxh",
    "ep_report",
    "spec_kernels",
    "spec_mellin",
    "FoxHError",
    "Kernel",
    "KernelKind",
    "varphi",
    "phi",
    "psi",
    "eta",
    "kernel_eval",
    "kernel_mellin",
    "kernel_strip",
    "log_gamma",
    "EvalOptions",
    "EvalResult",
    "eval_h",
    "eval_h_grid",
    "xi_value",
    "convolve_pair",
    "eval_f",
    "mellin_numeric",
    "CharParams",
    "FoxHParams",
    "MellinStrip",
    "ValidationReport",
    "char_params",
    "mellin_strip",
    "pole_separation",
    "pole_separation_ok",
    "validate_params",
    "WeightedH",
    "reciprocal",
    "power_arg",
    "power_weight",
    "laplace_extend",
    "euler_extend",
    "omega_range",
    "product_extend",
    "WrightParams",
    "MacRobertParams",
    "MeijerParams",
    "as_wright",
    "positive_wright",
    "as_macrobert",
    "as_meijer",
    "meijer_shift",
    "wright_series",
]
