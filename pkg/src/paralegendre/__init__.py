"""Parabose-deformed calculus and deformed Legendre polynomials."""

from .numbers import as_parameter, bracket, bracket_factorial
from .polynomial import Poly, parity_split, poly_eval_exact, poly_eval_float
from .calculus import d_antiderivative, d_derivative, d_derivative_iter, d_integrate
from .legendre import (
    LegendreFamily,
    inner_product,
    legendre,
    legendre_explicit,
    legendre_family,
    legendre_recursion,
    legendre_rodrigues,
    moment_x,
    norm_squared,
    ode_residual,
    recursion_residuals,
)

__all__ = [
    "as_parameter",
    "bracket",
    "bracket_factorial",
    "Poly",
    "parity_split",
    "poly_eval_exact",
    "poly_eval_float",
    "d_antiderivative",
    "d_derivative",
    "d_derivative_iter",
    "d_integrate",
    "LegendreFamily",
    "inner_product",
    "legendre",
    "legendre_explicit",
    "legendre_family",
    "legendre_recursion",
    "legendre_rodrigues",
    "moment_x",
    "norm_squared",
    "ode_residual",
    "recursion_residuals",
]

__version__ = "0.1.0"
