"""Darboux polynomials, rational first integrals and integrating factors."""

from fractions import Fraction

from ._darbouxkit import (
    Derivation,
    InternalInconsistency,
    ParseError,
    cofactor_of,
    degree_bound,
    extactic_curve,
    factor,
    gen_exponential_example,
    gen_linear_example,
    inverse_integrating_factor,
    lagutinskii_pereira,
    normalize_polynomial,
    parse_system,
    rat_first_int,
    verify_first_integral,
)
from . import _darbouxkit as _core


def height_bound(d, n, height):
    return int(_core.height_bound(d, n, str(height)))


def _fractions(cert):
    if cert is not None:
        cert["exponents"] = [Fraction(e) for e in cert["exponents"]]
        cert["homogeneous"] = [[Fraction(x) for x in v] for v in cert["homogeneous"]]
    return cert


def solve_log_derivative(d, darboux_polynomials):
    return _fractions(_core.solve_log_derivative(d, list(darboux_polynomials)))


def solve_integrating_factor(d, darboux_polynomials):
    return _fractions(_core.solve_integrating_factor(d, list(darboux_polynomials)))


__all__ = [
    "Derivation",
    "InternalInconsistency",
    "ParseError",
    "cofactor_of",
    "degree_bound",
    "extactic_curve",
    "factor",
    "gen_exponential_example",
    "gen_linear_example",
    "height_bound",
    "inverse_integrating_factor",
    "lagutinskii_pereira",
    "normalize_polynomial",
    "parse_system",
    "rat_first_int",
    "solve_integrating_factor",
    "solve_log_derivative",
    "verify_first_integral",
]
