"""Fine's divisor-class functions and their indefinite quadratic form expansions."""

from .params import FineParams, InvariantError, Level, ParameterError, valid_pairs
from .series import CoefficientOverflow, PowerSeries, ProductFactor, fine_product
from .divisors import excess, fine1_coefficient, fine2_coefficient
from .quadform import representations, signed_series, quaternary_signed_count
from .verifier import VerificationReport, classify, verify, sweep

__all__ = [
    "CoefficientOverflow",
    "FineParams",
    "InvariantError",
    "Level",
    "ParameterError",
    "PowerSeries",
    "ProductFactor",
    "VerificationReport",
    "classify",
    "excess",
    "fine1_coefficient",
    "fine2_coefficient",
    "fine_product",
    "quaternary_signed_count",
    "representations",
    "signed_series",
    "sweep",
    "valid_pairs",
    "verify",
]
