"""Exact Bass and Betti series computations with growth certificates."""

from .errors import BassforgeError
from .series import Polynomial, PowerSeries, RationalFunction, rf_expand
from .surd import QuadraticSurd, parse_surd

__all__ = [
    "BassforgeError",
    "Polynomial",
    "PowerSeries",
    "QuadraticSurd",
    "RationalFunction",
    "parse_surd",
    "rf_expand",
]

__version__ = "0.1.0"
