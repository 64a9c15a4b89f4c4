"""Exact integer Laurent polynomials on fractional grids and hbar series."""

from .hbar import HbarSeries, InconsistentSamples, NPoly, hbar_expand_qpow, interpolate_npoly
from .kernels import BACKEND
from .lpoly import GridError, LPoly, NotDivisible, lp_arith, lp_div_exact, lp_invert_q

__all__ = [
    "BACKEND",
    "GridError",
    "HbarSeries",
    "InconsistentSamples",
    "LPoly",
    "NPoly",
    "NotDivisible",
    "hbar_expand_qpow",
    "interpolate_npoly",
    "lp_arith",
    "lp_div_exact",
    "lp_invert_q",
]
