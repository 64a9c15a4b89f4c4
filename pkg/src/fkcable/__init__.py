"""Exact two-variable series of figure-eight cables, their recursions and surgeries."""

from .alexjones import alexander_cable, colored_jones_cable, hbar_jones, mmr_check, symmetric_expansion
from .apoly import build_ahat2, m_recursion, nc_mul, recursion_for, solve_forward, verify_annihilation
from .cabling import chains, gen_cable
from .exactalg import BACKEND, LPoly, NotDivisible
from .fk_core import FkSeries, HTable, Knot, figure_eight, h_table, mirror, q1_limit
from .surgery import QSeries, SurgerySlope, laplace_zhat, zhat_for_cable

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FkSeries",
    "HTable",
    "Knot",
    "LPoly",
    "NotDivisible",
    "QSeries",
    "SurgerySlope",
    "alexander_cable",
    "build_ahat2",
    "chains",
    "colored_jones_cable",
    "figure_eight",
    "gen_cable",
    "h_table",
    "hbar_jones",
    "laplace_zhat",
    "m_recursion",
    "mirror",
    "mmr_check",
    "nc_mul",
    "q1_limit",
    "recursion_for",
    "solve_forward",
    "symmetric_expansion",
    "verify_annihilation",
    "zhat_for_cable",
]
