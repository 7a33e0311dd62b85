"""Exact generating functions of sheaf-counting invariants on ruled surfaces.

The package computes, in exact rational arithmetic, the stack and
Donaldson-Thomas invariants of moduli of semistable sheaves of rank up
to three on ruled surfaces, across polarization chambers, and extracts
the intersection-cohomology Betti numbers of the moduli spaces.
"""

from .geometry import (ChernCharacter, DivisorClass, Polarization, RuledSurface,
                       delta_of_filtration, dim_moduli, discriminant,
                       euler_pairing, euler_self, is_suitable, pairing_antisym,
                       r_delta, slope_and_hilbert)
from .graded import GradedSeries, adams, mobius, plethystic_exp, plethystic_log
from .hseries import (HSeries, H_boundary, H_boundary_stack_form, H_suitable,
                      PoleError, bun_poincare, zeta_curve)
from .laurent import LaurentPoly, NonPolynomialError
from .omega import (BettiAlarmError, OmegaResult, extract_betti,
                    h_anticanonical, h_from_H, omega_from_h,
                    omega_inverse_check, omega_results)
from .ratfunc import RatFunc, laurent_from_ratfunc
from .series import GridMismatchError, TSeries
from .tables import load_golden, omega_table, verify_rows
from .wallcross import (NonTerminatingError, joyce_sign,
                        joyce_wallcross_general, wallcross_H2, wallcross_H3)

__version__ = "1.0.0"

__all__ = [
    "BettiAlarmError", "ChernCharacter", "DivisorClass", "GradedSeries",
    "GridMismatchError", "HSeries", "H_boundary", "H_boundary_stack_form",
    "H_suitable", "LaurentPoly", "NonPolynomialError", "NonTerminatingError",
    "OmegaResult", "PoleError", "Polarization", "RatFunc", "RuledSurface",
    "TSeries", "adams", "bun_poincare", "delta_of_filtration", "dim_moduli",
    "discriminant", "euler_pairing", "euler_self", "extract_betti",
    "h_anticanonical", "h_from_H", "is_suitable", "joyce_sign",
    "joyce_wallcross_general", "laurent_from_ratfunc", "load_golden", "mobius",
    "omega_from_h", "omega_inverse_check", "omega_results", "omega_table",
    "pairing_antisym", "plethystic_exp", "plethystic_log", "r_delta",
    "slope_and_hilbert", "verify_rows", "wallcross_H2", "wallcross_H3",
    "zeta_curve",
]
