"""Exact computation with q-Dunkl operators and nonsymmetric Macdonald polynomials.

Everything is computed over the field Q(q, t) with no floating point.
"""

from .dunkl import apply_Di, apply_E0m, apply_phi, apply_phihat
from .hecke import apply_omega, apply_T0, apply_Ti, apply_Ti_inv, apply_Uplus, apply_Yi
from .kernel import KernelTruncation, build_0F0, build_KA, check_prop54, check_theorem52
from .macdonald import (
    CompositionStats,
    a_eta,
    composition_stats,
    nonsym_macdonald,
    nonsym_macdonald_oracle,
    symmetric_macdonald,
)
from .polyring import XPoly
from .qtfield import ONE, Q, T, ZERO, QtMonomial, QtScalar

__version__ = "0.1.0"

__all__ = [
    "QtScalar",
    "QtMonomial",
    "ZERO",
    "ONE",
    "Q",
    "T",
    "XPoly",
    "apply_Ti",
    "apply_Ti_inv",
    "apply_T0",
    "apply_omega",
    "apply_Yi",
    "apply_Uplus",
    "apply_Di",
    "apply_phi",
    "apply_phihat",
    "apply_E0m",
    "CompositionStats",
    "composition_stats",
    "nonsym_macdonald",
    "nonsym_macdonald_oracle",
    "symmetric_macdonald",
    "a_eta",
    "KernelTruncation",
    "build_KA",
    "build_0F0",
    "check_theorem52",
    "check_prop54",
]
