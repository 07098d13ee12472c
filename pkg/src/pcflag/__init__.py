"""Exact-arithmetic invariants of p-adic reflection groups.

Cyclotomic and unramified p-adic arithmetic, finite reflection group
enumeration, Molien degrees, stable-splitting idempotents and
Mayer-Vietoris spectral sequence computations for adjoint spaces.
"""

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi
from .errors import PCFlagError
from .linalg import CycMatrix
from .padic import UnramifiedPadic, embed_matrices, lift_cyclotomic_factor
from .pcompact import GradedRanks, PCompactModel, build_model, flag_poincare
from .reflection import (
    Reflection,
    ReflectionGroup,
    close_group,
    min_generating_reflections,
    minimal_primitive_order,
    molien_degrees,
    parabolic,
)

__all__ = [
    "CyclotomicNumber",
    "CycMatrix",
    "GradedRanks",
    "PCFlagError",
    "PCompactModel",
    "Reflection",
    "ReflectionGroup",
    "UnramifiedPadic",
    "build_model",
    "close_group",
    "cyclotomic_polynomial",
    "embed_matrices",
    "euler_phi",
    "flag_poincare",
    "lift_cyclotomic_factor",
    "min_generating_reflections",
    "minimal_primitive_order",
    "molien_degrees",
    "parabolic",
]

__version__ = "0.1.0"
