"""Serre weights of mod-p Galois representations from tame inertial data.

Submodules: ``char_arith`` (tame characters), ``weight_core`` (Serre weights,
Jordan-Hoelder decompositions, Brauer characters), ``weight_recipe`` (local and
global weight sets, minimal weight), ``conductor`` (Artin conductors and level),
``modp_llc`` (Bruhat-Tits tree, Hecke operator, mod-p LLC bookkeeping), ``cli``.
"""

from .char_arith import LocalPlace, TameCharacter, make_character, product_of_fundamentals
from .conductor import RamificationFiltration, conductor_exponent, level
from .errors import (
    DecompositionError,
    DomainError,
    NonIntegralConductorError,
    NotIrreducibleError,
    SerreWeightError,
    TruncationError,
    UnsupportedPlaceError,
    ValidationError,
)
from .weight_core import SerreWeightLocal, WeightMultiset, jh_principal_series, jh_sym
from .weight_recipe import (
    InertialDatum,
    indecomposable,
    irreducible,
    minimal_weight,
    reducible_split,
    weights_global,
    weights_local,
)

__version__ = "0.1.0"
