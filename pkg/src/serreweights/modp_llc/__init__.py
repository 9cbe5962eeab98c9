from .hecke import (
    CokerResult,
    IndElement,
    coker_I1_dimension,
    g_action,
    hecke_kernel,
    hecke_T,
    i1_generators,
    sigma_of,
    weight,
)
from .llc import IRREDUCIBLE_PS, LENGTH_TWO, SUPERSINGULAR, LLCWeights, bl_classify, llc_weights, realizable_dims
from .tree import TreeVertex, ball, coset_normal_form, hecke_coset_reps, mat, mul

__all__ = [
    "CokerResult", "IndElement", "coker_I1_dimension", "g_action", "hecke_kernel", "hecke_T",
    "i1_generators", "sigma_of", "weight", "IRREDUCIBLE_PS", "LENGTH_TWO", "SUPERSINGULAR",
    "LLCWeights", "bl_classify", "llc_weights", "realizable_dims", "TreeVertex", "ball",
    "coset_normal_form", "hecke_coset_reps", "mat", "mul",
]
