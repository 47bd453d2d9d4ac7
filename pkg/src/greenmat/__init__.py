"""Green's relations, factor rank, and linear-preserver classification
for matrix monoids over the boolean and tropical semifields, with
exhaustive and seeded-randomized theorem verification at desk scale."""

__version__ = "0.1.0"

from .semiring import Semifield, SemifieldValue, MINUS_INF
from .matrix import Matrix, MonomialMatrix
from .green import GreenRelation, RankResult, factor_rank, left_residual, relate
from .linear_maps import (
    CanonicalForm,
    LinearMap,
    NonCanonical,
    UnitPermutationMap,
    classify,
    synthesize,
)

__all__ = [
    "Semifield",
    "SemifieldValue",
    "MINUS_INF",
    "Matrix",
    "MonomialMatrix",
    "GreenRelation",
    "RankResult",
    "factor_rank",
    "left_residual",
    "relate",
    "CanonicalForm",
    "LinearMap",
    "NonCanonical",
    "UnitPermutationMap",
    "classify",
    "synthesize",
]
