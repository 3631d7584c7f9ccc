"""Exact quantum cluster algebra engine with finite-field cluster characters."""

from .characters import (
    CCObject,
    FramedData,
    cc_character,
    character_of_indec_catalog,
    frame_quiver,
    framed_linear,
    principal_indecomposables,
    shifted_injective_character,
)
from .errors import (
    BudgetExceededError,
    IncompatiblePairError,
    NotDivisibleError,
    UnsupportedQuiverError,
    VerificationError,
)
from .quiverrep import (
    FingerprintTable,
    IsoClass,
    Quiver,
    Rep,
    linear_quiver,
)
from .scalars import LaurentScalar, qbinomial
from .seeds import (
    QuantumSeed,
    check_compatible,
    enumerate_cluster_variables,
    mutate_seed,
)
from .torus import (
    SkewForm,
    TorusElement,
    frame_monomial,
    frame_product_scalar,
    torus_equal_specialized,
    torus_exact_div,
    torus_mul,
    torus_pow,
)
from .verify import (
    ClusterExpression,
    ExpressionEngine,
    verify_extension_drop,
    verify_generation,
    verify_injective_shift_expansion,
    verify_product_expansion,
)

__all__ = [
    "BudgetExceededError",
    "CCObject",
    "ClusterExpression",
    "ExpressionEngine",
    "FingerprintTable",
    "FramedData",
    "IncompatiblePairError",
    "IsoClass",
    "LaurentScalar",
    "NotDivisibleError",
    "QuantumSeed",
    "Quiver",
    "Rep",
    "SkewForm",
    "TorusElement",
    "UnsupportedQuiverError",
    "VerificationError",
    "cc_character",
    "character_of_indec_catalog",
    "check_compatible",
    "enumerate_cluster_variables",
    "frame_monomial",
    "frame_product_scalar",
    "frame_quiver",
    "framed_linear",
    "linear_quiver",
    "mutate_seed",
    "principal_indecomposables",
    "qbinomial",
    "shifted_injective_character",
    "torus_equal_specialized",
    "torus_exact_div",
    "torus_mul",
    "torus_pow",
    "verify_extension_drop",
    "verify_generation",
    "verify_injective_shift_expansion",
    "verify_product_expansion",
]

__version__ = "0.1.0"
