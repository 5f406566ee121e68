"""Exact arithmetic for the Lawrence-Bigelow homological braid representations.

The package computes, over sparse multivariate Laurent rings: the
composition-indexed bases of the twisted (co)homology of configuration
spaces of surfaces, the intersection pairings between them, the
quantum-factorial diagonal embeddings relating ordinary and locally-finite
homology, the reduced Burau and Lawrence-Krammer-Bigelow representations
with exact braid-relation and duality checks, genericity tests for
specialized local systems, and the completed group ring with its helix
classes.
"""

from .braid import (
    BraidWord,
    ConjugationCertificate,
    RepMatrix,
    braid_relations_hold,
    diagonal_conjugation_integrality,
    disc_triad,
    dual_representation,
    evaluate_word,
    generator_matrix,
)
from .completion import (
    CompletedElement,
    CompletedVector,
    Ray,
    completed_from_json,
    completed_to_json,
    equal,
    helix_class,
    include_group_ring,
    is_in_group_ring,
    is_zero,
    left_circle_helix,
    module_action,
    to_group_ring,
)
from .compositions import compositions, count, rank, unrank
from .embeddings import (
    EmbeddingMatrix,
    InjectivityCertificate,
    ReducibilityWitness,
    certify_injective,
    embedding_matrix,
    reducibility_witness,
)
from .homology import (
    FiniteChainComplex,
    ModulePresentation,
    ShapiroVerdict,
    SpecializationPoint,
    circle_cohomology,
    circle_complex,
    complex_from_json,
    complex_to_json,
    genericity_check,
    homology_ranks_at,
    shapiro_circle_check,
    shapiro_double_cover_check,
)
from .pairing import (
    PairingMatrix,
    closed_form_pairing,
    delta_pairing,
    geometric_pairing,
    geometric_pairing_matrix,
    inversions,
    local_intersection_sum,
)
from .ring import (
    ComplexApprox,
    GroupRingElement,
    Integers,
    IntegersModP,
    LaurentRing,
    Rationals,
    exact_divide,
    quantum_factorial,
    quantum_integer,
)
from .surfaces import (
    FLAVOURS,
    SIDES,
    BasisClass,
    LocalSystem,
    SurfaceTriad,
    basis,
    check_homogeneity,
    dimension,
    standard_local_system,
)

__version__ = "0.1.0"

__all__ = [
    "BasisClass",
    "BraidWord",
    "CompletedElement",
    "CompletedVector",
    "ComplexApprox",
    "ConjugationCertificate",
    "EmbeddingMatrix",
    "FLAVOURS",
    "FiniteChainComplex",
    "GroupRingElement",
    "InjectivityCertificate",
    "Integers",
    "IntegersModP",
    "LaurentRing",
    "LocalSystem",
    "ModulePresentation",
    "PairingMatrix",
    "Rationals",
    "Ray",
    "ReducibilityWitness",
    "RepMatrix",
    "SIDES",
    "ShapiroVerdict",
    "SpecializationPoint",
    "SurfaceTriad",
    "basis",
    "braid_relations_hold",
    "certify_injective",
    "check_homogeneity",
    "circle_cohomology",
    "circle_complex",
    "closed_form_pairing",
    "completed_from_json",
    "completed_to_json",
    "complex_from_json",
    "complex_to_json",
    "compositions",
    "count",
    "delta_pairing",
    "diagonal_conjugation_integrality",
    "dimension",
    "disc_triad",
    "dual_representation",
    "embedding_matrix",
    "equal",
    "evaluate_word",
    "exact_divide",
    "generator_matrix",
    "genericity_check",
    "geometric_pairing",
    "geometric_pairing_matrix",
    "helix_class",
    "homology_ranks_at",
    "include_group_ring",
    "inversions",
    "is_in_group_ring",
    "is_zero",
    "left_circle_helix",
    "local_intersection_sum",
    "module_action",
    "quantum_factorial",
    "quantum_integer",
    "rank",
    "reducibility_witness",
    "shapiro_circle_check",
    "shapiro_double_cover_check",
    "standard_local_system",
    "to_group_ring",
    "unrank",
]
