"""Exact engine for three families of tame bound quiver algebras over F2.

Builds the algebras, their modules and homological data, enumerates the
small brick modules, runs the mod-2 deformation classification, and
verifies the companion Witt-ring identities at truncated 2-adic
precision.
"""

from .presentations import (
    BoundQuiverAlgebra,
    UnsupportedParameter,
    build_algebra,
    cartan_from_decomposition,
    check_pi_lambda,
    decomposition_matrix,
    quotient_surjection_words,
)
from .reps import (
    QuiverRep,
    end_dim,
    ext1,
    hom,
    inflate,
    is_isomorphic,
    omega,
    omega_inv,
    projective,
    simple,
    stable_end_dim,
    string_module,
)
from .bricks import atlas, atlas_report, completeness_sweep
from .deformation import classify_all, deformation_report
from .verify import run_suites
from .witt import PrecisionMismatch, WittPoly, WittScalar
from .wittrings import SPrime, p_poly, verify_lemma_tower

__version__ = "0.1.0"

__all__ = [
    "BoundQuiverAlgebra",
    "PrecisionMismatch",
    "QuiverRep",
    "SPrime",
    "UnsupportedParameter",
    "WittPoly",
    "WittScalar",
    "atlas",
    "atlas_report",
    "build_algebra",
    "cartan_from_decomposition",
    "check_pi_lambda",
    "classify_all",
    "completeness_sweep",
    "decomposition_matrix",
    "deformation_report",
    "end_dim",
    "ext1",
    "hom",
    "inflate",
    "is_isomorphic",
    "omega",
    "omega_inv",
    "p_poly",
    "projective",
    "quotient_surjection_words",
    "run_suites",
    "simple",
    "stable_end_dim",
    "string_module",
    "verify_lemma_tower",
    "__version__",
]
