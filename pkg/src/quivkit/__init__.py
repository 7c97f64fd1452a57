"""Exact representation theory of bound quiver algebras over Q and GF(p)."""

from .algebra import BoundQuiverAlgebra, StructureConstantAlgebra, build_bound_quiver_algebra, gabriel_presentation
from .ar import almost_split_sequence, ext1_dim, knit_tube, tau, tau_inverse
from .canonical import CanonicalSpec, canonical_algebra, mouth_module_E, mouth_modules
from .errors import QuivkitError
from .extensions import Branch, BranchExtensionSpec, branch_extension, one_point_coextension, one_point_extension
from .family_checks import FamilyReport, check_ms, quasi_tube_stats, standardness_via_mouth
from .field import GF, QQ
from .ideals import annihilator, ideal_identities, residual_identity, trace_ideal
from .iso import match_presentations
from .quiver import Arrow, PathElement, Quiver
from .rep import Representation, decompose, hom, injective, projective, simple
from .selfinjective import (
    AutomorphismSpec,
    OrbitAlgebra,
    RepetitiveAlgebra,
    RepetitiveAutomorphism,
    is_selfinjective,
    is_symmetric,
    orbit_algebra,
    push_down,
    trivial_extension,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "AutomorphismSpec", "BoundQuiverAlgebra", "Branch", "BranchExtensionSpec", "CanonicalSpec",
    "FamilyReport", "GF", "OrbitAlgebra", "PathElement", "QQ", "Quiver", "QuivkitError", "RepetitiveAlgebra",
    "RepetitiveAutomorphism", "Representation", "StructureConstantAlgebra", "almost_split_sequence",
    "annihilator", "branch_extension", "build_bound_quiver_algebra", "canonical_algebra", "check_ms",
    "decompose", "ext1_dim", "gabriel_presentation", "hom", "ideal_identities", "injective", "is_selfinjective",
    "is_symmetric", "knit_tube", "match_presentations", "mouth_module_E", "mouth_modules",
    "one_point_coextension", "one_point_extension", "orbit_algebra", "projective", "push_down",
    "quasi_tube_stats", "residual_identity", "simple", "standardness_via_mouth", "tau", "tau_inverse",
    "trace_ideal", "trivial_extension",
]
