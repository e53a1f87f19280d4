"""Groebner fans, Newton non-degeneracy and toric resolutions for ideals on affine toric varieties."""

from .cones import Cone, Fan, Position, check_fan, common_refinement, dual_cone, hilbert_basis, regularize
from .gfan import GroebnerFanRestricted, groebner_cone, restricted_groebner_fan, same_class
from .nnd_resolve import NNDFailure, PreconditionError, chart_transform, is_nnd, resolve, smooth_on_torus, verify_snc
from .polynomials import QQ, FieldSpec, Ideal, Polynomial, WeightOrder, buchberger, initial_ideal, saturate
from .toric import ToricIdealSpec, ToricPolynomial, ToricRing, lift_ideal, max_weight_lift, toric_initial_ideal

__all__ = [
    "Cone", "Fan", "Position", "check_fan", "common_refinement", "dual_cone", "hilbert_basis", "regularize",
    "GroebnerFanRestricted", "groebner_cone", "restricted_groebner_fan", "same_class",
    "NNDFailure", "PreconditionError", "chart_transform", "is_nnd", "resolve", "smooth_on_torus", "verify_snc",
    "QQ", "FieldSpec", "Ideal", "Polynomial", "WeightOrder", "buchberger", "initial_ideal", "saturate",
    "ToricIdealSpec", "ToricPolynomial", "ToricRing", "lift_ideal", "max_weight_lift", "toric_initial_ideal",
]
