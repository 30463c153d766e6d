"""Straight discs of the unit ball in C^2, their projectivized conormal
lifts, and moment tests for disc-wise holomorphic extendibility."""

from .boundary import (
    HermitianPolynomial,
    evaluate,
    holomorphic_defect,
    normal_form,
    reduced_basis,
    sphere_inner_product,
)
from .discs import (
    LiftPoint,
    StraightDisc,
    boundary_point,
    disc_from_lift_point,
    disc_from_line,
    disc_through_two_points,
    lift,
)
from .geometry import (
    BallAutomorphism,
    CP1Point,
    Complex2,
    apply_automorphism,
    cp1_distance,
    hermitian_inner,
    normalize_configuration,
)
from .moments import (
    ExtendibilityReport,
    LaurentPolynomial,
    extendibility_test,
    extension_value,
    lifted_value,
    numeric_moments,
    restrict_to_disc,
)
from .verification import (
    KernelReport,
    MomentMatrix,
    build_moment_matrix,
    extension_consistency,
    kernel_experiment,
    lemma_suite,
    one_point_control,
    sample_disc_family,
    two_point_probe,
)

__version__ = "0.1.0"

__all__ = [
    "BallAutomorphism",
    "CP1Point",
    "Complex2",
    "ExtendibilityReport",
    "HermitianPolynomial",
    "KernelReport",
    "LaurentPolynomial",
    "LiftPoint",
    "MomentMatrix",
    "StraightDisc",
    "apply_automorphism",
    "boundary_point",
    "build_moment_matrix",
    "cp1_distance",
    "disc_from_lift_point",
    "disc_from_line",
    "disc_through_two_points",
    "evaluate",
    "extendibility_test",
    "extension_consistency",
    "extension_value",
    "hermitian_inner",
    "holomorphic_defect",
    "kernel_experiment",
    "lemma_suite",
    "lift",
    "lifted_value",
    "normal_form",
    "normalize_configuration",
    "numeric_moments",
    "one_point_control",
    "reduced_basis",
    "restrict_to_disc",
    "sample_disc_family",
    "sphere_inner_product",
    "two_point_probe",
]
