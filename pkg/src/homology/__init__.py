"""호몰로지 모듈"""
from src.homology.linalg import Matrix, SmithForm, smith_normal_form, solve, kernel_basis
from src.homology.homology import (
    HomologyBasis,
    MembershipCache,
    boundary_matrix,
    homology,
    boundary_witness,
    is_boundary,
    in_image_of_sublevel,
)

__all__ = [
    'Matrix',
    'SmithForm',
    'smith_normal_form',
    'solve',
    'kernel_basis',
    'HomologyBasis',
    'MembershipCache',
    'boundary_matrix',
    'homology',
    'boundary_witness',
    'is_boundary',
    'in_image_of_sublevel',
]
