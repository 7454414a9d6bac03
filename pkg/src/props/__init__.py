"""성질 검증 모듈"""
from src.props.report import PropertyReport, PropertyFailure, aggregate
from src.props.checks import (
    check_finiteness,
    check_spectrality,
    check_action_bounds,
    check_shift,
    check_ground_ring_action,
    check_continuation,
    check_triangle,
    check_module_structure,
    check_unit_corollaries,
    check_duality,
    check_novikov_action,
    check_tensor,
    check_diagonal,
    check_conjugation_stability,
    check_order_independence,
    check_oracle,
    check_method_agreement,
    check_valuation,
)
from src.props.runner import run_property_suite, require_clean

__all__ = [
    'PropertyReport',
    'PropertyFailure',
    'aggregate',
    'check_finiteness',
    'check_spectrality',
    'check_action_bounds',
    'check_shift',
    'check_ground_ring_action',
    'check_continuation',
    'check_triangle',
    'check_module_structure',
    'check_unit_corollaries',
    'check_duality',
    'check_novikov_action',
    'check_tensor',
    'check_diagonal',
    'check_conjugation_stability',
    'check_order_independence',
    'check_oracle',
    'check_method_agreement',
    'check_valuation',
    'run_property_suite',
    'require_clean',
]
