"""골든 코퍼스 모델 생성기"""
from src.models.morse import (
    point_complex,
    interval_model,
    interval_retraction,
    morse_circle,
    morse_sphere,
    morse_torus,
    morse_rp2,
)
from src.models.floer import floer_model, periodic_orbit_model, zero_hamiltonian_model
from src.models.products import (
    ProductData,
    ModuleActionData,
    torus_intersection_product,
    unit_module_action,
    diagonal_self_action,
)
from src.models.random_complexes import (
    random_field_complex,
    random_cycle,
    random_perturbation,
    shuffled,
)

__all__ = [
    'point_complex',
    'interval_model',
    'interval_retraction',
    'morse_circle',
    'morse_sphere',
    'morse_torus',
    'morse_rp2',
    'floer_model',
    'periodic_orbit_model',
    'zero_hamiltonian_model',
    'ProductData',
    'ModuleActionData',
    'torus_intersection_product',
    'unit_module_action',
    'diagonal_self_action',
    'random_field_complex',
    'random_cycle',
    'random_perturbation',
    'shuffled',
]
