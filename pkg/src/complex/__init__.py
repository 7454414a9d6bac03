"""필터 체인 복합체 모듈"""
from src.complex.base import (
    Generator,
    BoundaryEntry,
    Violation,
    ValidationReport,
    FilteredComplex,
    ChainClass,
    FilteredMap,
    ChainHomotopy,
    chain_axpy,
    make_chain_class,
    scale_class,
    add_classes,
)
from src.complex.operations import (
    validate,
    sublevel,
    dualize,
    dual_class,
    pairing,
    tensor,
    tensor_class,
    shift_actions,
    perturb_actions,
    diagonal_repackage,
    repackage_class,
)
from src.complex.novikov import (
    novikov_lift,
    materialize,
    required_window,
    to_monomial_chain,
    from_monomial_chain,
    lift_class,
    shift_class,
)

__all__ = [
    'Generator',
    'BoundaryEntry',
    'Violation',
    'ValidationReport',
    'FilteredComplex',
    'ChainClass',
    'FilteredMap',
    'ChainHomotopy',
    'chain_axpy',
    'make_chain_class',
    'scale_class',
    'add_classes',
    'validate',
    'sublevel',
    'dualize',
    'dual_class',
    'pairing',
    'tensor',
    'tensor_class',
    'shift_actions',
    'perturb_actions',
    'diagonal_repackage',
    'repackage_class',
    'novikov_lift',
    'materialize',
    'required_window',
    'to_monomial_chain',
    'from_monomial_chain',
    'lift_class',
    'shift_class',
]
