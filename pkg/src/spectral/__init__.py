"""스펙트럼 불변량 모듈"""
from src.spectral.values import SpectralValue, NEG_INF, POS_INF, parse_spectral_value
from src.spectral.invariants import (
    ActionSpectrum,
    action_spectrum,
    spectral_invariant,
    novikov_spectral_invariant,
    cohomological_invariant,
    valuation,
    adapted_homology_basis,
    fundamental_invariant,
)
from src.spectral.oracle import brute_force_invariant

__all__ = [
    'SpectralValue',
    'NEG_INF',
    'POS_INF',
    'parse_spectral_value',
    'ActionSpectrum',
    'action_spectrum',
    'spectral_invariant',
    'novikov_spectral_invariant',
    'cohomological_invariant',
    'valuation',
    'adapted_homology_basis',
    'fundamental_invariant',
    'brute_force_invariant',
]
