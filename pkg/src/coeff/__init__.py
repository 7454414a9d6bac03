"""계수환 모듈"""
from src.coeff.base import Ring
from src.coeff.rings import (
    IntegerRing,
    PrimeField,
    RationalField,
    NovikovRing,
    Coefficient,
    novikov_weight,
    get_ring,
)

__all__ = [
    'Ring',
    'IntegerRing',
    'PrimeField',
    'RationalField',
    'NovikovRing',
    'Coefficient',
    'novikov_weight',
    'get_ring',
]
