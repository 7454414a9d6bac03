"""Floer 모델: Novikov 리프트, 주기 궤도 모델, 0-해밀토니안 모델"""
import logging
from fractions import Fraction
from typing import Any, Optional, Tuple

from src.complex.base import FilteredComplex, Generator
from src.complex.novikov import novikov_lift
from src.complex.operations import validate
from src.utils.errors import FiltrationViolationError

logger = logging.getLogger(__name__)

FLOER_TAG = "floer-model"
PERIODIC_ORBIT_TAG = "periodic-orbit"
ZERO_HAMILTONIAN_TAG = "zero-hamiltonian"


def _with_tag(c: FilteredComplex, tag: str) -> FilteredComplex:
    if c.has_tag(tag):
        return c
    return FilteredComplex(c.ring, c.generators, c.boundary, c.tags + (tag,), c.window)


def floer_model(base: FilteredComplex, period_degree: int, period_action: Any,
                window: Optional[Tuple[int, int]] = None) -> FilteredComplex:
    """
    최소 Maslov 수 N, 주기 𝖠 인 단조 라그랑지안의 Floer 모델

    novikov_lift 에 'floer-model' 태그를 붙인다.
    """
    return _with_tag(novikov_lift(base, period_degree, period_action, window), FLOER_TAG)


def periodic_orbit_model(base: FilteredComplex) -> FilteredComplex:
    """해밀토니안(주변) 쪽 모델 표시. diagonal_repackage 의 입력"""
    return _with_tag(base, PERIODIC_ORBIT_TAG)


def zero_hamiltonian_model(base: FilteredComplex, period_degree: int, period_action: Any,
                           window: Optional[Tuple[int, int]] = None) -> FilteredComplex:
    """
    0-해밀토니안 모델: 모든 기저 작용을 0으로 두고 Novikov 리프트

    t^k·g 의 작용은 −k𝖠 = −ω(A) 가 되어 값매김 ν 와 ℓ 가 ν·𝖠 = ℓ 로 연결된다.
    기저 경계 성분은 작용이 같아지므로 필트레이션을 깨면 FiltrationViolationError.

    Args:
        base: 기본환 복합체
        period_degree: N
        period_action: 𝖠
        window: 단항식 윈도우

    Returns:
        'zero-hamiltonian' 태그가 붙은 Novikov 복합체
    """
    flat = FilteredComplex(base.ring, tuple(Generator(g.name, g.degree, Fraction(0)) for g in base.generators),
                           base.boundary, base.tags)
    lifted = _with_tag(novikov_lift(flat, period_degree, period_action, window), ZERO_HAMILTONIAN_TAG)
    report = validate(lifted)
    if not report.ok:
        raise FiltrationViolationError(f"0-해밀토니안 모델이 유효하지 않습니다: {report}")
    return lifted
