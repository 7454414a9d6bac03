"""브루트포스 스펙트럼 불변량 오라클 (F_p 전용)"""
import itertools
import logging
from typing import Optional

from src.coeff.rings import PrimeField
from src.complex.base import ChainClass, FilteredComplex, chain_axpy
from src.spectral.values import NEG_INF, SpectralValue
from src.utils.errors import ClassMismatchError, OracleCapExceededError, UnsupportedRingError

logger = logging.getLogger(__name__)


def enumeration_size(c: FilteredComplex, degree: int) -> int:
    """열거할 체인 x ∈ C_{degree+1} 의 개수 p^dim"""
    return c.ring.p ** len(c.generators_in_degree(degree + 1))


def brute_force_invariant(c: FilteredComplex, alpha: ChainClass, cap: Optional[int] = None) -> SpectralValue:
    """
    모든 대표 z = α + ∂x 를 열거해 min_z max{A(g) : g ∈ supp z} 계산

    Args:
        c: F_p 위의 복합체
        alpha: 사이클 클래스
        cap: 열거 상한 (None이면 ORACLE_ENUMERATION_CAP)

    Returns:
        SpectralValue (0 대표가 있으면 −∞)
    """
    from src.config import ORACLE_ENUMERATION_CAP

    if not isinstance(c.ring, PrimeField):
        raise UnsupportedRingError(f"오라클은 F_p 에서만 동작합니다: {c.ring.descriptor()}")
    if not alpha.belongs_to(c):
        raise ClassMismatchError("클래스가 주어진 복합체에 속하지 않습니다")

    cap = ORACLE_ENUMERATION_CAP if cap is None else cap
    size = enumeration_size(c, alpha.degree)
    if size > cap:
        raise OracleCapExceededError(f"열거 크기 {size} > 상한 {cap}")

    ring = c.ring
    names = [g.name for g in c.generators_in_degree(alpha.degree + 1)]
    columns = [c.differential.get(name, {}) for name in names]
    base = alpha.as_chain()

    best = None
    for coeffs in itertools.product(range(ring.p), repeat=len(names)):
        z = dict(base)
        for scalar, column in zip(coeffs, columns):
            if scalar:
                chain_axpy(ring, z, column, scalar)
        if not z:
            return NEG_INF
        top = max(c.action_of(name) for name in z)
        if best is None or top < best:
            best = top
    return SpectralValue.finite(best)
