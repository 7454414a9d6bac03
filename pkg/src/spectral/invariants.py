"""스펙트럼 불변량: 호몰로지/코호몰로지 ℓ, 양자 값매김, 작용 스펙트럼"""
import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from src.complex.base import Chain, ChainClass, FilteredComplex, chain_axpy, make_chain_class
from src.complex.operations import dualize
from src.homology.homology import (
    MembershipCache,
    boundary_witness,
    in_image_of_sublevel,
)
from src.spectral.values import NEG_INF, SpectralValue
from src.utils.errors import (
    ClassMismatchError,
    EngineError,
    NotACycleError,
    NovikovWindowError,
    UnsupportedRingError,
)
from src.utils.logging import log_with_extra

logger = logging.getLogger(__name__)

METHODS = ("auto", "reduction", "scan")


@dataclass(frozen=True)
class ActionSpectrum:
    """정렬된 서로 다른 작용값"""
    values: Tuple[Fraction, ...]

    def __contains__(self, value) -> bool:
        if isinstance(value, SpectralValue):
            return value.is_finite and value.value in self.values
        return Fraction(value) in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def action_spectrum(c: FilteredComplex) -> ActionSpectrum:
    """생성원 작용값의 정렬된 집합 (Novikov: 활성 윈도우 안의 단항식)"""
    if c.ring.is_novikov:
        from src.complex.novikov import materialize
        c = materialize(c)
    return ActionSpectrum(tuple(sorted({g.action for g in c.generators})))


def _check_class(c: FilteredComplex, alpha: ChainClass):
    if not alpha.belongs_to(c):
        raise ClassMismatchError("클래스가 주어진 복합체에 속하지 않습니다")
    if c.boundary_of(alpha.as_chain()):
        raise NotACycleError(f"사이클이 아닙니다: {[name for name, _ in alpha.support]}")


def _order_key(c: FilteredComplex):
    """필트레이션 순서: (작용, 입력 순서)"""
    return lambda name: (c.action_of(name), c.position[name])


def _low(chain: Chain, key) -> Optional[str]:
    return max(chain, key=key) if chain else None


def reduce_boundary(c: FilteredComplex, degree: int) -> Dict[str, Tuple[Chain, Chain]]:
    """
    ∂_{degree+1} 열의 좌→우 지속성 소거

    Returns:
        pivot 생성원 이름 → (소거된 경계 열, 그 열을 만든 degree+1 체인)
    """
    ring = c.ring
    key = _order_key(c)
    columns = sorted((g.name for g in c.generators_in_degree(degree + 1)), key=key)
    pivots: Dict[str, Tuple[Chain, Chain]] = {}
    for name in columns:
        column = dict(c.differential.get(name, {}))
        source = {name: ring.one}
        low = _low(column, key)
        while low is not None and low in pivots:
            pivot_column, pivot_source = pivots[low]
            factor = ring.neg(ring.div_unit(column[low], pivot_column[low]))
            chain_axpy(ring, column, pivot_column, factor)
            chain_axpy(ring, source, pivot_source, factor)
            low = _low(column, key)
        if low is not None:
            pivots[low] = (column, source)
    return pivots


def _reduction_invariant(c: FilteredComplex, alpha: ChainClass) -> SpectralValue:
    if not c.ring.is_field:
        raise UnsupportedRingError(f"소거 경로는 체에서만 가능합니다: {c.ring.descriptor()}")
    ring = c.ring
    key = _order_key(c)
    pivots = reduce_boundary(c, alpha.degree)
    chain = alpha.as_chain()
    low = _low(chain, key)
    while low is not None and low in pivots:
        pivot_column, _ = pivots[low]
        factor = ring.neg(ring.div_unit(chain[low], pivot_column[low]))
        chain_axpy(ring, chain, pivot_column, factor)
        low = _low(chain, key)
    if low is None:
        return NEG_INF
    return SpectralValue.finite(c.action_of(low))


def _scan_invariant(c: FilteredComplex, alpha: ChainClass,
                    cache: Optional[MembershipCache] = None) -> SpectralValue:
    if boundary_witness(c, alpha) is not None:
        return NEG_INF
    values = sorted({g.action for g in c.generators_in_degree(alpha.degree)})
    lo, hi = 0, len(values) - 1
    # 최대 작용값에서는 α 자신이 대표이므로 항상 포함
    while lo < hi:
        mid = (lo + hi) // 2
        if in_image_of_sublevel(c, values[mid], alpha, inclusive=True, cache=cache):
            hi = mid
        else:
            lo = mid + 1
    return SpectralValue.finite(values[lo])


def spectral_invariant(c: FilteredComplex, alpha: ChainClass, method: str = "auto",
                       cache: Optional[MembershipCache] = None) -> SpectralValue:
    """
    호몰로지 스펙트럼 불변량 ℓ(α) = inf{a : α ∈ im i^a}

    - 체: 지속성 소거 후 α 를 피벗 열로 탐욕적으로 줄인 최대 작용값
    - Z: 작용값에 대한 이진 탐색 (포함형 부분준위 이미지 판정)
    - Novikov: 윈도우를 넓혀 가며 두 번 연속 같은 값이 나올 때까지

    Args:
        c: 유효한 복합체
        alpha: 사이클 클래스
        method: 'auto' | 'reduction' | 'scan'
        cache: 이미지 판정 캐시

    Returns:
        SpectralValue (경계이면 −∞)
    """
    if method not in METHODS:
        raise ValueError(f"지원하지 않는 계산 방식: {method}")
    _check_class(c, alpha)
    if c.ring.is_novikov:
        value, _ = novikov_spectral_invariant(c, alpha, method=method)
        return value
    if alpha.is_zero_chain():
        return NEG_INF
    if method == "reduction" or (method == "auto" and c.ring.is_field):
        return _reduction_invariant(c, alpha)
    return _scan_invariant(c, alpha, cache)


def novikov_spectral_invariant(c: FilteredComplex, alpha: ChainClass, window=None,
                               method: str = "auto") -> Tuple[SpectralValue, int]:
    """
    Novikov 복합체의 ℓ(α) 와 안정화에 쓴 윈도우 확장 횟수

    시작 윈도우 = (사용자/기본 윈도우 ∪ α 의 거듭제곱 ∪ 차수 슬라이스 필요 윈도우).
    확장 후 값이 직전과 같으면 종료한다.

    Returns:
        (값, 확장 횟수)
    """
    from src.config import NOVIKOV_MAX_DOUBLINGS
    from src.complex.novikov import degree_slice, to_monomial_chain, widen

    _check_class(c, alpha)
    chain = alpha.as_chain()

    def evaluate(w):
        flat, used = degree_slice(c, alpha.degree, chain, w)
        flat_alpha = make_chain_class(flat, to_monomial_chain(chain).items(), alpha.degree)
        return spectral_invariant(flat, flat_alpha, method=method), used

    previous, used = evaluate(window or c.window)
    for doublings in range(1, NOVIKOV_MAX_DOUBLINGS + 1):
        current, used = evaluate(widen(used))
        if current == previous:
            log_with_extra(logger, logging.DEBUG, "Novikov 윈도우 안정화",
                           {"doublings": doublings, "window": used, "value": current.format()})
            return current, doublings
        previous = current
    raise NovikovWindowError(f"{NOVIKOV_MAX_DOUBLINGS}번 확장 후에도 값이 안정화되지 않았습니다")


def cohomological_invariant(c: FilteredComplex, cocycle: ChainClass,
                            method: str = "auto") -> SpectralValue:
    """
    코호몰로지 스펙트럼 불변량 ℓ^∨(α^∨) = −ℓ(α^∨; 반대 복합체)

    Args:
        c: 원 복합체
        cocycle: dualize(c) 의 클래스

    Returns:
        SpectralValue (코경계이면 +∞)
    """
    dual = dualize(c)
    if not cocycle.belongs_to(dual):
        raise ClassMismatchError("코사이클이 dualize(c) 에 속하지 않습니다")
    return -spectral_invariant(dual, cocycle, method=method)


def valuation(c: FilteredComplex, alpha: ChainClass, period_action: Any = None) -> SpectralValue:
    """
    양자 값매김 ν(α) = ℓ(α) / 𝖠

    Args:
        c: 0-해밀토니안 모델 (작용값이 −ω(A) 형태)
        alpha: 클래스
        period_action: 𝖠 (None이면 Novikov 환의 period_action)

    Returns:
        SpectralValue (0 클래스는 −∞)
    """
    if period_action is None:
        if not c.ring.is_novikov:
            raise EngineError("기본환 복합체의 값매김에는 𝖠 를 지정해야 합니다")
        period_action = c.ring.period_action
    period_action = Fraction(period_action)
    if period_action <= 0:
        raise EngineError(f"𝖠 는 양수여야 합니다: {period_action}")
    if not c.has_tag("zero-hamiltonian"):
        logger.warning("zero-hamiltonian 태그가 없는 복합체의 값매김입니다")
    return spectral_invariant(c, alpha) / period_action


def adapted_homology_basis(c: FilteredComplex, degree: int) -> List[Tuple[ChainClass, SpectralValue]]:
    """
    지속성 소거로 얻은 필트레이션 적응 호몰로지 기저 (체 전용)

    각 기저 원소 z_j 는 생성원 j 에서 태어나 죽지 않는 사이클이고 ℓ(z_j) = A(j).
    기저의 선형결합의 ℓ 은 0이 아닌 성분들의 ℓ 중 최댓값이다.

    Returns:
        (클래스, ℓ) 목록 (필트레이션 순서)
    """
    if not c.ring.is_field:
        raise UnsupportedRingError(f"적응 기저는 체에서만 계산합니다: {c.ring.descriptor()}")
    killed = set(reduce_boundary(c, degree))
    key = _order_key(c)
    basis = []
    # 열이 0으로 소거된 생성원이 사이클의 탄생, 이후 경계의 pivot 이 아니면 살아남음
    born = _reduce_cycles(c, degree)
    for name in sorted(born, key=key):
        if name in killed:
            continue
        cls = make_chain_class(c, born[name].items(), degree, check_cycle=False)
        basis.append((cls, SpectralValue.finite(c.action_of(name))))
    return basis


def _reduce_cycles(c: FilteredComplex, degree: int) -> Dict[str, Chain]:
    """
    ∂_degree 열을 좌→우 소거하면서 0이 된 열의 사이클 (탄생 생성원 → 사이클)

    사이클의 최대 원소(필트레이션 순서)는 탄생 생성원 자신이다.
    """
    ring = c.ring
    key = _order_key(c)
    pivots: Dict[str, Tuple[Chain, Chain]] = {}
    cycles: Dict[str, Chain] = {}
    for name in sorted((g.name for g in c.generators_in_degree(degree)), key=key):
        column = dict(c.differential.get(name, {}))
        source = {name: ring.one}
        low = _low(column, key)
        while low is not None and low in pivots:
            pivot_column, pivot_source = pivots[low]
            factor = ring.neg(ring.div_unit(column[low], pivot_column[low]))
            chain_axpy(ring, column, pivot_column, factor)
            chain_axpy(ring, source, pivot_source, factor)
            low = _low(column, key)
        if low is None:
            cycles[name] = source
        else:
            pivots[low] = (column, source)
    return cycles


def fundamental_invariant(c: FilteredComplex, unit_class: ChainClass) -> SpectralValue:
    """ℓ₊ = 단위 클래스의 스펙트럼 불변량"""
    return spectral_invariant(c, unit_class)
