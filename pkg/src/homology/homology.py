"""호몰로지 계산, 경계 판정, 부분준위 이미지 판정"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Tuple

from src.complex.base import Chain, ChainClass, FilteredComplex, make_chain_class
from src.homology.linalg import Matrix, SmithForm, kernel_basis, smith_normal_form, solve
from src.utils.errors import ClassMismatchError, NotACycleError

logger = logging.getLogger(__name__)


@dataclass
class HomologyBasis:
    """
    한 차수의 호몰로지 기저

    Attributes:
        degree: 차수
        free_part: 자유 부분 대표 사이클
        torsion_part: (대표 사이클, 위수) 목록 (Z 전용)
    """
    degree: int
    free_part: List[ChainClass] = field(default_factory=list)
    torsion_part: List[Tuple[ChainClass, int]] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.free_part)

    @property
    def torsion_orders(self) -> List[int]:
        return [order for _, order in self.torsion_part]

    def classes(self) -> List[ChainClass]:
        return list(self.free_part) + [cls for cls, _ in self.torsion_part]


def boundary_matrix(c: FilteredComplex, degree: int) -> Tuple[Matrix, List[str], List[str]]:
    """
    ∂: C_degree → C_{degree-1} 행렬

    Returns:
        (행렬, 행 이름 = 차수-1 생성원, 열 이름 = 차수 생성원)
    """
    rows = [g.name for g in c.generators_in_degree(degree - 1)]
    cols = [g.name for g in c.generators_in_degree(degree)]
    index = {name: i for i, name in enumerate(rows)}
    m = Matrix.zeros(c.ring, len(rows), len(cols))
    for j, name in enumerate(cols):
        for target, coeff in c.differential.get(name, {}).items():
            if target in index:
                m.data[index[target]][j] = coeff
    return m, rows, cols


def _vector(chain: Chain, names: List[str], ring) -> List[Any]:
    return [chain.get(name, ring.zero) for name in names]


def _chain(vector: List[Any], names: List[str], ring) -> Chain:
    return {name: x for name, x in zip(names, vector) if not ring.is_zero(x)}


def _check_class(c: FilteredComplex, alpha: ChainClass):
    if not alpha.belongs_to(c):
        raise ClassMismatchError("클래스가 주어진 복합체에 속하지 않습니다")
    if c.boundary_of(alpha.as_chain()):
        raise NotACycleError(f"사이클이 아닙니다: {[name for name, _ in alpha.support]}")


def homology(c: FilteredComplex, degree: int) -> HomologyBasis:
    """
    차수 degree 의 호몰로지 (대표 사이클 포함)

    체에서는 가우스 소거와 같고, Z 에서는 Smith 표준형으로 자유 계수와 꼬임 위수를 구한다.
    Novikov 복합체는 차수 슬라이스를 기본환 위로 펼쳐 계산한다.

    Args:
        c: 유효한 복합체
        degree: 차수

    Returns:
        HomologyBasis
    """
    if c.ring.is_novikov:
        return _novikov_homology(c, degree)

    ring = c.ring
    d_in, _, names = boundary_matrix(c, degree)
    d_out, _, _ = boundary_matrix(c, degree + 1)

    form = smith_normal_form(d_in)
    cycles = kernel_basis(d_in, form)
    basis = HomologyBasis(degree)
    if not cycles:
        return basis

    # 경계를 사이클 기저 좌표로: V^{-1}·b 의 rank 이후 성분
    k = len(cycles)
    coords = Matrix.zeros(ring, k, d_out.cols)
    for j in range(d_out.cols):
        y = form.V_inv.apply(d_out.column(j))
        for i in range(k):
            coords.data[i][j] = y[form.rank + i]

    quotient = smith_normal_form(coords)
    cycle_matrix = Matrix.from_columns(ring, len(names), cycles)
    for i in range(k):
        rep = cycle_matrix.apply(quotient.U_inv.column(i))
        chain = _chain(rep, names, ring)
        if i < quotient.rank:
            s = quotient.S.data[i][i]
            if ring.is_unit(s):
                continue
            cls = make_chain_class(c, chain.items(), degree, check_cycle=False)
            basis.torsion_part.append((cls, ring.norm(s)))
        else:
            basis.free_part.append(make_chain_class(c, chain.items(), degree, check_cycle=False))

    logger.debug(f"H_{degree}: rank={basis.rank} torsion={basis.torsion_orders}")
    return basis


def _novikov_homology(c: FilteredComplex, degree: int) -> HomologyBasis:
    from src.complex.novikov import degree_slice, from_monomial_chain

    flat, _ = degree_slice(c, degree)
    flat_basis = homology(flat, degree)
    result = HomologyBasis(degree)
    for cls in flat_basis.free_part:
        chain = from_monomial_chain(c, cls.as_chain())
        result.free_part.append(make_chain_class(c, chain.items(), degree, check_cycle=False))
    for cls, order in flat_basis.torsion_part:
        chain = from_monomial_chain(c, cls.as_chain())
        result.torsion_part.append((make_chain_class(c, chain.items(), degree, check_cycle=False), order))
    return result


def boundary_witness(c: FilteredComplex, z: ChainClass) -> Optional[Chain]:
    """
    ∂x = z 를 만족하는 x (없으면 None)

    Args:
        c: 복합체
        z: 사이클 클래스

    Returns:
        증인 체인 x (z = 0 이면 빈 체인)
    """
    _check_class(c, z)
    if z.is_zero_chain():
        return {}

    if c.ring.is_novikov:
        from src.complex.novikov import degree_slice, from_monomial_chain, to_monomial_chain

        chain = z.as_chain()
        flat, _ = degree_slice(c, z.degree, chain)
        flat_z = make_chain_class(flat, to_monomial_chain(chain).items(), z.degree)
        witness = boundary_witness(flat, flat_z)
        return None if witness is None else from_monomial_chain(c, witness)

    ring = c.ring
    d_out, rows, cols = boundary_matrix(c, z.degree + 1)
    x = solve(d_out, _vector(z.as_chain(), rows, ring))
    if x is None:
        return None
    return _chain(x, cols, ring)


def is_boundary(c: FilteredComplex, z: ChainClass) -> bool:
    """z ∈ im ∂ 여부 (증인은 boundary_witness)"""
    return boundary_witness(c, z) is not None


def _threshold_key(a: Any):
    from src.spectral.values import SpectralValue

    return a if isinstance(a, SpectralValue) else SpectralValue.finite(Fraction(a))


def _high_rows(c: FilteredComplex, degree: int, threshold, inclusive: bool) -> List[str]:
    """부분준위 밖(사영 대상) 생성원: 작용 ≥ a (포함형이면 > a)"""
    high = []
    for g in c.generators_in_degree(degree):
        inside = threshold.covers(g.action) if inclusive else threshold.exceeds(g.action)
        if not inside:
            high.append(g.name)
    return high


def _factorize_projection(c: FilteredComplex, degree: int, threshold, inclusive: bool):
    d_out, rows, _ = boundary_matrix(c, degree + 1)
    high = _high_rows(c, degree, threshold, inclusive)
    index = {name: i for i, name in enumerate(rows)}
    projected = d_out.select_rows([index[name] for name in high])
    return projected, high, smith_normal_form(projected)


class MembershipCache:
    """
    (복합체, 차수, 임계값)별 사영 경계 행렬 분해 캐시

    스펙트럼 스캔이 같은 경계 행렬에 여러 임계값을 질의할 때 분해를 재사용한다.
    functools.lru_cache 기반이라 여러 스레드에서 공유해도 된다.
    """

    def __init__(self, maxsize: int = 256):
        self._factorize = lru_cache(maxsize=maxsize)(_factorize_projection)

    def factorization(self, c: FilteredComplex, degree: int, threshold,
                      inclusive: bool) -> Tuple[Matrix, List[str], SmithForm]:
        return self._factorize(c, degree, threshold, inclusive)

    def cache_info(self):
        return self._factorize.cache_info()

    def clear(self):
        self._factorize.cache_clear()


DEFAULT_MEMBERSHIP_CACHE = MembershipCache()


def in_image_of_sublevel(c: FilteredComplex, a: Any, alpha: ChainClass, inclusive: bool = False,
                         cache: Optional[MembershipCache] = None) -> bool:
    """
    α ∈ im(H(V^a) → H(V)) 판정

    V^a 에 지지된 사이클 z 와 z - α ∈ im ∂ 가 존재하는지를
    π∂x = πα (π: 부분준위 밖 생성원으로의 사영) 의 가해성으로 푼다.

    Args:
        c: 복합체
        a: 임계값 (유리수 또는 ±∞)
        alpha: 사이클 클래스
        inclusive: True면 작용 ≤ a 인 생성원을 부분준위로 사용
        cache: 분해 캐시 (None이면 모듈 기본 캐시)

    Returns:
        포함 여부
    """
    _check_class(c, alpha)
    if alpha.is_zero_chain():
        return True

    chain = alpha.as_chain()
    if c.ring.is_novikov:
        from src.complex.novikov import degree_slice, to_monomial_chain

        flat, _ = degree_slice(c, alpha.degree, chain)
        flat_alpha = make_chain_class(flat, to_monomial_chain(chain).items(), alpha.degree)
        return in_image_of_sublevel(flat, a, flat_alpha, inclusive, cache)

    cache = cache or DEFAULT_MEMBERSHIP_CACHE
    threshold = _threshold_key(a)
    projected, high, form = cache.factorization(c, alpha.degree, threshold, inclusive)
    if not high:
        return True
    return solve(projected, _vector(chain, high, c.ring), form) is not None
