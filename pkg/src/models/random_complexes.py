"""시드 고정 랜덤 복합체/사이클/섭동 생성 (numpy.random.Generator)"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.coeff.base import Ring
from src.complex.base import BoundaryEntry, Chain, ChainClass, FilteredComplex, Generator, chain_axpy, make_chain_class
from src.homology.homology import boundary_matrix, homology
from src.homology.linalg import Matrix, kernel_basis
from src.utils.errors import UnsupportedRingError

logger = logging.getLogger(__name__)


def random_scalar(rng: np.random.Generator, ring: Ring, nonzero: bool = False) -> Any:
    """계수환의 작은 랜덤 원소 (F_p: 0..p-1, Z/Q: -2..2)"""
    while True:
        if ring.characteristic > 0:
            value = ring.from_int(int(rng.integers(0, ring.characteristic)))
        else:
            value = ring.from_int(int(rng.integers(-2, 3)))
        if not nonzero or not ring.is_zero(value):
            return value


def random_field_complex(rng: np.random.Generator, ring: Ring, max_generators: int = 10,
                         max_degree: int = 2) -> FilteredComplex:
    """
    랜덤 유효 복합체

    차수 순서대로 ∂u 를 '작용이 A(u) 보다 작은 아래 차수 생성원'이 생성하는
    공간과 ker ∂ 의 교집합에서 랜덤으로 고른다. 따라서 ∂² = 0 과
    엄격한 작용 감소가 구성적으로 성립한다.

    Args:
        rng: numpy Generator
        ring: 기본 계수환 (주로 체)
        max_generators: 생성원 수 상한
        max_degree: 최대 차수

    Returns:
        FilteredComplex
    """
    if ring.is_novikov:
        raise UnsupportedRingError("랜덤 복합체는 기본환 위에서만 만듭니다")

    n = int(rng.integers(1, max_generators + 1))
    generators = []
    for i in range(n):
        degree = int(rng.integers(0, max_degree + 1))
        # 반정수 작용과 동일 작용값(타이)을 모두 허용
        action = Fraction(int(rng.integers(0, 2 * n)), int(rng.integers(1, 3)))
        generators.append(Generator(f"g{i}", degree, action))

    entries: List[BoundaryEntry] = []
    for degree in range(1, max_degree + 1):
        partial = FilteredComplex(ring, tuple(generators), tuple(entries))
        for u in [g for g in generators if g.degree == degree]:
            lower = [v for v in generators if v.degree == degree - 1 and v.action < u.action]
            if not lower:
                continue
            # ∂ 를 lower 로 제한한 행렬의 핵
            d, rows, cols = boundary_matrix(partial, degree - 1)
            index = {name: j for j, name in enumerate(cols)}
            restricted = Matrix.from_columns(ring, d.rows, [d.column(index[v.name]) for v in lower])
            chain: Chain = {}
            for vector in kernel_basis(restricted):
                scalar = random_scalar(rng, ring)
                chain_axpy(ring, chain, {v.name: x for v, x in zip(lower, vector)}, scalar)
            entries.extend(BoundaryEntry(u.name, v.name, chain[v.name]) for v in lower if v.name in chain)

    return FilteredComplex(ring, tuple(generators), tuple(entries), ("random",))


def random_cycle(rng: np.random.Generator, c: FilteredComplex, degree: int,
                 with_boundary: bool = True) -> ChainClass:
    """
    랜덤 사이클: 호몰로지 기저의 랜덤 결합 (+ 랜덤 경계)

    Returns:
        ChainClass (0 사이클일 수도 있음)
    """
    ring = c.ring
    chain: Chain = {}
    for cls in homology(c, degree).classes():
        chain_axpy(ring, chain, cls.as_chain(), random_scalar(rng, ring))
    if with_boundary:
        x = {g.name: random_scalar(rng, ring) for g in c.generators_in_degree(degree + 1)}
        chain_axpy(ring, chain, c.boundary_of({k: v for k, v in x.items() if not ring.is_zero(v)}))
    return make_chain_class(c, chain.items(), degree)


def smallest_gap(c: FilteredComplex) -> Fraction:
    """경계 성분 (u → v) 의 최소 작용 차이 A(u) − A(v) (경계가 없으면 1)"""
    gaps = [c.action_of(source) - c.action_of(target)
            for source, column in c.differential.items() for target in column]
    return min(gaps) if gaps else Fraction(1)


def random_perturbation(rng: np.random.Generator, c: FilteredComplex,
                        epsilon: Optional[Fraction] = None) -> Tuple[Dict[str, Fraction], Fraction]:
    """
    필트레이션을 깨지 않는 랜덤 작용 섭동

    ε 기본값은 최소 작용 간격의 1/4 이라 |δ| ≤ ε 인 어떤 섭동도 유효하다.

    Returns:
        (생성원 → δ, ε)
    """
    epsilon = smallest_gap(c) / 4 if epsilon is None else Fraction(epsilon)
    delta = {g.name: epsilon * Fraction(int(rng.integers(-8, 9)), 8) for g in c.generators}
    return delta, epsilon


def shuffled(rng: np.random.Generator, c: FilteredComplex) -> FilteredComplex:
    """생성원 입력 순서만 섞은 복합체"""
    order = rng.permutation(len(c.generators))
    generators = tuple(c.generators[int(i)] for i in order)
    return FilteredComplex(c.ring, generators, c.boundary, c.tags, c.window)
