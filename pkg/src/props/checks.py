"""스펙트럼 불변량 공리의 유한 복합체 버전 검증"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.complex.base import ChainClass, ChainHomotopy, FilteredComplex, FilteredMap, chain_axpy, make_chain_class, scale_class
from src.complex.novikov import novikov_spectrum_contains, shift_class
from src.complex.operations import (
    diagonal_repackage,
    dualize,
    pairing,
    repackage_class,
    shift_actions,
    tensor,
    tensor_class,
)
from src.homology.homology import homology, is_boundary
from src.models.products import ProductData
from src.models.random_complexes import shuffled
from src.props.report import PropertyReport
from src.spectral.invariants import (
    action_spectrum,
    adapted_homology_basis,
    cohomological_invariant,
    novikov_spectral_invariant,
    spectral_invariant,
    valuation,
)
from src.spectral.oracle import brute_force_invariant
from src.spectral.values import NEG_INF, POS_INF, SpectralValue
from src.utils.errors import InvalidWitnessError, OracleCapExceededError, ValidationFailedError

logger = logging.getLogger(__name__)

# Novikov 윈도우 안정화에 허용하는 확장 횟수
STABLE_DOUBLINGS = 3


def describe(alpha: ChainClass) -> str:
    """클래스의 짧은 표기 (예: 'H1[1*s1+2*s2]')"""
    ring = alpha.complex.ring
    terms = "+".join(f"{ring.format(k)}*{name}" for name, k in alpha.support) or "0"
    return f"H{alpha.degree}[{terms}]"


def _transport(alpha: ChainClass, c: FilteredComplex) -> ChainClass:
    """같은 생성원 이름을 가진 다른 복합체로 클래스 옮기기"""
    return make_chain_class(c, alpha.support, alpha.degree)


def check_finiteness(c: FilteredComplex, classes: Iterable[ChainClass]) -> PropertyReport:
    """ℓ(α) = −∞ ⇔ α 가 경계"""
    report = PropertyReport("finiteness")
    for alpha in classes:
        value = spectral_invariant(c, alpha)
        boundary = is_boundary(c, alpha)
        report.record((value == NEG_INF) == boundary, describe(alpha), value, f"is_boundary={boundary}")
    return report


def check_spectrality(c: FilteredComplex, classes: Iterable[ChainClass]) -> PropertyReport:
    """유한한 ℓ 값은 작용 스펙트럼에 속함"""
    report = PropertyReport("spectrality")
    spectrum = None if c.ring.is_novikov else action_spectrum(c)
    for alpha in classes:
        value = spectral_invariant(c, alpha)
        if not value.is_finite:
            report.record(True, describe(alpha), value, "spectrum")
            continue
        if c.ring.is_novikov:
            holds = novikov_spectrum_contains(c, value.value)
        else:
            holds = value in spectrum
        report.record(holds, describe(alpha), value, "spectrum")
    return report


def check_action_bounds(c: FilteredComplex, classes: Iterable[ChainClass]) -> PropertyReport:
    """
    0이 아닌 α 에 대해 min{A(g) : |g| = |α|} ≤ ℓ(α) ≤ max{A(g) : g ∈ supp α}

    Novikov 복합체는 상한만 확인한다.
    """
    report = PropertyReport("action-bounds")
    for alpha in classes:
        value = spectral_invariant(c, alpha)
        if not value.is_finite:
            continue
        ring = c.ring
        top = max(c.term_action(name, power) for name, coeff in alpha.support
                  for power, _ in ring.power_terms(coeff))
        report.record(value <= top, describe(alpha), value, f"max(supp)={SpectralValue.finite(top)}")
        if not ring.is_novikov:
            bottom = min(g.action for g in c.generators_in_degree(alpha.degree))
            report.record(value >= bottom, describe(alpha), value, f"min(deg)={SpectralValue.finite(bottom)}")
    return report


def check_shift(c: FilteredComplex, classes: Iterable[ChainClass], s) -> PropertyReport:
    """정규화: ℓ(α; c + s) = ℓ(α; c) + s"""
    report = PropertyReport("shift")
    moved = shift_actions(c, s)
    for alpha in classes:
        lhs = spectral_invariant(moved, _transport(alpha, moved))
        rhs = spectral_invariant(c, alpha) + Fraction(s)
        report.record(lhs == rhs, f"{describe(alpha)} s={Fraction(s)}", lhs, rhs)
    return report


def check_ground_ring_action(c: FilteredComplex, classes: Iterable[ChainClass],
                             scalars: Sequence) -> PropertyReport:
    """ℓ(r·α) ≤ ℓ(α), r 가 가역원이면 등호"""
    report = PropertyReport("ground-ring-action")
    ring = c.ring
    for alpha in classes:
        base = spectral_invariant(c, alpha)
        for r in scalars:
            r = ring.normalize(r)
            value = spectral_invariant(c, scale_class(alpha, r))
            holds = value == base if ring.is_unit(r) else value <= base
            report.record(holds, f"{describe(alpha)} r={ring.format(r)}", value, base)
    return report


def check_continuation(f: FilteredMap, classes: Iterable[ChainClass]) -> PropertyReport:
    """ℓ_target(f_*α) ≤ ℓ_source(α) + shift"""
    validation = f.validate()
    if not validation.ok:
        raise ValidationFailedError(validation, "필터 사상 검증 실패")
    report = PropertyReport("continuation")
    for alpha in classes:
        lhs = spectral_invariant(f.target, f.push_class(alpha))
        rhs = spectral_invariant(f.source, alpha) + f.shift
        report.record(lhs <= rhs, describe(alpha), lhs, rhs)
    return report


def _product_check(name: str, p: ProductData, pairs: Iterable[Tuple[ChainClass, ChainClass]]) -> PropertyReport:
    report = PropertyReport(name)
    validation = p.verify()
    if not validation.ok:
        for violation in validation.violations:
            report.record(False, f"product-data {violation.kind}", violation.detail, "certified identity")
        return report
    for alpha, beta in pairs:
        lhs = spectral_invariant(p.target, p.product_class(alpha, beta))
        rhs = spectral_invariant(p.factor1, alpha) + spectral_invariant(p.factor2, beta) + p.slack
        report.record(lhs <= rhs, f"{describe(alpha)} ⋆ {describe(beta)}", lhs, rhs)
    return report


def check_triangle(p: ProductData, pairs: Iterable[Tuple[ChainClass, ChainClass]]) -> PropertyReport:
    """곱 데이터 재검증 후 ℓ(α⋆β) ≤ ℓ(α) + ℓ(β) + ε"""
    return _product_check("triangle", p, pairs)


def check_module_structure(m: ProductData, pairs: Iterable[Tuple[ChainClass, ChainClass]]) -> PropertyReport:
    """ℓ(a•α) ≤ c(a) + ℓ(α) + ε (c: 주변 복합체의 스펙트럼 불변량)"""
    return _product_check("module-structure", m, pairs)


def _unit_sign(p: ProductData, alpha: ChainClass, product: ChainClass) -> Optional[int]:
    """호몰로지에서 u⋆α = ±α 이면 그 부호, 아니면 None"""
    target = p.target
    if not alpha.belongs_to(target) or product.degree != alpha.degree:
        return None
    if target.boundary_of(product.as_chain()):
        return None
    ring = target.ring
    for sign in (1, -1):
        diff = chain_axpy(ring, dict(product.as_chain()), alpha.as_chain(), ring.from_int(-sign))
        if is_boundary(target, make_chain_class(target, diff.items(), alpha.degree)):
            return sign
    return None


def check_unit_corollaries(p: ProductData, classes: Iterable[ChainClass]) -> PropertyReport:
    """
    단위 u 가 선언된 곱 데이터의 따름정리

    - 최댓값: ℓ(u⋆α) ≤ ℓ₊ + ℓ(α) + ε
    - 비음수: 호몰로지에서 u⋆α = ±α 이고 ℓ(α) 가 유한하면 ℓ₊ + ε ≥ 0
    """
    report = PropertyReport("unit-corollaries")
    unit = p.unit_class()
    if unit is None:
        return report
    fundamental = spectral_invariant(p.factor1, unit)
    for alpha in classes:
        product = p.product_class(unit, alpha)
        value = spectral_invariant(p.target, product)
        base = spectral_invariant(p.factor2, alpha)
        rhs = fundamental + base + p.slack
        report.record(value <= rhs, f"maximum u⋆{describe(alpha)}", value, rhs)
        sign = _unit_sign(p, alpha, product)
        if sign is None:
            logger.debug(f"u⋆{describe(alpha)} ≠ ±α, 비음수 검사 생략")
            continue
        if base.is_finite:
            sign_text = "" if sign > 0 else "-"
            report.record(fundamental + p.slack >= 0, f"non-negativity via u⋆α = {sign_text}{describe(alpha)}",
                          fundamental + p.slack, 0)
    return report


def duality_sides(c: FilteredComplex, cocycle: ChainClass) -> Tuple[SpectralValue, SpectralValue]:
    """
    (ℓ^∨(α^∨), min{ℓ(b) : b 기저 클래스, <α^∨, b> ≠ 0})

    체에서는 필트레이션 적응 기저를, Z 에서는 호몰로지 기저(자유 + 꼬임)를 쓴다.
    """
    lhs = cohomological_invariant(c, cocycle)
    degree = -cocycle.degree
    ring = c.ring
    if ring.is_field:
        candidates = adapted_homology_basis(c, degree)
    else:
        candidates = [(cls, spectral_invariant(c, cls)) for cls in homology(c, degree).classes()]
    rhs = POS_INF
    for cls, value in candidates:
        if not ring.is_zero(pairing(cocycle, cls)) and value < rhs:
            rhs = value
    return lhs, rhs


def check_duality(c: FilteredComplex, cocycles: Iterable[ChainClass]) -> PropertyReport:
    """ℓ^∨(α^∨) ≤ inf{ℓ(α) : <α^∨, α> ≠ 0}, 체에서는 등호"""
    report = PropertyReport("duality")
    for cocycle in cocycles:
        lhs, rhs = duality_sides(c, cocycle)
        holds = lhs == rhs if c.ring.is_field else lhs <= rhs
        report.record(holds, describe(cocycle), lhs, rhs)
    return report


def check_novikov_action(c: FilteredComplex, classes: Iterable[ChainClass], powers: Sequence[int],
                         max_doublings: int = STABLE_DOUBLINGS) -> PropertyReport:
    """
    ℓ(t^k·α) = ℓ(α) − k𝖠

    각 값의 윈도우 안정화가 max_doublings 번 이내에 끝나는지도 함께 기록한다.
    """
    report = PropertyReport("novikov-action")
    period = c.ring.period_action

    def evaluate(cls: ChainClass, label: str) -> SpectralValue:
        value, doublings = novikov_spectral_invariant(c, cls)
        report.record(doublings <= max_doublings, f"window {label}", doublings, max_doublings)
        return value

    for alpha in classes:
        base = evaluate(alpha, describe(alpha))
        for k in powers:
            label = f"t^{k}·{describe(alpha)}"
            lhs = evaluate(shift_class(alpha, k), label)
            rhs = base - k * period
            report.record(lhs == rhs, label, lhs, rhs)
    return report


def check_tensor(c1: FilteredComplex, c2: FilteredComplex,
                 pairs: Iterable[Tuple[ChainClass, ChainClass]]) -> PropertyReport:
    """ℓ(α₁⊗α₂) ≤ ℓ(α₁) + ℓ(α₂), 체에서는 등호"""
    report = PropertyReport("tensor")
    product = tensor(c1, c2)
    for alpha1, alpha2 in pairs:
        lhs = spectral_invariant(product, tensor_class(alpha1, alpha2, product))
        rhs = spectral_invariant(c1, alpha1) + spectral_invariant(c2, alpha2)
        holds = lhs == rhs if c1.ring.is_field else lhs <= rhs
        report.record(holds, f"{describe(alpha1)} ⊗ {describe(alpha2)}", lhs, rhs)
    return report


def _basis_classes(c: FilteredComplex) -> List[ChainClass]:
    degrees = sorted({g.degree for g in c.generators})
    return [cls for d in degrees for cls in homology(c, d).classes()]


def check_diagonal(c: FilteredComplex) -> PropertyReport:
    """호몰로지 기저 클래스의 ℓ 이 diagonal_repackage 후에도 같음"""
    report = PropertyReport("diagonal")
    repackaged = diagonal_repackage(c)
    for alpha in _basis_classes(c):
        lhs = spectral_invariant(c, alpha)
        rhs = spectral_invariant(repackaged, repackage_class(alpha, repackaged))
        report.record(lhs == rhs, describe(alpha), lhs, rhs)
    return report


def _homotopy_holds(h: ChainHomotopy, first: FilteredMap, second: FilteredMap) -> bool:
    """∂h + h∂ = second∘first − id"""
    c = h.complex
    ring = c.ring
    minus_one = ring.neg(ring.one)
    for g in c.generators:
        unit = {g.name: ring.one}
        lhs = c.boundary_of(h.apply(unit))
        chain_axpy(ring, lhs, h.apply(c.boundary_of(unit)))
        rhs = second.apply(first.apply(unit))
        chain_axpy(ring, rhs, unit, minus_one)
        if chain_axpy(ring, lhs, rhs, minus_one):
            return False
    return True


def check_conjugation_stability(f: FilteredMap, g: FilteredMap, h_source: ChainHomotopy,
                                h_target: ChainHomotopy, classes: Iterable[ChainClass]) -> PropertyReport:
    """
    호모토피 동치 쌍 (f, g) 에 대해 |ℓ_source(α) − ℓ_target(f_*α)| ≤ f.shift + g.shift

    증인 호모토피가 항등식을 만족하지 않으면 InvalidWitnessError.
    """
    for m in (f, g):
        validation = m.validate()
        if not validation.ok:
            raise InvalidWitnessError(f"필터 사상이 유효하지 않습니다: {validation}")
    if not _homotopy_holds(h_source, f, g):
        raise InvalidWitnessError("∂h + h∂ = g∘f − id 가 성립하지 않습니다")
    if not _homotopy_holds(h_target, g, f):
        raise InvalidWitnessError("∂h' + h'∂ = f∘g − id 가 성립하지 않습니다")

    report = PropertyReport("conjugation-stability")
    for alpha in classes:
        before = spectral_invariant(f.source, alpha)
        after = spectral_invariant(f.target, f.push_class(alpha))
        if before.is_finite and after.is_finite:
            # 샌드위치 −g.shift ≤ Δ ≤ f.shift (두 shift 가 음이 아니면 |Δ| ≤ 합)
            delta = after.value - before.value
            holds = -g.shift <= delta <= f.shift
            report.record(holds, describe(alpha), SpectralValue.finite(delta),
                          f"[{SpectralValue.finite(-g.shift)}, {SpectralValue.finite(f.shift)}]")
        else:
            report.record(before == after, describe(alpha), before, after)
    return report


def check_order_independence(c: FilteredComplex, classes: Sequence[ChainClass],
                             rng: np.random.Generator, shuffles: int = 20) -> PropertyReport:
    """생성원 입력 순서를 섞어도 ℓ 이 변하지 않음"""
    report = PropertyReport("order-independence")
    expected = [spectral_invariant(c, alpha) for alpha in classes]
    for _ in range(shuffles):
        permuted = shuffled(rng, c)
        for alpha, value in zip(classes, expected):
            moved = spectral_invariant(permuted, _transport(alpha, permuted))
            report.record(moved == value, describe(alpha), moved, value)
    return report


def check_oracle(c: FilteredComplex, classes: Iterable[ChainClass], cap: Optional[int] = None) -> PropertyReport:
    """spectral_invariant = brute_force_invariant (열거 상한 초과 인스턴스는 건너뜀)"""
    report = PropertyReport("oracle")
    for alpha in classes:
        try:
            expected = brute_force_invariant(c, alpha, cap)
        except OracleCapExceededError as e:
            logger.debug(f"오라클 건너뜀: {e}")
            continue
        value = spectral_invariant(c, alpha)
        report.record(value == expected, describe(alpha), value, expected)
    return report


def check_method_agreement(c: FilteredComplex, classes: Iterable[ChainClass]) -> PropertyReport:
    """체에서 소거 경로와 이미지 스캔 경로가 같은 값"""
    report = PropertyReport("method-agreement")
    for alpha in classes:
        fast = spectral_invariant(c, alpha, method="reduction")
        reference = spectral_invariant(c, alpha, method="scan")
        report.record(fast == reference, describe(alpha), fast, reference)
    return report


def chain_valuation(c: FilteredComplex, alpha: ChainClass) -> SpectralValue:
    """대표 체인 자체의 값매김 max{−k : t^k 항이 존재} (0 체인은 −∞)"""
    powers = [k for _, coeff in alpha.support for k, _ in coeff]
    if not powers:
        return NEG_INF
    return SpectralValue.finite(-min(powers))


def check_valuation(c: FilteredComplex, classes: Iterable[ChainClass]) -> PropertyReport:
    """
    0-해밀토니안 모델에서 ν(α)·𝖠 = ℓ(α) 와 ν(α) ≤ ν(대표 체인)

    기저 경계가 0 이면 대표가 유일하므로 ν(α) = ν(대표 체인).
    """
    report = PropertyReport("valuation")
    period = c.ring.period_action
    flat_boundary = not c.boundary
    for alpha in classes:
        nu = valuation(c, alpha)
        ell = spectral_invariant(c, alpha)
        report.record(nu * period == ell, f"{describe(alpha)} ν·𝖠", nu * period, ell)
        chain_nu = chain_valuation(c, alpha)
        holds = nu == chain_nu if flat_boundary else nu <= chain_nu
        report.record(holds, f"{describe(alpha)} ν(chain)", nu, chain_nu)
    return report
