"""필터 복합체 연산: 검증, 부분준위, 쌍대, 텐서, 작용 이동/섭동, 대각 재포장"""
import logging
from fractions import Fraction
from typing import Any, Dict, Mapping

from src.complex.base import (
    BoundaryEntry,
    ChainClass,
    FilteredComplex,
    Generator,
    ValidationReport,
    chain_axpy,
    make_chain_class,
)
from src.utils.errors import (
    FiltrationViolationError,
    PerturbationBoundError,
    RingMismatchError,
    UnsupportedRingError,
)
from src.utils.rationals import format_rational, to_rational

logger = logging.getLogger(__name__)

DUAL_SUFFIX = "^v"
DIAGONAL_PREFIX = "diag:"


def validate(c: FilteredComplex) -> ValidationReport:
    """
    복합체 불변식 검증 (보고서 형식, 예외 없음)

    - 생성원 이름 중복
    - 경계 성분의 미지 생성원
    - 차수: deg(v) = deg(u) - 1 (Novikov 가중)
    - 작용: A(u) > A(v) + 최대 작용 이동 (엄격한 감소)
    - ∂² = 0

    Args:
        c: 검증할 복합체

    Returns:
        ValidationReport (위반이 없으면 ok)
    """
    report = ValidationReport()
    seen = set()
    for g in c.generators:
        if g.name in seen:
            report.add("duplicate-name", g.name)
        seen.add(g.name)

    known_entries = []
    for entry in c.boundary:
        if entry.source not in c.by_name or entry.target not in c.by_name:
            report.add("unknown-generator", f"{entry.source} -> {entry.target}")
        else:
            known_entries.append(entry)
    if len(known_entries) != len(c.boundary):
        return report

    for source, column in c.differential.items():
        for target, coeff in column.items():
            for power, _ in c.ring.power_terms(coeff):
                expected = c.degree_of(source) - 1
                actual = c.term_degree(target, power)
                if actual != expected:
                    report.add("degree", f"{source} -> {target} (t^{power}): deg {actual} ≠ {expected}")
                source_action = c.action_of(source)
                target_action = c.term_action(target, power)
                if not source_action > target_action:
                    report.add("action", f"{source} -> {target} (t^{power}): "
                                         f"{format_rational(source_action)} ≤ {format_rational(target_action)}")

    for g in c.generators:
        twice = c.boundary_of(c.boundary_of({g.name: c.ring.one}))
        for name, coeff in twice.items():
            report.add("d-squared", f"<∂²{g.name}, {name}> = {c.ring.format(coeff)}")

    return report


def _as_threshold(a: Any):
    """유리수 또는 SpectralValue 센티널을 비교 가능한 임계값으로 변환"""
    from src.spectral.values import SpectralValue

    if isinstance(a, SpectralValue):
        return a
    return SpectralValue.finite(to_rational(a))


def sublevel(c: FilteredComplex, a: Any) -> FilteredComplex:
    """
    작용 < a 인 생성원이 생성하는 부분복합체 V^a

    Novikov 복합체는 활성 윈도우의 단항식 기저 t^k·g 로 펼친 뒤 자른다.

    Args:
        c: 유효한 복합체
        a: 임계값 (유리수 또는 ±∞ 센티널)

    Returns:
        부분복합체
    """
    if c.ring.is_novikov:
        from src.complex.novikov import materialize
        c = materialize(c)

    threshold = _as_threshold(a)
    kept = [g for g in c.generators if threshold.exceeds(g.action)]
    names = {g.name for g in kept}
    entries = [e for e in c.boundary if e.source in names and e.target in names]
    return FilteredComplex(c.ring, tuple(kept), tuple(entries), c.tags, c.window)


def _toggle_dual_name(name: str) -> str:
    return name[:-len(DUAL_SUFFIX)] if name.endswith(DUAL_SUFFIX) else name + DUAL_SUFFIX


def dualize(c: FilteredComplex) -> FilteredComplex:
    """
    쌍대 코체인 복합체를 반대(opposite) 체인 복합체로 표현

    생성원 v^∨는 같은 작용값을 갖지만 내부적으로 작용과 차수를 부호 반전해 저장한다.
    미분은 전치 행렬에 (-1)^{k-1} 부호를 곱한 것이며 (k: 코체인 차수),
    'dual' 태그가 있는 복합체에 다시 적용하면 원래 복합체로 돌아온다.

    Args:
        c: 유효한 복합체

    Returns:
        쌍대 복합체 (태그 'dual' 토글)
    """
    ring = c.ring
    if ring.is_novikov and ring.period_degree % 2 and ring.characteristic != 2:
        raise UnsupportedRingError("홀수 period_degree Novikov 복합체의 쌍대는 지원하지 않습니다")

    is_dual = c.has_tag("dual")
    generators = tuple(Generator(_toggle_dual_name(g.name), -g.degree, -g.action) for g in c.generators)
    entries = []
    for source, column in c.differential.items():
        for target, coeff in column.items():
            if is_dual:
                sign_exponent = c.degree_of(source) + 1
            else:
                sign_exponent = c.degree_of(target) - 1
            value = coeff if sign_exponent % 2 == 0 else ring.neg(coeff)
            entries.append(BoundaryEntry(_toggle_dual_name(target), _toggle_dual_name(source), value))

    order = {g.name: i for i, g in enumerate(generators)}
    entries.sort(key=lambda e: (order[e.source], order[e.target]))
    tags = tuple(t for t in c.tags if t != "dual") if is_dual else c.tags + ("dual",)
    return FilteredComplex(ring, generators, tuple(entries), tags, c.window)


def dual_class(c: FilteredComplex, support, degree: int = None) -> ChainClass:
    """
    원 복합체 생성원 이름으로 주어진 코사이클을 dualize(c)의 클래스로 생성

    Args:
        c: 원 복합체
        support: (원 생성원 이름, 계수) 목록, g^∨ 의 계수로 해석
        degree: 코체인 차수 (원 차수 기준)

    Returns:
        dualize(c) 안의 ChainClass (내부 차수 = -degree)
    """
    dual = dualize(c)
    renamed = [(_toggle_dual_name(name), coeff) for name, coeff in support]
    return make_chain_class(dual, renamed, None if degree is None else -degree)


def pairing(cocycle: ChainClass, cycle: ChainClass) -> Any:
    """
    쌍대 쌍 <α^∨, α> (기저 v^∨(u) = δ_{uv})

    Args:
        cocycle: dualize(c) 의 클래스
        cycle: c 의 클래스

    Returns:
        계수환 원소
    """
    ring = cycle.complex.ring
    if cocycle.complex.ring != ring:
        raise RingMismatchError("쌍대 쌍의 계수환이 다릅니다")
    total = ring.zero
    chain = cycle.as_chain()
    for name, coeff in cocycle.support:
        partner = _toggle_dual_name(name)
        if partner in chain:
            total = ring.add(total, ring.mul(coeff, chain[partner]))
    return total


def tensor(c1: FilteredComplex, c2: FilteredComplex) -> FilteredComplex:
    """
    텐서곱 복합체 (Koszul 부호)

    ∂(g₁⊗g₂) = ∂g₁⊗g₂ + (-1)^{|g₁|} g₁⊗∂g₂, 차수와 작용은 합.

    Args:
        c1, c2: 같은 계수환의 복합체

    Returns:
        생성원 '(g1,g2)' 를 가진 복합체
    """
    if c1.ring != c2.ring:
        raise RingMismatchError(f"텐서곱의 계수환이 다릅니다: {c1.ring.descriptor()} vs {c2.ring.descriptor()}")
    ring = c1.ring
    if ring.is_novikov and ring.period_degree % 2 and ring.characteristic != 2:
        raise UnsupportedRingError("홀수 period_degree Novikov 복합체의 텐서곱은 지원하지 않습니다")

    def name(a: str, b: str) -> str:
        return f"({a},{b})"

    generators = tuple(
        Generator(name(g1.name, g2.name), g1.degree + g2.degree, g1.action + g2.action)
        for g1 in c1.generators for g2 in c2.generators
    )
    entries = []
    for g1 in c1.generators:
        for g2 in c2.generators:
            for target, coeff in c1.differential.get(g1.name, {}).items():
                entries.append(BoundaryEntry(name(g1.name, g2.name), name(target, g2.name), coeff))
            sign_negative = g1.degree % 2 == 1
            for target, coeff in c2.differential.get(g2.name, {}).items():
                value = ring.neg(coeff) if sign_negative else coeff
                entries.append(BoundaryEntry(name(g1.name, g2.name), name(g1.name, target), value))

    window = c1.window if c1.window == c2.window else None
    return FilteredComplex(ring, generators, tuple(entries), ("tensor",), window)


def tensor_class(alpha1: ChainClass, alpha2: ChainClass, product: FilteredComplex) -> ChainClass:
    """α₁⊗α₂ 를 tensor(c1, c2) 안의 사이클로"""
    ring = product.ring
    chain: Dict[str, Any] = {}
    for n1, k1 in alpha1.support:
        for n2, k2 in alpha2.support:
            chain_axpy(ring, chain, {f"({n1},{n2})": ring.mul(k1, k2)})
    return make_chain_class(product, chain.items(), alpha1.degree + alpha2.degree)


def shift_actions(c: FilteredComplex, s: Any) -> FilteredComplex:
    """모든 작용값에 s를 더함 (경계 불변)"""
    s = to_rational(s)
    generators = tuple(Generator(g.name, g.degree, g.action + s) for g in c.generators)
    return FilteredComplex(c.ring, generators, c.boundary, c.tags, c.window)


def perturb_actions(c: FilteredComplex, delta: Mapping[str, Any], epsilon: Any) -> FilteredComplex:
    """
    생성원별 작용 섭동 (|delta(g)| ≤ ε)

    Args:
        c: 유효한 복합체
        delta: 생성원 이름 → 섭동량 (없는 이름은 0)
        epsilon: 섭동 상한

    Returns:
        섭동된 복합체 (필트레이션이 깨지면 FiltrationViolationError)
    """
    epsilon = to_rational(epsilon)
    unknown = [name for name in delta if name not in c.by_name]
    if unknown:
        raise PerturbationBoundError(f"복합체에 없는 생성원의 섭동: {unknown}")

    moves: Dict[str, Fraction] = {name: to_rational(v) for name, v in delta.items()}
    too_large = [name for name, v in moves.items() if abs(v) > epsilon]
    if too_large:
        raise PerturbationBoundError(f"|delta| > ε = {format_rational(epsilon)}: {too_large}")

    generators = tuple(Generator(g.name, g.degree, g.action + moves.get(g.name, Fraction(0)))
                       for g in c.generators)
    perturbed = FilteredComplex(c.ring, generators, c.boundary, c.tags, c.window)

    broken = [v.detail for v in validate(perturbed).violations if v.kind == "action"]
    if broken:
        raise FiltrationViolationError(f"섭동이 작용 필트레이션을 깨뜨립니다 (더 작은 ε 필요): {broken}")
    return perturbed


def diagonal_repackage(c: FilteredComplex) -> FilteredComplex:
    """
    주기 궤도 모델을 대각 라그랑지안 모델로 재포장 (γ ↦ diag:γ)

    차수, 작용, 경계는 그대로 유지된다.
    """
    generators = tuple(Generator(DIAGONAL_PREFIX + g.name, g.degree, g.action) for g in c.generators)
    entries = tuple(BoundaryEntry(DIAGONAL_PREFIX + e.source, DIAGONAL_PREFIX + e.target, e.coeff)
                    for e in c.boundary)
    tags = tuple(t for t in c.tags if t != "periodic-orbit") + ("lagrangian",)
    return FilteredComplex(c.ring, generators, entries, tags, c.window)


def repackage_class(alpha: ChainClass, target: FilteredComplex) -> ChainClass:
    """α 를 diagonal_repackage 결과 복합체의 대응 클래스로"""
    support = [(DIAGONAL_PREFIX + name, coeff) for name, coeff in alpha.support]
    return make_chain_class(target, support, alpha.degree)
