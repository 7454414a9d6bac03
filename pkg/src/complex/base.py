"""필터 체인 복합체 기본 자료형"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Tuple

from src.coeff.base import Ring
from src.utils.errors import ClassMismatchError, NotACycleError
from src.utils.rationals import format_rational, to_rational

Chain = Dict[str, Any]


@dataclass(frozen=True)
class Generator:
    """기저 원소 (이름, 차수, 작용값)"""
    name: str
    degree: int
    action: Fraction

    def __post_init__(self):
        object.__setattr__(self, "action", to_rational(self.action))
        object.__setattr__(self, "degree", int(self.degree))


@dataclass(frozen=True)
class BoundaryEntry:
    """경계 행렬 성분 <∂source, target> = coeff"""
    source: str
    target: str
    coeff: Any


@dataclass(frozen=True)
class Violation:
    """검증 위반 항목"""
    kind: str  # duplicate-name | unknown-generator | degree | action | d-squared | chain-map | shift | ...
    detail: str


@dataclass
class ValidationReport:
    """검증 결과 (위반 목록이 비어 있으면 통과)"""
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail: str):
        self.violations.append(Violation(kind, detail))

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind}: {v.detail}" for v in self.violations)


def chain_axpy(ring: Ring, target: Chain, source: Chain, scalar: Any = None) -> Chain:
    """target += scalar * source (제자리 갱신, 0 항 제거)"""
    for name, coeff in source.items():
        term = coeff if scalar is None else ring.mul(scalar, coeff)
        if name in target:
            value = ring.add(target[name], term)
            if ring.is_zero(value):
                del target[name]
            else:
                target[name] = value
        elif not ring.is_zero(term):
            target[name] = term
    return target


@dataclass(frozen=True)
class FilteredComplex:
    """
    기저가 주어진 필터 차수 체인 복합체 (V, B, A, ∂)

    Attributes:
        ring: 계수환
        generators: 기저 원소 (입력 순서 유지, 동일 작용값의 tie-break 기준)
        boundary: 희소 경계 성분 목록
        tags: 모델 태그 (예: 'dual', 'novikov-lift', 'periodic-orbit')
        window: Novikov 복합체의 기본 단항식 윈도우 (k_min, k_max)
    """
    ring: Ring
    generators: Tuple[Generator, ...]
    boundary: Tuple[BoundaryEntry, ...] = ()
    tags: Tuple[str, ...] = ()
    window: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "tags", tuple(self.tags))

    @cached_property
    def by_name(self) -> Dict[str, Generator]:
        return {g.name: g for g in self.generators}

    @cached_property
    def position(self) -> Dict[str, int]:
        positions: Dict[str, int] = {}
        for i, g in enumerate(self.generators):
            positions.setdefault(g.name, i)
        return positions

    @cached_property
    def differential(self) -> Dict[str, Chain]:
        """source → {target: coeff} (중복 성분은 합산)"""
        matrix: Dict[str, Chain] = {}
        for entry in self.boundary:
            chain_axpy(self.ring, matrix.setdefault(entry.source, {}), {entry.target: entry.coeff})
        return matrix

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags

    def degree_of(self, name: str) -> int:
        return self.by_name[name].degree

    def action_of(self, name: str) -> Fraction:
        return self.by_name[name].action

    def generators_in_degree(self, degree: int) -> List[Generator]:
        return [g for g in self.generators if g.degree == degree]

    def term_degree(self, name: str, power: int) -> int:
        """t^power * name 의 차수 (기본환에서는 power = 0)"""
        degree = self.degree_of(name)
        if self.ring.is_novikov:
            degree -= power * self.ring.period_degree
        return degree

    def term_action(self, name: str, power: int) -> Fraction:
        """t^power * name 의 작용값"""
        action = self.action_of(name)
        if self.ring.is_novikov:
            action -= power * self.ring.period_action
        return action

    def boundary_of(self, chain: Chain) -> Chain:
        """∂(chain)"""
        result: Chain = {}
        for name, coeff in chain.items():
            column = self.differential.get(name)
            if column:
                chain_axpy(self.ring, result, column, coeff)
        return result

    def describe(self) -> str:
        actions = ", ".join(f"{g.name}:{g.degree}@{format_rational(g.action)}" for g in self.generators)
        return f"<{self.ring.descriptor()} [{actions}]>"


@dataclass(frozen=True)
class ChainClass:
    """호몰로지 클래스를 대표하는 사이클"""
    complex: FilteredComplex
    support: Tuple[Tuple[str, Any], ...]
    degree: int

    def as_chain(self) -> Chain:
        return dict(self.support)

    def is_zero_chain(self) -> bool:
        return not self.support

    def belongs_to(self, c: FilteredComplex) -> bool:
        return self.complex is c or self.complex == c


def _chain_degrees(c: FilteredComplex, chain: Chain) -> List[int]:
    degrees = []
    for name, coeff in chain.items():
        for power, _ in c.ring.power_terms(coeff):
            degrees.append(c.term_degree(name, power))
    return degrees


def make_chain_class(c: FilteredComplex, support: Iterable[Tuple[str, Any]],
                     degree: Optional[int] = None, check_cycle: bool = True) -> ChainClass:
    """
    사이클 클래스 생성 (이름/차수/사이클 조건 확인)

    Args:
        c: 복합체
        support: (생성원 이름, 계수 raw 값) 목록
        degree: 선언된 차수 (빈 체인이면 필수)
        check_cycle: ∂ = 0 확인 여부

    Returns:
        ChainClass
    """
    chain: Chain = {}
    for name, coeff in support:
        if name not in c.by_name:
            raise ClassMismatchError(f"복합체에 없는 생성원: {name}")
        chain_axpy(c.ring, chain, {name: c.ring.normalize(coeff)})

    degrees = set(_chain_degrees(c, chain))
    if degree is None:
        if len(degrees) != 1:
            raise ClassMismatchError("빈 체인 또는 비동차 체인은 차수를 명시해야 합니다")
        degree = degrees.pop()
    elif degrees and degrees != {degree}:
        raise ClassMismatchError(f"선언된 차수 {degree}와 지지 집합의 차수 {sorted(degrees)}가 다릅니다")

    if check_cycle and c.boundary_of(chain):
        raise NotACycleError(f"사이클이 아닙니다: ∂ ≠ 0 ({sorted(chain)})")

    support_tuple = tuple((g.name, chain[g.name]) for g in c.generators if g.name in chain)
    return ChainClass(c, support_tuple, int(degree))


def scale_class(alpha: ChainClass, scalar: Any) -> ChainClass:
    """r·α"""
    ring = alpha.complex.ring
    chain = chain_axpy(ring, {}, alpha.as_chain(), ring.normalize(scalar))
    return make_chain_class(alpha.complex, chain.items(), alpha.degree, check_cycle=False)


def add_classes(alpha: ChainClass, beta: ChainClass) -> ChainClass:
    """α + β (같은 복합체, 같은 차수)"""
    if not beta.belongs_to(alpha.complex) or alpha.degree != beta.degree:
        raise ClassMismatchError("서로 다른 복합체 또는 차수의 클래스는 더할 수 없습니다")
    ring = alpha.complex.ring
    chain = chain_axpy(ring, alpha.as_chain(), beta.as_chain())
    return make_chain_class(alpha.complex, chain.items(), alpha.degree, check_cycle=False)


@dataclass(frozen=True)
class FilteredMap:
    """
    작용 이동 상한 b가 보장된 필터 체인 사상 f: source → target

    모든 성분 (u → w)는 A(w) ≤ A(u) + b 를 만족해야 한다.
    """
    source: FilteredComplex
    target: FilteredComplex
    entries: Tuple[BoundaryEntry, ...]
    shift: Fraction

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "shift", to_rational(self.shift))

    @cached_property
    def matrix(self) -> Dict[str, Chain]:
        matrix: Dict[str, Chain] = {}
        for entry in self.entries:
            chain_axpy(self.target.ring, matrix.setdefault(entry.source, {}), {entry.target: entry.coeff})
        return matrix

    def apply(self, chain: Chain) -> Chain:
        result: Chain = {}
        for name, coeff in chain.items():
            column = self.matrix.get(name)
            if column:
                chain_axpy(self.target.ring, result, column, coeff)
        return result

    def push_class(self, alpha: ChainClass) -> ChainClass:
        """f_*(α)"""
        if not alpha.belongs_to(self.source):
            raise ClassMismatchError("클래스가 사상의 정의역 복합체에 속하지 않습니다")
        image = self.apply(alpha.as_chain())
        return make_chain_class(self.target, image.items(), alpha.degree, check_cycle=False)

    @classmethod
    def identity(cls, source: FilteredComplex, target: FilteredComplex,
                 shift: Optional[Fraction] = None) -> "FilteredMap":
        """
        같은 생성원 이름을 가진 두 복합체 사이의 항등 사상

        Args:
            source: 정의역
            target: 공역 (같은 이름의 생성원을 가져야 함)
            shift: 작용 이동 상한 (None이면 max(A_target - A_source))

        Returns:
            FilteredMap
        """
        missing = [g.name for g in source.generators if g.name not in target.by_name]
        if missing:
            raise ClassMismatchError(f"공역에 없는 생성원: {missing}")
        if shift is None:
            diffs = [target.action_of(g.name) - g.action for g in source.generators]
            shift = max(diffs) if diffs else Fraction(0)
        entries = [BoundaryEntry(g.name, g.name, source.ring.one) for g in source.generators]
        return cls(source, target, tuple(entries), shift)

    def compose(self, other: "FilteredMap") -> "FilteredMap":
        """other ∘ self (self: A → B, other: B → C)"""
        entries = []
        for g in self.source.generators:
            image = other.apply(self.apply({g.name: self.source.ring.one}))
            entries.extend(BoundaryEntry(g.name, name, coeff) for name, coeff in image.items())
        return FilteredMap(self.source, other.target, tuple(entries), self.shift + other.shift)

    def validate(self) -> ValidationReport:
        """사슬 사상 항등식 ∂f = f∂ 및 작용 이동 상한 검증"""
        report = ValidationReport()
        if self.source.ring != self.target.ring:
            report.add("ring", f"{self.source.ring.descriptor()} vs {self.target.ring.descriptor()}")
            return report
        for entry in self.entries:
            if entry.source not in self.source.by_name or entry.target not in self.target.by_name:
                report.add("unknown-generator", f"{entry.source} -> {entry.target}")
        if not report.ok:
            return report

        ring = self.target.ring
        for name, column in self.matrix.items():
            for target_name, coeff in column.items():
                for power, _ in ring.power_terms(coeff):
                    lhs = self.target.term_action(target_name, power)
                    rhs = self.source.action_of(name) + self.shift
                    if lhs > rhs:
                        report.add("shift", f"{name} -> {target_name}: "
                                            f"{format_rational(lhs)} > {format_rational(rhs)}")

        for g in self.source.generators:
            unit = {g.name: self.source.ring.one}
            lhs = self.target.boundary_of(self.apply(unit))
            rhs = self.apply(self.source.boundary_of(unit))
            diff = chain_axpy(ring, dict(lhs), rhs, ring.neg(ring.one))
            if diff:
                report.add("chain-map", f"∂f({g.name}) ≠ f∂({g.name})")
        return report


@dataclass(frozen=True)
class ChainHomotopy:
    """차수 +1 희소 사상 h: complex → complex (켤레 안정성 증인)"""
    complex: FilteredComplex
    entries: Tuple[BoundaryEntry, ...] = ()

    @cached_property
    def matrix(self) -> Dict[str, Chain]:
        matrix: Dict[str, Chain] = {}
        for entry in self.entries:
            chain_axpy(self.complex.ring, matrix.setdefault(entry.source, {}), {entry.target: entry.coeff})
        return matrix

    def apply(self, chain: Chain) -> Chain:
        result: Chain = {}
        for name, coeff in chain.items():
            column = self.matrix.get(name)
            if column:
                chain_axpy(self.complex.ring, result, column, coeff)
        return result
