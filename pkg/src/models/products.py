"""체인 수준 곱 데이터 (삼각 부등식 / 가군 구조 검증 입력)"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from src.complex.base import Chain, ChainClass, FilteredComplex, ValidationReport, chain_axpy, make_chain_class
from src.complex.operations import diagonal_repackage
from src.utils.errors import ClassMismatchError
from src.utils.rationals import format_rational, to_rational

logger = logging.getLogger(__name__)

ProductEntry = Tuple[str, str, str, Any]


@dataclass(frozen=True)
class ProductData:
    """
    쌍선형 체인 곱 ⋆: factor1 ⊗ factor2 → target 과 슬랙 ε

    Attributes:
        factor1, factor2, target: 복합체
        entries: (g1, g2, g_out, 계수) 목록
        slack: ε ≥ 0
        degree_shift: deg(g_out) = deg(g1) + deg(g2) + degree_shift
        unit: factor1 의 단위 생성원 이름 (선언된 경우)
    """
    factor1: FilteredComplex
    factor2: FilteredComplex
    target: FilteredComplex
    entries: Tuple[ProductEntry, ...]
    slack: Fraction = Fraction(0)
    degree_shift: int = 0
    unit: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "slack", to_rational(self.slack))

    @property
    def ring(self):
        return self.target.ring

    def table(self) -> Dict[Tuple[str, str], Chain]:
        """(g1, g2) → g1⋆g2 체인"""
        ring = self.ring
        result: Dict[Tuple[str, str], Chain] = {}
        for g1, g2, out, coeff in self.entries:
            chain_axpy(ring, result.setdefault((g1, g2), {}), {out: coeff})
        return result

    def multiply(self, chain1: Chain, chain2: Chain) -> Chain:
        """쌍선형 확장 chain1 ⋆ chain2"""
        ring = self.ring
        table = self.table()
        result: Chain = {}
        for n1, k1 in chain1.items():
            for n2, k2 in chain2.items():
                image = table.get((n1, n2))
                if image:
                    chain_axpy(ring, result, image, ring.mul(k1, k2))
        return result

    def product_class(self, alpha: ChainClass, beta: ChainClass) -> ChainClass:
        """α⋆β (target 의 클래스)"""
        if not alpha.belongs_to(self.factor1) or not beta.belongs_to(self.factor2):
            raise ClassMismatchError("곱의 인자 클래스가 ProductData 복합체에 속하지 않습니다")
        chain = self.multiply(alpha.as_chain(), beta.as_chain())
        degree = alpha.degree + beta.degree + self.degree_shift
        return make_chain_class(self.target, chain.items(), degree, check_cycle=False)

    def unit_class(self) -> Optional[ChainClass]:
        if self.unit is None:
            return None
        return make_chain_class(self.factor1, [(self.unit, self.factor1.ring.one)])

    def verify(self) -> ValidationReport:
        """
        곱 데이터의 인증 가능한 항등식 검증

        - 이름: 생성원이 각 복합체에 존재
        - 차수: deg(out) = deg(g1) + deg(g2) + degree_shift
        - 필트레이션: A(out) ≤ A(g1) + A(g2) + ε
        - Leibniz: ∂(g1⋆g2) = ∂g1⋆g2 + (−1)^{|g1|} g1⋆∂g2
        - 단위 (선언 시): u⋆g = g
        """
        report = ValidationReport()
        f1, f2, target = self.factor1, self.factor2, self.target
        if not (f1.ring == f2.ring == target.ring):
            report.add("ring", "곱 데이터의 세 복합체 계수환이 다릅니다")
            return report
        for g1, g2, out, _ in self.entries:
            if g1 not in f1.by_name or g2 not in f2.by_name or out not in target.by_name:
                report.add("unknown-generator", f"{g1} ⋆ {g2} -> {out}")
        if self.unit is not None and self.unit not in f1.by_name:
            report.add("unknown-generator", f"unit {self.unit}")
        if not report.ok:
            return report

        ring = self.ring
        for (g1, g2), image in self.table().items():
            for out, coeff in image.items():
                for power, _ in ring.power_terms(coeff):
                    expected = f1.degree_of(g1) + f2.degree_of(g2) + self.degree_shift
                    actual = target.term_degree(out, power)
                    if actual != expected:
                        report.add("degree", f"{g1} ⋆ {g2} -> {out}: deg {actual} ≠ {expected}")
                    bound = f1.action_of(g1) + f2.action_of(g2) + self.slack
                    action = target.term_action(out, power)
                    if action > bound:
                        report.add("filtration", f"{g1} ⋆ {g2} -> {out}: "
                                                 f"{format_rational(action)} > {format_rational(bound)}")

        minus_one = ring.neg(ring.one)
        for a in f1.generators:
            for b in f2.generators:
                unit_a, unit_b = {a.name: ring.one}, {b.name: ring.one}
                lhs = target.boundary_of(self.multiply(unit_a, unit_b))
                rhs = self.multiply(f1.boundary_of(unit_a), unit_b)
                sign = minus_one if a.degree % 2 else ring.one
                chain_axpy(ring, rhs, self.multiply(unit_a, f2.boundary_of(unit_b)), sign)
                if chain_axpy(ring, dict(lhs), rhs, minus_one):
                    report.add("leibniz", f"∂({a.name}⋆{b.name}) ≠ ∂{a.name}⋆{b.name} ± {a.name}⋆∂{b.name}")

        if self.unit is not None:
            for b in f2.generators:
                image = self.multiply({self.unit: ring.one}, {b.name: ring.one})
                expected = {b.name: unit_sign(ring, f1.degree_of(self.unit), b.degree)}
                if b.name not in target.by_name or image != expected:
                    report.add("unit", f"{self.unit} ⋆ {b.name} ≠ ±{b.name}")
        return report


def unit_sign(ring, unit_degree: int, degree: int) -> Any:
    """단위 작용의 Koszul 부호 (−1)^{|u|·|b|}"""
    return ring.neg(ring.one) if (unit_degree * degree) % 2 else ring.one


@dataclass(frozen=True)
class ModuleActionData(ProductData):
    """
    주변(ambient) 복합체가 라그랑지안 복합체에 작용하는 곱 데이터

    factor1 = ambient, factor2 = target 인 경우가 대부분이다.
    """

    @property
    def ambient(self) -> FilteredComplex:
        return self.factor1

    @property
    def module(self) -> FilteredComplex:
        return self.factor2


def torus_intersection_product(torus: FilteredComplex) -> ProductData:
    """
    토러스 모델의 교차곱 (ε = 0, 차수 이동 −2, 단위 = max)

    max⋆x = x⋆max = x, s1⋆s2 = min, s2⋆s1 = −min, 나머지는 0.
    """
    missing = [name for name in ("min", "s1", "s2", "max") if name not in torus.by_name]
    if missing:
        raise ClassMismatchError(f"토러스 모델이 아닙니다 (없는 생성원: {missing})")
    ring = torus.ring
    one, minus_one = ring.one, ring.neg(ring.one)
    entries = []
    for name in ("min", "s1", "s2", "max"):
        entries.append(("max", name, name, one))
        if name != "max":
            entries.append((name, "max", name, one))
    entries.append(("s1", "s2", "min", one))
    entries.append(("s2", "s1", "min", minus_one))
    return ProductData(torus, torus, torus, tuple(entries), Fraction(0), -2, "max")


def _top_generator(c: FilteredComplex) -> str:
    top = max(g.degree for g in c.generators)
    return [g.name for g in c.generators if g.degree == top][-1]


def unit_module_action(ambient: FilteredComplex, target: FilteredComplex,
                       unit: Optional[str] = None) -> ModuleActionData:
    """
    주변 복합체의 단위(최고차 생성원)가 항등으로 작용하는 가군 데이터

    단위 차수가 홀수이면 Leibniz 부호에 맞춰 u⋆g = (−1)^{|g|} g.

    Args:
        ambient: 주변 복합체 (예: periodic_orbit_model(circle))
        target: 작용받는 복합체
        unit: 단위 생성원 (None이면 최고 차수 생성원)

    Returns:
        ModuleActionData (degree_shift = −deg(unit))
    """
    unit = unit or _top_generator(ambient)
    ring = target.ring
    unit_degree = ambient.degree_of(unit)
    entries = tuple((unit, g.name, g.name, unit_sign(ring, unit_degree, g.degree))
                    for g in target.generators)
    shift = -unit_degree
    return ModuleActionData(ambient, target, target, entries, Fraction(0), shift, unit)


def diagonal_self_action(ambient: FilteredComplex) -> ModuleActionData:
    """주변 복합체가 자신의 대각 재포장 모델에 단위로 작용"""
    return unit_module_action(ambient, diagonal_repackage(ambient))
