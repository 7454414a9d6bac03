"""성질 검증 리포트"""
from dataclasses import dataclass, field
from typing import Iterable, List


@dataclass(frozen=True)
class PropertyFailure:
    """위반 한 건 (입력 설명, 좌변, 우변)"""
    inputs: str
    lhs: str
    rhs: str


@dataclass
class PropertyReport:
    """
    성질 하나에 대한 검증 결과

    violations 가 비어 있으면 모든 인스턴스에서 성질이 성립한 것이다.
    """
    name: str
    instances: int = 0
    violations: List[PropertyFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, holds: bool, inputs: str, lhs, rhs):
        """인스턴스 하나를 기록 (성립하지 않으면 위반 추가)"""
        self.instances += 1
        if not holds:
            self.violations.append(PropertyFailure(inputs, str(lhs), str(rhs)))

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        if other.name != self.name:
            raise ValueError(f"서로 다른 성질의 리포트는 합칠 수 없습니다: {self.name} vs {other.name}")
        self.instances += other.instances
        self.violations.extend(other.violations)
        return self

    def format(self) -> str:
        status = "ok" if self.ok else "FAIL"
        lines = [f"{self.name}: {status} (instances={self.instances}, violations={len(self.violations)})"]
        for v in self.violations:
            lines.append(f"  - {v.inputs}: lhs={v.lhs} rhs={v.rhs}")
        return "\n".join(lines)


def aggregate(reports: Iterable[PropertyReport]) -> List[PropertyReport]:
    """이름별로 합치되 처음 등장한 순서를 유지"""
    merged: dict = {}
    for report in reports:
        if report.name in merged:
            merged[report.name].merge(report)
        else:
            merged[report.name] = PropertyReport(report.name, report.instances, list(report.violations))
    return list(merged.values())
