"""엔진 예외 정의 및 에러 분류 유틸리티"""
from typing import Optional


class EngineError(ValueError):
    """엔진 공통 예외 (입력/전제조건 위반)"""


class RingMismatchError(EngineError):
    """서로 다른 계수환의 원소를 섞어 연산"""


class NonUnitError(EngineError):
    """가역원이 아닌 원소로 나눗셈"""


class UndefinedWeightError(EngineError):
    """0 계수의 Novikov 가중치 요청"""


class UnsupportedRingError(EngineError):
    """해당 연산이 지원하지 않는 계수환"""


class NotACycleError(EngineError):
    """사이클이 아닌 체인을 클래스로 사용"""


class ClassMismatchError(EngineError):
    """클래스가 다른 복합체에 속함 (또는 차수 불일치)"""


class FiltrationViolationError(EngineError):
    """작용(action) 필트레이션 조건 위반"""


class PerturbationBoundError(EngineError):
    """섭동 크기가 ε를 초과"""


class EmptyWindowError(EngineError):
    """비어 있는 Novikov 윈도우"""


class NovikovWindowError(EngineError):
    """윈도우 확장 후에도 값이 안정화되지 않음"""


class OracleCapExceededError(EngineError):
    """브루트포스 오라클 열거 상한 초과"""


class InvalidWitnessError(EngineError):
    """사용자가 제공한 호모토피 증인이 항등식을 만족하지 않음"""


class ParseError(EngineError):
    """입력 파일 파싱 오류 (줄/열 번호 포함)"""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, path: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        location = ":".join(str(p) for p in (path, line, column) if p is not None)
        super().__init__(f"{location}: {message}" if location else message)


class ValidationFailedError(EngineError):
    """복합체 검증 실패 (검증 리포트 포함)"""

    def __init__(self, report, message: str = "복합체 검증 실패"):
        self.report = report
        super().__init__(f"{message}: {report}")


class PropertyViolation(Exception):
    """성질 검증에서 위반 발견 (수학적 위반, 입력 오류 아님)"""

    def __init__(self, reports):
        self.reports = list(reports)
        names = ", ".join(r.name for r in self.reports)
        super().__init__(f"성질 위반: {names}")


def classify_error(exception: Exception) -> str:
    """
    예외를 타입별로 분류

    Args:
        exception: 분류할 예외

    Returns:
        에러 타입 문자열 (violation, input, unknown)
    """
    if isinstance(exception, PropertyViolation):
        return "violation"
    elif isinstance(exception, (EngineError, OSError, ValueError, KeyError)):
        return "input"
    else:
        return "unknown"


def exit_code_for(exception: Exception) -> int:
    """
    CLI 종료 코드 결정 (0: 성공, 1: 성질 위반, 2: 입력 오류)

    Args:
        exception: 발생한 예외

    Returns:
        종료 코드
    """
    return 1 if classify_error(exception) == "violation" else 2
