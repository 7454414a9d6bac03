"""정확한 유리수 파싱/포매팅 유틸리티"""
import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """
    'p' 또는 'p/q' 형식의 유리수 파싱 (부동소수점 표기는 거부)

    Args:
        text: 입력 문자열

    Returns:
        Fraction
    """
    text = text.strip()
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"잘못된 유리수 표기: {text!r}")
    if m.group(1) is not None and int(m.group(1)) == 0:
        raise ValueError(f"분모가 0인 유리수: {text!r}")
    return Fraction(text)


def to_rational(value: RationalLike) -> Fraction:
    """int / 'p/q' 문자열 / Fraction을 Fraction으로 변환 (float 금지)"""
    if isinstance(value, bool):
        raise TypeError("bool은 유리수로 변환할 수 없습니다")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"정확한 유리수가 아닙니다: {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """정수면 'n', 아니면 'p/q'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
