"""스펙트럼 값 (정확한 유리수 또는 ±∞ 센티널)"""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Any, Union

from src.utils.rationals import format_rational, to_rational


@total_ordering
@dataclass(frozen=True)
class SpectralValue:
    """
    스펙트럼 불변량의 값

    kind = -1 (−∞), 0 (유한), 1 (+∞). 유한할 때만 value 가 의미를 갖는다.
    """
    kind: int
    value: Fraction = Fraction(0)

    @classmethod
    def finite(cls, value: Any) -> "SpectralValue":
        return cls(0, to_rational(value))

    @property
    def is_finite(self) -> bool:
        return self.kind == 0

    def _key(self):
        return (self.kind, self.value if self.kind == 0 else Fraction(0))

    def __eq__(self, other):
        if isinstance(other, SpectralValue):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.kind == 0 and self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        other = _coerce(other)
        return self._key() < other._key()

    def exceeds(self, action: Fraction) -> bool:
        """self > action"""
        return self > SpectralValue.finite(action)

    def covers(self, action: Fraction) -> bool:
        """self ≥ action"""
        return self >= SpectralValue.finite(action)

    def __add__(self, other):
        other = _coerce(other)
        if {self.kind, other.kind} == {-1, 1}:
            raise ValueError("−∞ + +∞ 는 정의되지 않습니다")
        if self.kind != 0:
            return self
        if other.kind != 0:
            return other
        return SpectralValue.finite(self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        if self.kind != 0:
            return SpectralValue(-self.kind)
        return SpectralValue.finite(-self.value)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __truediv__(self, divisor):
        divisor = to_rational(divisor)
        if divisor <= 0:
            raise ValueError(f"양수로만 나눌 수 있습니다: {divisor}")
        if self.kind != 0:
            return self
        return SpectralValue.finite(self.value / divisor)

    def __mul__(self, factor):
        factor = to_rational(factor)
        if factor < 0:
            return -(self * -factor)
        if self.kind != 0:
            if factor == 0:
                raise ValueError("±∞ · 0 은 정의되지 않습니다")
            return self
        return SpectralValue.finite(self.value * factor)

    def format(self) -> str:
        if self.kind < 0:
            return "-inf"
        if self.kind > 0:
            return "+inf"
        return format_rational(self.value)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"SpectralValue({self.format()})"


NEG_INF = SpectralValue(-1)
POS_INF = SpectralValue(1)


def _coerce(value: Union["SpectralValue", int, Fraction, str]) -> SpectralValue:
    if isinstance(value, SpectralValue):
        return value
    return SpectralValue.finite(value)


def parse_spectral_value(text: str) -> SpectralValue:
    """'-inf' / '+inf' / 'inf' / 유리수 문자열"""
    text = text.strip()
    if text == "-inf":
        return NEG_INF
    if text in ("+inf", "inf"):
        return POS_INF
    return SpectralValue.finite(text)
