"""계수환 구현 (Z, F_p, Q, Novikov)"""
import re
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from sympy import isprime

from src.coeff.base import Ring
from src.utils.errors import NonUnitError, RingMismatchError, UndefinedWeightError
from src.utils.rationals import format_rational, parse_rational, to_rational

logger = logging.getLogger(__name__)

_INT_RE = re.compile(r'^[+-]?\d+$')


@dataclass(frozen=True)
class IntegerRing(Ring):
    """정수환 Z"""

    def descriptor(self) -> str:
        return "Z"

    @property
    def characteristic(self) -> int:
        return 0

    def from_int(self, n: int) -> int:
        return int(n)

    def normalize(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise RingMismatchError(f"Z의 원소가 아닙니다: {value}")
            return value.numerator
        return int(value)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def inverse(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"Z에서 가역원이 아닙니다: {a}")
        return a

    def norm(self, a) -> int:
        return abs(a)

    def euclid_quotient(self, a, b):
        return a // b

    def parse(self, text: str) -> int:
        text = text.strip()
        if 't' in text:
            raise RingMismatchError(f"Z 계수에 Novikov 변수 t를 쓸 수 없습니다: {text!r}")
        if not _INT_RE.match(text):
            raise ValueError(f"잘못된 정수 계수: {text!r}")
        return int(text)

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class PrimeField(Ring):
    """소수체 F_p"""
    p: int
    is_field = True

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"F_p의 p는 소수여야 합니다: {self.p}")

    def descriptor(self) -> str:
        return f"F{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def from_int(self, n: int) -> int:
        return int(n) % self.p

    def normalize(self, value: Any) -> int:
        if isinstance(value, Fraction):
            return self.div_unit(self.from_int(value.numerator), self.from_int(value.denominator))
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def inverse(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"F{self.p}에서 0은 가역원이 아닙니다")
        return pow(a, -1, self.p)

    def norm(self, a) -> int:
        return 0 if a == 0 else 1

    def euclid_quotient(self, a, b):
        return self.div_unit(a, b)

    def parse(self, text: str) -> int:
        text = text.strip()
        if 't' in text:
            raise RingMismatchError(f"F{self.p} 계수에 Novikov 변수 t를 쓸 수 없습니다: {text!r}")
        return self.normalize(parse_rational(text))

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class RationalField(Ring):
    """유리수체 Q (임의 정밀도 분자/분모)"""
    is_field = True

    def descriptor(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def normalize(self, value: Any) -> Fraction:
        return to_rational(value)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return a != 0

    def inverse(self, a):
        if a == 0:
            raise NonUnitError("Q에서 0은 가역원이 아닙니다")
        return 1 / a

    def norm(self, a) -> int:
        return 0 if a == 0 else 1

    def euclid_quotient(self, a, b):
        return self.div_unit(a, b)

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if 't' in text:
            raise RingMismatchError(f"Q 계수에 Novikov 변수 t를 쓸 수 없습니다: {text!r}")
        return parse_rational(text)

    def format(self, a) -> str:
        return format_rational(a)


_TERM_RE = re.compile(
    r'\s*(?P<sign>[+-])?\s*'
    r'(?:(?P<coef>\d+(?:/\d+)?)(?P<tpart>\s*\*\s*t(?:\s*\^\s*(?P<exp1>[+-]?\d+))?)?'
    r'|(?P<bare>t)(?:\s*\^\s*(?P<exp2>[+-]?\d+))?)\s*'
)

NovikovValue = Tuple[Tuple[int, Any], ...]


@dataclass(frozen=True)
class NovikovRing(Ring):
    """
    기본환 위의 Novikov 환 (유한 Laurent 다항식 R[t, t^-1])

    단항식 t^k는 차수를 -k*period_degree, 작용을 -k*period_action 만큼 이동시킨다.
    """
    base: Ring
    period_degree: int
    period_action: Fraction
    is_novikov = True

    def __post_init__(self):
        if self.base.is_novikov:
            raise ValueError("Novikov 환의 기본환은 Z, F_p, Q 중 하나여야 합니다")
        object.__setattr__(self, "period_action", to_rational(self.period_action))
        if self.period_action <= 0:
            raise ValueError(f"period_action은 양수여야 합니다: {self.period_action}")

    @property
    def is_field(self) -> bool:
        return False

    def descriptor(self) -> str:
        return (f"Novikov({self.base.descriptor()}, deg={self.period_degree}, "
                f"area={format_rational(self.period_action)})")

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def from_int(self, n: int) -> NovikovValue:
        return self.monomial(0, self.base.from_int(n))

    def monomial(self, k: int, scalar: Any = None) -> NovikovValue:
        """스칼라 * t^k"""
        scalar = self.base.one if scalar is None else self.base.normalize(scalar)
        return () if self.base.is_zero(scalar) else ((int(k), scalar),)

    def normalize(self, value: Any) -> NovikovValue:
        if isinstance(value, dict):
            items = value.items()
        elif isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            items = [(0, value)]
        else:
            items = value
        merged: Dict[int, Any] = {}
        for k, s in items:
            s = self.base.normalize(s)
            merged[int(k)] = self.base.add(merged[int(k)], s) if int(k) in merged else s
        return tuple((k, s) for k, s in sorted(merged.items()) if not self.base.is_zero(s))

    def add(self, a, b):
        return self.normalize(list(a) + list(b))

    def neg(self, a):
        return tuple((k, self.base.neg(s)) for k, s in a)

    def mul(self, a, b):
        terms = [(ka + kb, self.base.mul(sa, sb)) for ka, sa in a for kb, sb in b]
        return self.normalize(terms)

    def is_zero(self, a) -> bool:
        return len(a) == 0

    def is_unit(self, a) -> bool:
        # 단일 단항식이고 스칼라가 기본환의 가역원일 때만 (Z 위에서는 ±t^k)
        return len(a) == 1 and self.base.is_unit(a[0][1])

    def inverse(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"{self.descriptor()}에서 가역원이 아닙니다: {self.format(a)}")
        k, s = a[0]
        return ((-k, self.base.inverse(s)),)

    def shift_by_power(self, a, k: int) -> NovikovValue:
        """t^k 곱"""
        return tuple((p + k, s) for p, s in a)

    def weight(self, a) -> Tuple[int, Fraction]:
        """
        Novikov 가중치

        Returns:
            (최저 거듭제곱 항의 차수 이동, 최대 작용 이동)
        """
        if self.is_zero(a):
            raise UndefinedWeightError("0 계수의 Novikov 가중치는 정의되지 않습니다")
        k_min = a[0][0]
        return (-k_min * self.period_degree, -k_min * self.period_action)

    def power_terms(self, a):
        return a

    def parse(self, text: str) -> NovikovValue:
        pos = 0
        terms = []
        text = text.strip()
        if not text:
            raise ValueError("빈 Novikov 계수")
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if not m or m.end() == pos or (terms and not m.group("sign")):
                raise ValueError(f"잘못된 Novikov 계수 (위치 {pos + 1}): {text!r}")
            if m.group("bare"):
                scalar = self.base.one
                k = int(m.group("exp2")) if m.group("exp2") else 1
            else:
                scalar = self.base.parse(m.group("coef"))
                if m.group("tpart"):
                    k = int(m.group("exp1")) if m.group("exp1") else 1
                else:
                    k = 0
            if m.group("sign") == "-":
                scalar = self.base.neg(scalar)
            terms.append((k, scalar))
            pos = m.end()
        return self.normalize(terms)

    def format(self, a) -> str:
        if not a:
            return "0"
        parts = []
        for i, (k, s) in enumerate(a):
            txt = self.base.format(s)
            if i > 0 and not txt.startswith("-"):
                txt = "+" + txt
            parts.append(f"{txt}*t^{k}")
        return "".join(parts)


@dataclass(frozen=True)
class Coefficient:
    """환 정보를 함께 가진 계수 (불변)"""
    ring: Ring
    value: Any

    @classmethod
    def of(cls, ring: Ring, value: Any) -> "Coefficient":
        return cls(ring, ring.normalize(value))

    def _check(self, other: "Coefficient"):
        if not isinstance(other, Coefficient):
            raise TypeError(f"Coefficient가 아닙니다: {other!r}")
        if other.ring != self.ring:
            raise RingMismatchError(
                f"서로 다른 환의 원소 연산: {self.ring.descriptor()} vs {other.ring.descriptor()}"
            )

    def __add__(self, other):
        self._check(other)
        return Coefficient(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return Coefficient(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return Coefficient(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return Coefficient(self.ring, self.ring.neg(self.value))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def divide_by_unit(self, unit: "Coefficient") -> "Coefficient":
        self._check(unit)
        return Coefficient(self.ring, self.ring.div_unit(self.value, unit.value))

    def __str__(self) -> str:
        return self.ring.format(self.value)


def novikov_weight(c: Coefficient) -> Tuple[int, Fraction]:
    """
    Novikov 계수의 가중치

    Args:
        c: Novikov 환의 0이 아닌 계수

    Returns:
        (최저 거듭제곱 항의 차수 이동, 최대 작용 이동)
    """
    if not c.ring.is_novikov:
        raise RingMismatchError(f"Novikov 환이 아닙니다: {c.ring.descriptor()}")
    return c.ring.weight(c.value)


_NOVIKOV_RE = re.compile(
    r'^Novikov\(\s*(?P<base>[A-Za-z0-9]+)\s*,\s*deg\s*=\s*(?P<deg>[+-]?\d+)\s*,'
    r'\s*area\s*=\s*(?P<area>[+-]?\d+(?:/\d+)?)\s*\)$'
)
_FIELD_RE = re.compile(r'^F(\d+)$')


def get_ring(descriptor: str) -> Ring:
    """
    환 표기 문자열로부터 계수환 생성

    Args:
        descriptor: 'Z', 'Q', 'F<p>', 'Novikov(<base>, deg=<N>, area=<rational>)'

    Returns:
        Ring 인스턴스
    """
    descriptor = descriptor.strip()
    if descriptor == "Z":
        return IntegerRing()
    elif descriptor == "Q":
        return RationalField()
    elif _FIELD_RE.match(descriptor):
        return PrimeField(int(_FIELD_RE.match(descriptor).group(1)))
    elif _NOVIKOV_RE.match(descriptor):
        m = _NOVIKOV_RE.match(descriptor)
        base = get_ring(m.group("base"))
        return NovikovRing(base, int(m.group("deg")), parse_rational(m.group("area")))
    else:
        raise ValueError(f"지원하지 않는 계수환: {descriptor}")
