"""계수환 추상 클래스"""
from abc import ABC, abstractmethod
from typing import Any, Tuple
from fractions import Fraction

from src.utils.errors import NonUnitError, UnsupportedRingError, UndefinedWeightError


class Ring(ABC):
    """
    정확한 계수환 추상 클래스

    원소는 환마다 정해진 불변(raw) 표현을 사용한다:
    Z는 int, F_p는 0..p-1 범위의 int, Q는 Fraction,
    Novikov는 (거듭제곱, 스칼라) 튜플의 튜플.
    """

    is_field: bool = False
    is_novikov: bool = False

    @abstractmethod
    def descriptor(self) -> str:
        """파일 포맷에서 쓰는 환 표기 (예: 'Z', 'F5', 'Novikov(F2, deg=2, area=1)')"""
        pass

    @property
    @abstractmethod
    def characteristic(self) -> int:
        pass

    @property
    def zero(self) -> Any:
        return self.from_int(0)

    @property
    def one(self) -> Any:
        return self.from_int(1)

    @abstractmethod
    def from_int(self, n: int) -> Any:
        pass

    @abstractmethod
    def normalize(self, value: Any) -> Any:
        """표준형으로 정규화 (멱등)"""
        pass

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, a: Any) -> Any:
        pass

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        pass

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    @abstractmethod
    def is_unit(self, a: Any) -> bool:
        pass

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        """가역원의 역원 (가역원이 아니면 NonUnitError)"""
        pass

    def div_unit(self, a: Any, u: Any) -> Any:
        """a / u (u는 가역원)"""
        if not self.is_unit(u):
            raise NonUnitError(f"{self.descriptor()}에서 가역원이 아닌 원소로 나눌 수 없습니다: {self.format(u)}")
        return self.mul(a, self.inverse(u))

    def norm(self, a: Any) -> int:
        """유클리드 크기 (체: 0/1). 유클리드 환이 아니면 지원하지 않음"""
        raise UnsupportedRingError(f"{self.descriptor()}는 유클리드 소거를 지원하지 않습니다")

    def euclid_quotient(self, a: Any, b: Any) -> Any:
        """norm(a - q*b) < norm(b) 또는 a - q*b = 0 을 만족하는 몫 q"""
        raise UnsupportedRingError(f"{self.descriptor()}는 유클리드 소거를 지원하지 않습니다")

    def weight(self, a: Any) -> Tuple[int, Fraction]:
        """Novikov 가중치 (기본환에서는 항상 (0, 0))"""
        if self.is_zero(a):
            raise UndefinedWeightError("0 계수의 가중치는 정의되지 않습니다")
        return (0, Fraction(0))

    def power_terms(self, a: Any):
        """(거듭제곱, 기본환 스칼라) 항 목록. 기본환은 t^0 한 항"""
        return () if self.is_zero(a) else ((0, a),)

    @abstractmethod
    def parse(self, text: str) -> Any:
        pass

    @abstractmethod
    def format(self, a: Any) -> str:
        pass

    def __str__(self) -> str:
        return self.descriptor()
