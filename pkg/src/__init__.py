"""FiltraSpec: 필터 체인 복합체의 스펙트럼 불변량 계산 엔진"""

__version__ = "0.1.0"
