"""테스트 공통 fixture 및 유틸리티"""
import sys
from pathlib import Path

import numpy as np
import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.coeff.rings import IntegerRing, PrimeField, RationalField
from src.complex.base import FilteredComplex
from src.models.morse import interval_model, morse_circle, morse_rp2, morse_sphere, morse_torus


@pytest.fixture
def corpus_dir() -> Path:
    """골든 코퍼스 디렉토리"""
    return project_root / "corpus"


@pytest.fixture
def z():
    return IntegerRing()


@pytest.fixture
def f2():
    return PrimeField(2)


@pytest.fixture
def f3():
    return PrimeField(3)


@pytest.fixture
def q():
    return RationalField()


@pytest.fixture
def rng():
    """시드 고정 Generator"""
    return np.random.default_rng(20240517)


@pytest.fixture
def circle_f2(f2) -> FilteredComplex:
    return morse_circle(0, 1, f2)


@pytest.fixture
def circle_z(z) -> FilteredComplex:
    return morse_circle(0, 1, z)


@pytest.fixture
def sphere_q(q) -> FilteredComplex:
    return morse_sphere(0, 1, q)


@pytest.fixture
def torus_z(z) -> FilteredComplex:
    return morse_torus(0, 1, 1, 2, z)


@pytest.fixture
def rp2_z(z) -> FilteredComplex:
    return morse_rp2(0, 1, 2, z)


@pytest.fixture
def interval_q(q) -> FilteredComplex:
    return interval_model(q)
