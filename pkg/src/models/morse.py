"""표준 다양체의 Morse 모델 복합체"""
import logging
from typing import Any, List, Sequence, Tuple

from src.coeff.base import Ring
from src.complex.base import BoundaryEntry, ChainHomotopy, FilteredComplex, FilteredMap, Generator
from src.utils.errors import FiltrationViolationError, UnsupportedRingError
from src.utils.rationals import format_rational, to_rational

logger = logging.getLogger(__name__)


def _require_base_ring(ring: Ring):
    if ring.is_novikov:
        raise UnsupportedRingError("Morse 모델은 기본환(Z, F_p, Q) 위에서만 만듭니다")


def _require_increasing(pairs: Sequence[Tuple[Any, Any]]):
    """(낮은 지표 값, 높은 지표 값) 쌍이 모두 엄격히 증가하는지"""
    for low, high in pairs:
        if not to_rational(low) < to_rational(high):
            raise FiltrationViolationError(
                f"임계값은 지표 순으로 엄격히 증가해야 합니다: "
                f"{format_rational(to_rational(low))} ≥ {format_rational(to_rational(high))}"
            )


def _complex(ring: Ring, generators: List[Generator], entries: List[BoundaryEntry],
             tags: Tuple[str, ...]) -> FilteredComplex:
    # F2 등에서 0이 되는 경계 성분은 싣지 않음
    kept = [BoundaryEntry(e.source, e.target, ring.normalize(e.coeff)) for e in entries]
    kept = [e for e in kept if not ring.is_zero(e.coeff)]
    return FilteredComplex(ring, tuple(generators), tuple(kept), tags)


def point_complex(ring: Ring, action: Any = 0) -> FilteredComplex:
    """한 점: 생성원 pt (차수 0). 텐서곱의 단위"""
    _require_base_ring(ring)
    return _complex(ring, [Generator("pt", 0, to_rational(action))], [], ("morse", "point"))


def interval_model(ring: Ring) -> FilteredComplex:
    """구간 모델: a (차수 1, 작용 1), b, b' (차수 0, 작용 0), ∂a = b − b'"""
    _require_base_ring(ring)
    generators = [Generator("a", 1, 1), Generator("b", 0, 0), Generator("b'", 0, 0)]
    entries = [BoundaryEntry("a", "b", ring.one), BoundaryEntry("a", "b'", ring.neg(ring.one))]
    return _complex(ring, generators, entries, ("morse", "interval"))


def interval_retraction(ring: Ring, point_action: Any = 0) -> Tuple[FilteredMap, FilteredMap,
                                                                    ChainHomotopy, ChainHomotopy]:
    """
    구간 모델을 한 점으로 수축하는 호모토피 동치 (f, g, h, h')

    f(b) = f(b') = pt, f(a) = 0, g(pt) = b, h(b') = a 로 ∂h + h∂ = g∘f − id 이고 f∘g = id 이므로 h' = 0.

    Args:
        ring: 기본 계수환
        point_action: 점 생성원의 작용

    Returns:
        (f, g, 구간 위 호모토피, 점 위 호모토피)
    """
    interval = interval_model(ring)
    point = point_complex(ring, point_action)
    level = point.action_of("pt")
    one = ring.one
    f = FilteredMap(interval, point, (BoundaryEntry("b", "pt", one), BoundaryEntry("b'", "pt", one)),
                    max(level, 0))
    g = FilteredMap(point, interval, (BoundaryEntry("pt", "b", one),), max(-level, 0))
    h = ChainHomotopy(interval, (BoundaryEntry("b'", "a", one),))
    return f, g, h, ChainHomotopy(point)


def morse_circle(v_min: Any, v_max: Any, ring: Ring) -> FilteredComplex:
    """
    원의 높이 함수 Morse 모델

    두 기울기선이 Z 위에서 상쇄되어 ∂ = 0 (F2 에서는 1+1 = 0).

    Args:
        v_min: 최솟점 임계값
        v_max: 최댓점 임계값 (v_min < v_max)
        ring: 기본 계수환
    """
    _require_base_ring(ring)
    _require_increasing([(v_min, v_max)])
    generators = [Generator("min", 0, to_rational(v_min)), Generator("max", 1, to_rational(v_max))]
    return _complex(ring, generators, [], ("morse", "circle"))


def morse_sphere(v_min: Any, v_max: Any, ring: Ring) -> FilteredComplex:
    """2-구면: min (차수 0), max (차수 2), ∂ = 0"""
    _require_base_ring(ring)
    _require_increasing([(v_min, v_max)])
    generators = [Generator("min", 0, to_rational(v_min)), Generator("max", 2, to_rational(v_max))]
    return _complex(ring, generators, [], ("morse", "sphere"))


def morse_torus(v0: Any, v1a: Any, v1b: Any, v2: Any, ring: Ring) -> FilteredComplex:
    """
    2-토러스: min, s1, s2 (안장점), max. ∂ = 0

    Args:
        v0: 최솟점 값
        v1a, v1b: 두 안장점 값 (v0 보다 크고 v2 보다 작음)
        v2: 최댓점 값
        ring: 기본 계수환
    """
    _require_base_ring(ring)
    _require_increasing([(v0, v1a), (v0, v1b), (v1a, v2), (v1b, v2)])
    generators = [
        Generator("min", 0, to_rational(v0)),
        Generator("s1", 1, to_rational(v1a)),
        Generator("s2", 1, to_rational(v1b)),
        Generator("max", 2, to_rational(v2)),
    ]
    return _complex(ring, generators, [], ("morse", "torus"))


def morse_rp2(v0: Any, v1: Any, v2: Any, ring: Ring) -> FilteredComplex:
    """
    실사영평면: c0, c1, c2 와 ∂c2 = 2·c1 (F2 에서는 0)

    Z 위에서 H_1 = Z/2 꼬임을 만든다.
    """
    _require_base_ring(ring)
    _require_increasing([(v0, v1), (v1, v2)])
    generators = [
        Generator("c0", 0, to_rational(v0)),
        Generator("c1", 1, to_rational(v1)),
        Generator("c2", 2, to_rational(v2)),
    ]
    entries = [BoundaryEntry("c2", "c1", ring.from_int(2))]
    return _complex(ring, generators, entries, ("morse", "rp2"))
