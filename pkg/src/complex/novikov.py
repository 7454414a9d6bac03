"""Novikov 리프트와 단항식 윈도우 전개"""
import re
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

from src.coeff.rings import NovikovRing
from src.complex.base import (
    BoundaryEntry,
    Chain,
    ChainClass,
    FilteredComplex,
    Generator,
    make_chain_class,
)
from src.utils.errors import EmptyWindowError, UnsupportedRingError
from src.utils.rationals import to_rational

logger = logging.getLogger(__name__)

LIFT_TAG = "novikov-lift"

Window = Tuple[int, int]

_MONOMIAL_NAME_RE = re.compile(r'^t\^(?P<k>-?\d+)\*(?P<name>.+)$')


def mono_name(k: int, name: str) -> str:
    """단항식 생성원 t^k·g 의 이름 (k = 0 이면 기저 이름 그대로)"""
    return name if k == 0 else f"t^{k}*{name}"


def split_monomial_name(name: str) -> Tuple[int, str]:
    """'t^k*g' → (k, g)"""
    m = _MONOMIAL_NAME_RE.match(name)
    if not m:
        return 0, name
    return int(m.group("k")), m.group("name")


def check_window(window: Window) -> Window:
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise EmptyWindowError(f"비어 있는 Novikov 윈도우: {lo}..{hi}")
    return (lo, hi)


def hull(*windows: Optional[Window]) -> Window:
    """여러 윈도우를 모두 포함하는 최소 윈도우"""
    present = [w for w in windows if w is not None]
    if not present:
        raise EmptyWindowError("윈도우가 하나도 없습니다")
    return (min(w[0] for w in present), max(w[1] for w in present))


def widen(window: Window) -> Window:
    """윈도우 폭을 양쪽으로 대칭 확장 (폭 약 2배)"""
    lo, hi = window
    step = max(1, (hi - lo + 2) // 2)
    return (lo - step, hi + step)


def novikov_lift(base: FilteredComplex, period_degree: int, period_action: Any,
                 window: Optional[Window] = None) -> FilteredComplex:
    """
    기본환 복합체를 Novikov 가군 복합체로 리프트

    생성원은 기저 이름 그대로 두고 경계 계수는 t^0 단항식이 된다.
    t^k·g 는 차수 deg(g) - kN, 작용 A(g) - k𝖠 를 갖는다.

    Args:
        base: 기본환(Z, F_p, Q) 위의 유효한 복합체
        period_degree: N (2 이상)
        period_action: 𝖠 (양의 유리수)
        window: 전개할 단항식 윈도우 (k_min, k_max), None이면 설정 기본값

    Returns:
        Novikov 환 위의 복합체 ('novikov-lift' 태그)
    """
    from src.config import NOVIKOV_DEFAULT_WINDOW

    if base.ring.is_novikov:
        raise UnsupportedRingError("이미 Novikov 환 위의 복합체입니다")
    if int(period_degree) < 2:
        raise ValueError(f"period_degree는 2 이상이어야 합니다: {period_degree}")
    window = check_window(window if window is not None else NOVIKOV_DEFAULT_WINDOW)

    ring = NovikovRing(base.ring, int(period_degree), to_rational(period_action))
    entries = tuple(BoundaryEntry(e.source, e.target, ring.monomial(0, e.coeff))
                    for e in base.boundary if not base.ring.is_zero(base.ring.normalize(e.coeff)))
    tags = base.tags if LIFT_TAG in base.tags else base.tags + (LIFT_TAG,)
    return FilteredComplex(ring, base.generators, entries, tags, window)


def materialize(c: FilteredComplex, window: Optional[Window] = None,
                degrees: Optional[Iterable[int]] = None) -> FilteredComplex:
    """
    Novikov 복합체를 윈도우 안의 단항식 기저 t^k·g 로 펼친 기본환 복합체

    윈도우 밖으로 나가는 경계 항과 선택되지 않은 차수로 가는 항은 버린다.
    required_window 를 포함하는 윈도우로 차수 슬라이스를 펼치면 해당 차수의
    사이클/경계 계산은 정확하다.

    Args:
        c: Novikov 복합체 (기본환 복합체는 그대로 반환)
        window: (k_min, k_max), None이면 c.window
        degrees: 남길 차수 집합 (None이면 전체)

    Returns:
        기본환 위의 복합체
    """
    if not c.ring.is_novikov:
        return c
    from src.config import NOVIKOV_DEFAULT_WINDOW

    ring: NovikovRing = c.ring
    lo, hi = check_window(window or c.window or NOVIKOV_DEFAULT_WINDOW)
    wanted = None if degrees is None else set(degrees)

    generators = []
    for k in range(lo, hi + 1):
        for g in c.generators:
            degree = g.degree - k * ring.period_degree
            if wanted is not None and degree not in wanted:
                continue
            generators.append(Generator(mono_name(k, g.name), degree, g.action - k * ring.period_action))
    kept = {g.name for g in generators}

    entries = []
    for k in range(lo, hi + 1):
        for source, column in c.differential.items():
            source_name = mono_name(k, source)
            if source_name not in kept:
                continue
            for target, coeff in column.items():
                for power, scalar in coeff:
                    target_name = mono_name(k + power, target)
                    if target_name in kept:
                        entries.append(BoundaryEntry(source_name, target_name, scalar))

    tags = tuple(t for t in c.tags if t != LIFT_TAG)
    return FilteredComplex(ring.base, tuple(generators), tuple(entries), tags, None)


def required_window(c: FilteredComplex, degree: int) -> Window:
    """
    차수 degree-1, degree, degree+1 의 모든 단항식 생성원을 덮는 윈도우

    차수별 단항식 생성원은 유한하므로 (N ≥ 2) 이 윈도우로 펼친 슬라이스는 정확하다.
    """
    ring: NovikovRing = c.ring
    powers = []
    for g in c.generators:
        for d in (degree - 1, degree, degree + 1):
            shift = g.degree - d
            if shift % ring.period_degree == 0:
                powers.append(shift // ring.period_degree)
    if not powers:
        return (0, 0)
    return (min(powers), max(powers))


def support_window(chain: Chain) -> Optional[Window]:
    """Novikov 체인 계수에 나타나는 거듭제곱 범위"""
    powers = [k for coeff in chain.values() for k, _ in coeff]
    if not powers:
        return None
    return (min(powers), max(powers))


def to_monomial_chain(chain: Chain) -> Chain:
    """Novikov 체인 {g: Σ s·t^k} → 단항식 체인 {t^k*g: s}"""
    result: Chain = {}
    for name, coeff in chain.items():
        for k, scalar in coeff:
            result[mono_name(k, name)] = scalar
    return result


def from_monomial_chain(c: FilteredComplex, chain: Chain) -> Chain:
    """단항식 체인 {t^k*g: s} → Novikov 체인 {g: Σ s·t^k}"""
    ring: NovikovRing = c.ring
    terms: Dict[str, list] = {}
    for name, scalar in chain.items():
        k, base_name = split_monomial_name(name)
        if base_name not in c.by_name:
            # 기저 이름 자체가 't^' 로 시작하는 경우
            k, base_name = 0, name
        terms.setdefault(base_name, []).append((k, scalar))
    result: Chain = {}
    for name, items in terms.items():
        value = ring.normalize(items)
        if not ring.is_zero(value):
            result[name] = value
    return result


def degree_slice(c: FilteredComplex, degree: int, chain: Optional[Chain] = None,
                 window: Optional[Window] = None) -> Tuple[FilteredComplex, Window]:
    """
    차수 degree 주변 슬라이스를 정확하게 펼친 기본환 복합체

    Args:
        c: Novikov 복합체
        degree: 대상 차수
        chain: 함께 덮어야 할 Novikov 체인 (클래스 대표)
        window: 추가로 포함할 윈도우

    Returns:
        (펼친 복합체, 사용한 윈도우)
    """
    used = hull(window, required_window(c, degree), support_window(chain or {}))
    return materialize(c, used, (degree - 1, degree, degree + 1)), used


def lift_class(c: FilteredComplex, alpha: ChainClass) -> ChainClass:
    """기본환 클래스 α 를 리프트 복합체의 클래스 (t^0 계수)로"""
    ring: NovikovRing = c.ring
    support = [(name, ring.monomial(0, coeff)) for name, coeff in alpha.support]
    return make_chain_class(c, support, alpha.degree)


def shift_class(alpha: ChainClass, k: int) -> ChainClass:
    """t^k·α (차수 -kN 이동)"""
    c = alpha.complex
    if not c.ring.is_novikov:
        raise UnsupportedRingError(f"Novikov 환이 아닙니다: {c.ring.descriptor()}")
    ring: NovikovRing = c.ring
    support = [(name, ring.shift_by_power(coeff, k)) for name, coeff in alpha.support]
    return make_chain_class(c, support, alpha.degree - k * ring.period_degree, check_cycle=False)


def novikov_spectrum_contains(c: FilteredComplex, value: Fraction) -> bool:
    """value = A(g) - k𝖠 인 생성원 g 와 정수 k 가 존재하는지"""
    ring: NovikovRing = c.ring
    for g in c.generators:
        ratio = (g.action - value) / ring.period_action
        if ratio.denominator == 1:
            return True
    return False
