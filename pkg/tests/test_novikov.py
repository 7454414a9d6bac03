"""Novikov 리프트, 단항식 윈도우, 스펙트럼 불변량 테스트"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.complex.base import make_chain_class
from src.complex.novikov import (
    LIFT_TAG,
    check_window,
    from_monomial_chain,
    hull,
    lift_class,
    materialize,
    mono_name,
    novikov_lift,
    novikov_spectrum_contains,
    required_window,
    shift_class,
    split_monomial_name,
    to_monomial_chain,
)
from src.homology.homology import homology
from src.spectral.invariants import action_spectrum, novikov_spectral_invariant, spectral_invariant
from src.utils.errors import EmptyWindowError, UnsupportedRingError


@pytest.fixture
def lifted_circle(circle_f2):
    """N = 2, 𝖠 = 1, 윈도우 -1..1"""
    return novikov_lift(circle_f2, 2, 1, (-1, 1))


class TestLift:
    def test_lift_keeps_generators_and_tags(self, circle_f2, lifted_circle):
        assert lifted_circle.ring.is_novikov
        assert lifted_circle.names == circle_f2.names
        assert LIFT_TAG in lifted_circle.tags
        assert lifted_circle.window == (-1, 1)

    def test_lift_of_lift_rejected(self, lifted_circle):
        with pytest.raises(UnsupportedRingError):
            novikov_lift(lifted_circle, 2, 1)

    def test_period_degree_must_be_at_least_two(self, circle_f2):
        with pytest.raises(ValueError):
            novikov_lift(circle_f2, 1, 1)

    def test_boundary_coefficients_become_monomials(self, rp2_z):
        lifted = novikov_lift(rp2_z, 2, 1)
        assert lifted.differential["c2"]["c1"] == lifted.ring.monomial(0, 2)


class TestWindows:
    """윈도우 계산"""

    def test_empty_window(self):
        with pytest.raises(EmptyWindowError):
            check_window((2, 1))

    def test_hull_ignores_missing(self):
        assert hull((0, 0), (-2, 1), None) == (-2, 1)

    def test_hull_needs_a_window(self):
        with pytest.raises(EmptyWindowError):
            hull(None)

    def test_required_window(self, lifted_circle):
        assert required_window(lifted_circle, 1) == (-1, 0)


class TestMaterialize:
    """단항식 기저 전개"""

    def test_names_degrees_actions(self, lifted_circle):
        flat = materialize(lifted_circle)
        assert not flat.ring.is_novikov
        assert flat.names == ["t^-1*min", "t^-1*max", "min", "max", "t^1*min", "t^1*max"]
        assert flat.degree_of("t^-1*min") == 2
        assert flat.action_of("t^-1*min") == 1
        assert flat.degree_of("t^1*max") == -1
        assert flat.action_of("t^1*max") == 0

    def test_degree_filter(self, lifted_circle):
        flat = materialize(lifted_circle, (0, 0), degrees=[1])
        assert flat.names == ["max"]

    def test_base_ring_complex_unchanged(self, circle_f2):
        assert materialize(circle_f2) is circle_f2

    def test_action_spectrum_uses_window(self, lifted_circle):
        assert tuple(action_spectrum(lifted_circle)) == (-1, 0, 1, 2)


class TestMonomialChains:
    def test_monomial_names(self):
        assert mono_name(0, "max") == "max"
        assert mono_name(-1, "min") == "t^-1*min"
        assert split_monomial_name("t^-1*min") == (-1, "min")
        assert split_monomial_name("plain") == (0, "plain")

    def test_chain_conversion(self, lifted_circle):
        ring = lifted_circle.ring
        chain = {"max": ring.monomial(1, 1)}
        flat = to_monomial_chain(chain)
        assert flat == {"t^1*max": 1}
        assert from_monomial_chain(lifted_circle, flat) == chain

    def test_shift_class_changes_degree(self, circle_f2, lifted_circle):
        top = lift_class(lifted_circle, make_chain_class(circle_f2, [("max", 1)]))
        shifted = shift_class(top, 1)
        assert shifted.degree == -1
        assert shifted.as_chain() == {"max": lifted_circle.ring.monomial(1, 1)}

    def test_shift_class_requires_novikov(self, circle_f2):
        with pytest.raises(UnsupportedRingError):
            shift_class(make_chain_class(circle_f2, [("max", 1)]), 1)


class TestNovikovInvariants:
    """Novikov 복합체 위의 ℓ"""

    def test_lifted_class_value(self, circle_f2, lifted_circle):
        top = lift_class(lifted_circle, make_chain_class(circle_f2, [("max", 1)]))
        value, doublings = novikov_spectral_invariant(lifted_circle, top)
        assert value == 1
        assert 1 <= doublings <= 3

    def test_power_shifts_value(self, circle_f2, lifted_circle):
        top = lift_class(lifted_circle, make_chain_class(circle_f2, [("max", 1)]))
        for k in (-2, -1, 1, 2):
            assert spectral_invariant(lifted_circle, shift_class(top, k)) == 1 - k

    def test_homology_in_shifted_degrees(self, lifted_circle):
        assert homology(lifted_circle, 1).rank == 1
        assert homology(lifted_circle, -1).rank == 1

    def test_spectrum_membership(self, circle_f2):
        lifted = novikov_lift(circle_f2, 2, Fraction(3, 2))
        assert novikov_spectrum_contains(lifted, Fraction(-1, 2))
        assert not novikov_spectrum_contains(lifted, Fraction(1, 2))
