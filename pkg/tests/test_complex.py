"""필터 복합체 자료형 및 연산 테스트"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.complex.base import (
    BoundaryEntry,
    FilteredComplex,
    FilteredMap,
    Generator,
    add_classes,
    make_chain_class,
    scale_class,
)
from src.complex.operations import (
    diagonal_repackage,
    dual_class,
    dualize,
    pairing,
    perturb_actions,
    repackage_class,
    shift_actions,
    sublevel,
    tensor,
    tensor_class,
    validate,
)
from src.models.morse import morse_torus
from src.utils.errors import (
    ClassMismatchError,
    FiltrationViolationError,
    NotACycleError,
    PerturbationBoundError,
    RingMismatchError,
)


def _complex(ring, gens, entries=()):
    return FilteredComplex(ring, tuple(Generator(*g) for g in gens),
                           tuple(BoundaryEntry(*e) for e in entries))


class TestValidate:
    """복합체 불변식 검증"""

    def test_valid_interval(self, interval_q):
        assert validate(interval_q).ok

    def test_equal_action_is_violation(self, z):
        c = _complex(z, [("max", 1, 1), ("min", 0, 1)], [("max", "min", 1)])
        assert validate(c).kinds() == ["action"]

    def test_degree_violation(self, z):
        c = _complex(z, [("a", 2, 1), ("b", 0, 0)], [("a", "b", 1)])
        assert "degree" in validate(c).kinds()

    def test_duplicate_and_unknown(self, z):
        c = _complex(z, [("a", 0, 0), ("a", 0, 1)])
        assert validate(c).kinds() == ["duplicate-name"]
        c = _complex(z, [("a", 1, 1)], [("a", "ghost", 1)])
        assert validate(c).kinds() == ["unknown-generator"]

    def test_d_squared(self, z):
        c = _complex(z, [("x", 2, 2), ("y", 1, 1), ("w", 0, 0)], [("x", "y", 1), ("y", "w", 1)])
        assert validate(c).kinds() == ["d-squared"]

    def test_zero_coefficient_entry_is_ignored(self, f2):
        # F2 에서 2 = 0 이므로 성분 자체가 없는 것과 같다
        c = _complex(f2, [("c2", 2, 1), ("c1", 1, 1)], [("c2", "c1", 0)])
        assert validate(c).ok


class TestChainClass:
    """사이클 클래스 생성과 연산"""

    def test_not_a_cycle(self, interval_q):
        with pytest.raises(NotACycleError):
            make_chain_class(interval_q, [("a", 1)])

    def test_unknown_generator(self, circle_z):
        with pytest.raises(ClassMismatchError):
            make_chain_class(circle_z, [("ghost", 1)])

    def test_empty_chain_needs_degree(self, circle_z):
        with pytest.raises(ClassMismatchError):
            make_chain_class(circle_z, [])
        zero = make_chain_class(circle_z, [], 1)
        assert zero.is_zero_chain() and zero.degree == 1

    def test_mixed_degree_rejected(self, circle_z):
        with pytest.raises(ClassMismatchError):
            make_chain_class(circle_z, [("min", 1), ("max", 1)], 0)

    def test_support_follows_generator_order(self, interval_q):
        alpha = make_chain_class(interval_q, [("b'", 1), ("b", 2)])
        assert [name for name, _ in alpha.support] == ["b", "b'"]

    def test_scale_and_add(self, rp2_z):
        c1 = make_chain_class(rp2_z, [("c1", 1)])
        assert scale_class(c1, 2).as_chain() == {"c1": 2}
        assert add_classes(c1, c1).as_chain() == {"c1": 2}
        assert scale_class(c1, 0).is_zero_chain()


class TestSublevel:
    """부분준위 V^a (작용 < a)"""

    def test_strict_threshold(self, torus_z):
        assert sublevel(torus_z, 1).names == ["min"]
        assert sublevel(torus_z, Fraction(3, 2)).names == ["min", "s1", "s2"]

    def test_infinite_thresholds(self, torus_z):
        from src.spectral.values import NEG_INF, POS_INF

        assert sublevel(torus_z, NEG_INF).names == []
        assert sublevel(torus_z, POS_INF).names == torus_z.names

    def test_drops_boundary_leaving_sublevel(self, interval_q):
        sub = sublevel(interval_q, 1)
        assert sub.names == ["b", "b'"]
        assert sub.boundary == ()


class TestDualize:
    """쌍대 복합체"""

    def test_involution(self, interval_q, rp2_z):
        for c in (interval_q, rp2_z):
            assert dualize(dualize(c)) == c

    def test_negated_degrees_and_actions(self, interval_q):
        dual = dualize(interval_q)
        assert dual.has_tag("dual")
        assert dual.by_name["a^v"] == Generator("a^v", -1, -1)
        assert validate(dual).ok

    def test_transpose_sign(self, interval_q):
        dual = dualize(interval_q)
        # ∂a = b − b' 의 코체인 차수 0 성분: 부호 (−1)^{0−1} = −1
        assert dual.differential["b^v"] == {"a^v": Fraction(-1)}
        assert dual.differential["b'^v"] == {"a^v": Fraction(1)}

    def test_dual_class_and_pairing(self, interval_q):
        cocycle = dual_class(interval_q, [("b", 1), ("b'", 1)], 0)
        cycle = make_chain_class(interval_q, [("b", 1)])
        assert pairing(cocycle, cycle) == 1

    def test_pairing_ring_mismatch(self, circle_z, circle_f2):
        cocycle = dual_class(circle_z, [("max", 1)], 1)
        with pytest.raises(RingMismatchError):
            pairing(cocycle, make_chain_class(circle_f2, [("max", 1)]))


class TestTensor:
    """텐서곱 복합체"""

    def test_generators_and_koszul_sign(self, interval_q):
        product = tensor(interval_q, interval_q)
        assert len(product.generators) == 9
        assert product.by_name["(a,a)"].degree == 2
        assert product.by_name["(a,a)"].action == 2
        # ∂(a⊗a) = ∂a⊗a − a⊗∂a
        assert product.differential["(a,a)"] == {
            "(b,a)": 1, "(b',a)": -1, "(a,b)": -1, "(a,b')": 1,
        }
        assert validate(product).ok

    def test_circle_square_is_torus(self, circle_f2, f2):
        product = tensor(circle_f2, circle_f2)
        torus = morse_torus(0, 1, 1, 2, f2)
        assert product.boundary == () == torus.boundary
        assert sorted((g.degree, g.action) for g in product.generators) == \
            sorted((g.degree, g.action) for g in torus.generators)

    def test_ring_mismatch(self, circle_z, circle_f2):
        with pytest.raises(RingMismatchError):
            tensor(circle_z, circle_f2)

    def test_tensor_class(self, circle_f2):
        product = tensor(circle_f2, circle_f2)
        alpha = make_chain_class(circle_f2, [("max", 1)])
        cls = tensor_class(alpha, alpha, product)
        assert cls.as_chain() == {"(max,max)": 1}
        assert cls.degree == 2


class TestActionMoves:
    """작용 이동과 섭동"""

    def test_shift_actions(self, circle_z):
        moved = shift_actions(circle_z, "1/2")
        assert [g.action for g in moved.generators] == [Fraction(1, 2), Fraction(3, 2)]
        assert moved.boundary == circle_z.boundary

    def test_perturbation_within_bound(self, interval_q):
        perturbed = perturb_actions(interval_q, {"a": Fraction(-1, 4), "b": Fraction(1, 4)}, Fraction(1, 4))
        assert perturbed.action_of("a") == Fraction(3, 4)
        assert perturbed.action_of("b'") == 0

    def test_perturbation_too_large(self, interval_q):
        with pytest.raises(PerturbationBoundError):
            perturb_actions(interval_q, {"a": 1}, Fraction(1, 2))
        with pytest.raises(PerturbationBoundError):
            perturb_actions(interval_q, {"ghost": 0}, 1)

    def test_perturbation_breaking_filtration(self, interval_q):
        with pytest.raises(FiltrationViolationError):
            perturb_actions(interval_q, {"a": Fraction(-1, 2), "b": Fraction(1, 2)}, Fraction(1, 2))


class TestDiagonalRepackage:
    """주기 궤도 모델의 대각 재포장"""

    def test_renames_and_keeps_data(self, interval_q):
        diag = diagonal_repackage(interval_q)
        assert diag.names == ["diag:a", "diag:b", "diag:b'"]
        assert diag.has_tag("lagrangian")
        assert diag.by_name["diag:a"].action == 1
        alpha = make_chain_class(interval_q, [("b", 1)])
        assert repackage_class(alpha, diag).as_chain() == {"diag:b": 1}


class TestFilteredMap:
    """필터 체인 사상"""

    def test_identity_shift(self, circle_z):
        moved = shift_actions(circle_z, 2)
        f = FilteredMap.identity(circle_z, moved)
        assert f.shift == 2
        assert f.validate().ok

    def test_understated_shift(self, circle_z):
        moved = shift_actions(circle_z, 2)
        f = FilteredMap.identity(circle_z, moved, shift=Fraction(1))
        assert "shift" in f.validate().kinds()

    def test_not_a_chain_map(self, interval_q):
        entries = (BoundaryEntry("a", "a", 1),)
        f = FilteredMap(interval_q, interval_q, entries, 0)
        assert "chain-map" in f.validate().kinds()

    def test_compose(self, circle_z):
        up = FilteredMap.identity(circle_z, shift_actions(circle_z, 1))
        down = FilteredMap.identity(up.target, circle_z)
        both = up.compose(down)
        assert both.shift == 0
        assert both.apply({"max": 1}) == {"max": 1}

    def test_push_class_from_other_complex(self, circle_z, torus_z):
        f = FilteredMap.identity(circle_z, circle_z)
        with pytest.raises(ClassMismatchError):
            f.push_class(make_chain_class(torus_z, [("s1", 1)]))

    def test_identity_needs_same_names(self, circle_z, torus_z):
        with pytest.raises(ClassMismatchError):
            FilteredMap.identity(torus_z, circle_z)
