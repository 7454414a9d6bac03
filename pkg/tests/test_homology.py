"""정확한 선형대수 및 호몰로지 테스트"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.complex.base import make_chain_class
from src.homology.homology import (
    MembershipCache,
    boundary_matrix,
    boundary_witness,
    homology,
    in_image_of_sublevel,
    is_boundary,
)
from src.homology.linalg import Matrix, kernel_basis, smith_normal_form, solve
from src.models.morse import morse_rp2
from src.spectral.values import NEG_INF, POS_INF
from src.utils.errors import NotACycleError


class TestSmithNormalForm:
    """Smith 표준형"""

    def test_diagonal_and_factorization(self, z):
        a = Matrix(z, 2, 2, [[2, 4], [6, 8]])
        form = smith_normal_form(a)

        assert form.rank == 2
        assert sorted(abs(d) for d in form.diagonal()) == [2, 4]
        assert form.U.matmul(a).matmul(form.V).data == form.S.data
        assert form.U.matmul(form.U_inv).data == Matrix.identity(z, 2).data
        assert form.V.matmul(form.V_inv).data == Matrix.identity(z, 2).data

    def test_input_not_modified(self, z):
        a = Matrix(z, 2, 2, [[2, 4], [6, 8]])
        smith_normal_form(a)
        assert a.data == [[2, 4], [6, 8]]

    def test_zero_matrix_has_rank_zero(self, q):
        assert smith_normal_form(Matrix.zeros(q, 2, 3)).rank == 0

    def test_field_diagonal_is_units(self, f3):
        form = smith_normal_form(Matrix(f3, 2, 2, [[1, 2], [2, 1]]))
        # det = 1 - 4 = -3 ≡ 0 (mod 3)
        assert form.rank == 1


class TestSolve:
    """A·x = b"""

    def test_integer_solution(self, z):
        assert solve(Matrix(z, 1, 1, [[2]]), [4]) == [2]

    def test_integer_no_solution(self, z):
        assert solve(Matrix(z, 1, 1, [[2]]), [3]) is None

    def test_rational_solution(self, q):
        assert solve(Matrix(q, 1, 1, [[Fraction(2)]]), [Fraction(3)]) == [Fraction(3, 2)]

    def test_inconsistent_system(self, q):
        a = Matrix(q, 2, 1, [[Fraction(1)], [Fraction(1)]])
        assert solve(a, [Fraction(1), Fraction(2)]) is None

    def test_solution_satisfies_system(self, z):
        a = Matrix(z, 2, 3, [[1, 2, 3], [0, 4, 6]])
        x = solve(a, [6, 10])
        assert x is not None
        assert a.apply(x) == [6, 10]


class TestKernelBasis:
    def test_kernel_vectors_are_annihilated(self, q):
        a = Matrix(q, 1, 2, [[Fraction(1), Fraction(1)]])
        kernel = kernel_basis(a)
        assert len(kernel) == 1
        assert a.apply(kernel[0]) == [0]

    def test_full_rank_has_empty_kernel(self, z):
        assert kernel_basis(Matrix.identity(z, 3)) == []


class TestHomology:
    """호몰로지 계수와 꼬임"""

    def test_circle(self, circle_z):
        assert homology(circle_z, 0).rank == 1
        assert homology(circle_z, 1).rank == 1
        assert homology(circle_z, 2).rank == 0

    def test_rp2_integer_torsion(self, rp2_z):
        h1 = homology(rp2_z, 1)
        assert h1.rank == 0
        assert h1.torsion_orders == [2]
        assert homology(rp2_z, 2).rank == 0
        assert homology(rp2_z, 0).rank == 1

    def test_rp2_over_f2_has_no_torsion(self, f2):
        rp2 = morse_rp2(0, 1, 2, f2)
        for d in (0, 1, 2):
            h = homology(rp2, d)
            assert h.rank == 1
            assert h.torsion_orders == []

    def test_rp2_over_q_kills_degree_one(self, q):
        rp2 = morse_rp2(0, 1, 2, q)
        h1 = homology(rp2, 1)
        assert h1.rank == 0
        assert h1.torsion_orders == []

    def test_interval(self, interval_q):
        assert homology(interval_q, 0).rank == 1
        assert homology(interval_q, 1).rank == 0

    def test_torus_ranks(self, torus_z):
        assert [homology(torus_z, d).rank for d in (0, 1, 2)] == [1, 2, 1]

    def test_representatives_are_cycles(self, rp2_z):
        for cls in homology(rp2_z, 1).classes():
            assert rp2_z.boundary_of(cls.as_chain()) == {}

    def test_boundary_matrix_names(self, interval_q):
        m, rows, cols = boundary_matrix(interval_q, 1)
        assert rows == ["b", "b'"]
        assert cols == ["a"]
        assert m.column(0) == [1, -1]


class TestBoundary:
    """경계 판정과 증인"""

    def test_difference_of_endpoints_is_boundary(self, interval_q):
        diff = make_chain_class(interval_q, [("b", 1), ("b'", -1)])
        assert boundary_witness(interval_q, diff) == {"a": 1}
        assert is_boundary(interval_q, diff)

    def test_endpoint_is_not_boundary(self, interval_q):
        assert not is_boundary(interval_q, make_chain_class(interval_q, [("b", 1)]))

    def test_twice_torsion_is_boundary(self, rp2_z):
        twice = make_chain_class(rp2_z, [("c1", 2)])
        assert boundary_witness(rp2_z, twice) == {"c2": 1}

    def test_torsion_generator_is_not_boundary(self, rp2_z):
        assert not is_boundary(rp2_z, make_chain_class(rp2_z, [("c1", 1)]))

    def test_zero_class(self, circle_z):
        zero = make_chain_class(circle_z, [], 1)
        assert boundary_witness(circle_z, zero) == {}

    def test_non_cycle_rejected(self, interval_q):
        not_cycle = make_chain_class(interval_q, [("a", 1)], check_cycle=False)
        with pytest.raises(NotACycleError):
            is_boundary(interval_q, not_cycle)


class TestSublevelImage:
    """부분준위 이미지 판정"""

    def test_strict_and_inclusive_thresholds(self, interval_q):
        b = make_chain_class(interval_q, [("b", 1)])
        assert not in_image_of_sublevel(interval_q, 0, b)
        assert in_image_of_sublevel(interval_q, 0, b, inclusive=True)
        assert in_image_of_sublevel(interval_q, Fraction(1, 2), b)

    def test_infinite_thresholds(self, circle_z):
        top = make_chain_class(circle_z, [("max", 1)])
        assert in_image_of_sublevel(circle_z, POS_INF, top)
        assert not in_image_of_sublevel(circle_z, NEG_INF, top)

    def test_homologous_lower_representative(self, interval_q):
        # b' 는 b 와 호몰로그이고 둘 다 작용 0
        b_prime = make_chain_class(interval_q, [("b'", 1)])
        assert in_image_of_sublevel(interval_q, 0, b_prime, inclusive=True)

    def test_cache_reuses_factorization(self, circle_z):
        cache = MembershipCache()
        top = make_chain_class(circle_z, [("max", 1)])
        in_image_of_sublevel(circle_z, 1, top, cache=cache)
        in_image_of_sublevel(circle_z, 1, top, cache=cache)
        assert cache.cache_info().hits >= 1
        cache.clear()
        assert cache.cache_info().currsize == 0
