"""유클리드 환 위의 정확한 행렬 소거 (Smith 표준형, 연립방정식, 핵)"""
import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from src.coeff.base import Ring

logger = logging.getLogger(__name__)


@dataclass
class Matrix:
    """계수환 raw 값의 조밀 행렬 (rows × cols)"""
    ring: Ring
    rows: int
    cols: int
    data: List[List[Any]]

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, [[ring.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        m = cls.zeros(ring, n, n)
        for i in range(n):
            m.data[i][i] = ring.one
        return m

    @classmethod
    def from_columns(cls, ring: Ring, rows: int, columns: Sequence[Sequence[Any]]) -> "Matrix":
        m = cls.zeros(ring, rows, len(columns))
        for j, column in enumerate(columns):
            for i in range(rows):
                m.data[i][j] = column[i]
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.ring, self.rows, self.cols, [list(r) for r in self.data])

    def column(self, j: int) -> List[Any]:
        return [self.data[i][j] for i in range(self.rows)]

    def apply(self, vector: Sequence[Any]) -> List[Any]:
        ring = self.ring
        out = []
        for row in self.data:
            total = ring.zero
            for a, x in zip(row, vector):
                if not ring.is_zero(a) and not ring.is_zero(x):
                    total = ring.add(total, ring.mul(a, x))
            out.append(total)
        return out

    def matmul(self, other: "Matrix") -> "Matrix":
        result = Matrix.zeros(self.ring, self.rows, other.cols)
        for j in range(other.cols):
            column = self.apply(other.column(j))
            for i in range(self.rows):
                result.data[i][j] = column[i]
        return result

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, len(indices), self.cols, [list(self.data[i]) for i in indices])

    # 기본 행/열 연산
    def add_row(self, target: int, source: int, scalar: Any):
        """row[target] += scalar * row[source]"""
        ring = self.ring
        src = self.data[source]
        dst = self.data[target]
        for j in range(self.cols):
            if not ring.is_zero(src[j]):
                dst[j] = ring.add(dst[j], ring.mul(scalar, src[j]))

    def add_column(self, target: int, source: int, scalar: Any):
        """col[target] += scalar * col[source]"""
        ring = self.ring
        for row in self.data:
            if not ring.is_zero(row[source]):
                row[target] = ring.add(row[target], ring.mul(scalar, row[source]))

    def swap_rows(self, i: int, j: int):
        self.data[i], self.data[j] = self.data[j], self.data[i]

    def swap_columns(self, i: int, j: int):
        for row in self.data:
            row[i], row[j] = row[j], row[i]


@dataclass
class SmithForm:
    """
    Smith 분해 S = U·A·V

    Attributes:
        S: 대각 행렬 (앞쪽 rank 개 대각 성분만 0이 아님)
        U, U_inv: 행 연산 누적 (가역)
        V, V_inv: 열 연산 누적 (가역)
        rank: 0이 아닌 대각 성분 수
    """
    S: Matrix
    U: Matrix
    U_inv: Matrix
    V: Matrix
    V_inv: Matrix
    rank: int

    def diagonal(self) -> List[Any]:
        return [self.S.data[i][i] for i in range(self.rank)]

    def as_tuple(self) -> Tuple[Matrix, Matrix, Matrix, Matrix, Matrix]:
        return (self.S, self.U, self.U_inv, self.V, self.V_inv)


def _min_norm_position(ring: Ring, a: Matrix, t: int, positions) -> Optional[Tuple[int, int]]:
    best = None
    best_norm = None
    for i, j in positions:
        value = a.data[i][j]
        if ring.is_zero(value):
            continue
        n = ring.norm(value)
        if best is None or n < best_norm:
            best, best_norm = (i, j), n
    return best


def smith_normal_form(matrix: Matrix) -> SmithForm:
    """
    유클리드 환(Z, 체) 위의 Smith 대각화

    매 단계 남은 부분행렬에서 norm 이 최소인 성분을 피벗으로 골라
    원소 크기 증가를 억제한다.

    Args:
        matrix: rows × cols 행렬 (변경하지 않음)

    Returns:
        SmithForm (S = U·A·V)
    """
    ring = matrix.ring
    a = matrix.copy()
    m, n = a.rows, a.cols
    U, U_inv = Matrix.identity(ring, m), Matrix.identity(ring, m)
    V, V_inv = Matrix.identity(ring, n), Matrix.identity(ring, n)

    def row_add(target, source, scalar):
        a.add_row(target, source, scalar)
        U.add_row(target, source, scalar)
        U_inv.add_column(source, target, ring.neg(scalar))

    def row_swap(i, j):
        if i != j:
            a.swap_rows(i, j)
            U.swap_rows(i, j)
            U_inv.swap_columns(i, j)

    def col_add(target, source, scalar):
        a.add_column(target, source, scalar)
        V.add_column(target, source, scalar)
        V_inv.add_row(source, target, ring.neg(scalar))

    def col_swap(i, j):
        if i != j:
            a.swap_columns(i, j)
            V.swap_columns(i, j)
            V_inv.swap_rows(i, j)

    t = 0
    while t < min(m, n):
        pivot = _min_norm_position(ring, a, t, ((i, j) for i in range(t, m) for j in range(t, n)))
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])

        while True:
            p = a.data[t][t]
            for i in range(t + 1, m):
                if not ring.is_zero(a.data[i][t]):
                    q = ring.euclid_quotient(a.data[i][t], p)
                    row_add(i, t, ring.neg(q))
            for j in range(t + 1, n):
                if not ring.is_zero(a.data[t][j]):
                    q = ring.euclid_quotient(a.data[t][j], p)
                    col_add(j, t, ring.neg(q))

            # 나머지가 남았으면 더 작은 피벗으로 교체 후 반복
            cross = [(i, t) for i in range(t + 1, m)] + [(t, j) for j in range(t + 1, n)]
            smaller = _min_norm_position(ring, a, t, cross)
            if smaller is None:
                break
            if smaller[1] == t:
                row_swap(t, smaller[0])
            else:
                col_swap(t, smaller[1])
        t += 1

    return SmithForm(a, U, U_inv, V, V_inv, t)


def solve(matrix: Matrix, rhs: Sequence[Any], form: Optional[SmithForm] = None) -> Optional[List[Any]]:
    """
    A·x = b 의 해 (정수환에서는 디오판토스 해)

    Args:
        matrix: A
        rhs: b (길이 = A.rows)
        form: 재사용할 Smith 분해 (없으면 계산)

    Returns:
        해 x 또는 해가 없으면 None
    """
    ring = matrix.ring
    form = form or smith_normal_form(matrix)
    c = form.U.apply(rhs)
    y = [ring.zero] * matrix.cols
    for i in range(form.rank):
        s = form.S.data[i][i]
        q = ring.euclid_quotient(c[i], s)
        if not ring.is_zero(ring.sub(c[i], ring.mul(q, s))):
            return None
        y[i] = q
    for i in range(form.rank, matrix.rows):
        if not ring.is_zero(c[i]):
            return None
    return form.V.apply(y)


def kernel_basis(matrix: Matrix, form: Optional[SmithForm] = None) -> List[List[Any]]:
    """핵의 기저 (V 의 rank 이후 열; 정수환에서도 자유 기저)"""
    form = form or smith_normal_form(matrix)
    return [form.V.column(j) for j in range(form.rank, matrix.cols)]
