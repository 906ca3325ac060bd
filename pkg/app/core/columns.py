from typing import List, Optional, Sequence, Tuple

from app.constants import ScalarMode
from app.core.matrix import SmallMatrix, SmallVector
from app.core.scalar import Scalar
from app.core.tolerance import TolerancePolicy


def _threshold(subject, tol: TolerancePolicy) -> float:
    if subject.mode == ScalarMode.EXACT:
        return 0.0
    return tol.effective_threshold(subject)


def is_zero_matrix(m: SmallMatrix, tol: TolerancePolicy) -> bool:
    threshold = _threshold(m, tol)
    return all(e.is_zero(threshold) for row in m.rows for e in row)


def is_zero_vector(v: SmallVector, tol: TolerancePolicy) -> bool:
    return v.is_zero(_threshold(v, tol))


def first_nonzero_column(
    m: SmallMatrix, tol: TolerancePolicy
) -> Optional[Tuple[int, SmallVector]]:
    """Cột khác 0 có index nhỏ nhất (cột được trả về nguyên vẹn, không tính toán thêm)."""
    threshold = _threshold(m, tol)
    for j, column in enumerate(m.columns()):
        if m.mode == ScalarMode.EXACT:
            if not column.is_zero():
                return j, column
        elif column.max_abs() > threshold:
            return j, column
    return None


def best_column_index(
    m: SmallMatrix, tol: TolerancePolicy
) -> Optional[Tuple[int, SmallVector]]:
    """Exact: cột khác 0 đầu tiên; float: cột có chuẩn Euclid lớn nhất."""
    if m.mode == ScalarMode.EXACT:
        return first_nonzero_column(m, tol)
    columns = m.columns()
    j = max(range(len(columns)), key=lambda k: columns[k].norm())
    if columns[j].norm() <= _threshold(m, tol):
        return None
    return j, columns[j]


def best_column(m: SmallMatrix, tol: TolerancePolicy) -> Optional[SmallVector]:
    picked = best_column_index(m, tol)
    return picked[1] if picked else None


def minors_2x2(u: SmallVector, v: SmallVector) -> List[Scalar]:
    """Các định thức con 2x2 của cặp cột (u | v)."""
    n = u.dim
    return [u[i] * v[j] - u[j] * v[i] for i in range(n) for j in range(i + 1, n)]


def are_independent(vectors: Sequence[SmallVector], tol: TolerancePolicy) -> bool:
    """
    Kiểm tra độc lập tuyến tính bằng định thức con, không khử Gauss.

    Float mode dùng ngưỡng tương đối theo tích chuẩn của các vector.
    """
    if not vectors:
        return True
    dim = vectors[0].dim
    if len(vectors) > dim:
        return False
    exact = vectors[0].mode == ScalarMode.EXACT
    scale = 1.0
    if not exact:
        for v in vectors:
            scale *= max(1.0, v.max_abs())
    threshold = 0.0 if exact else tol.zero_threshold * scale

    if len(vectors) == 1:
        return not vectors[0].is_zero(threshold)
    if len(vectors) == 2:
        return any(not m.is_zero(threshold) for m in minors_2x2(vectors[0], vectors[1]))
    return not SmallMatrix.from_columns(list(vectors)).det().is_zero(threshold)
