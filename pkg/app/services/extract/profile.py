"""
Phân tích mẫu cột của B khi B != 0 và B^2 = 0 (trị riêng bội ba, eigenspace 2 chiều).
"""

from typing import Optional
import logging

from app.constants import ScalarMode
from app.core.columns import first_nonzero_column
from app.core.exceptions import (
    DimensionMismatchException,
    NotNilpotentException,
    ZeroMatrixException,
    ZeroVectorException,
)
from app.core.matrix import SmallMatrix, SmallVector
from app.core.scalar import Scalar, as_scalar
from app.core.tolerance import TolerancePolicy
from app.models import ColumnCaseProfile

logger = logging.getLogger(__name__)


def _pivot_index(v: SmallVector) -> int:
    """Exact: phần tử khác 0 đầu tiên; float: phần tử có trị tuyệt đối lớn nhất."""
    if v.mode == ScalarMode.EXACT:
        return next(i for i, e in enumerate(v) if not e.is_zero())
    return max(range(v.dim), key=lambda i: abs(v[i].value))


def _ratio(column: SmallVector, pivot: SmallVector, index: int) -> Scalar:
    return column[index] / pivot[index]


def _check_proportional(
    column: SmallVector, pivot: SmallVector, ratio: Scalar, threshold: float, label: str
) -> None:
    residual = column - pivot.scale(ratio)
    if not residual.is_zero(threshold):
        raise NotNilpotentException(
            f"Column {label} is not proportional to the pivot column; B^2 != 0"
        )


def column_case_profile(b: SmallMatrix, tol: TolerancePolicy) -> ColumnCaseProfile:
    """
    Xác định case theo cột khác 0 đầu tiên của B và kiểm tra điều kiện B^2 = 0.

    Args:
        b: Ma trận dịch chuyển 3x3, khác 0.
        tol: TolerancePolicy (chỉ dùng ở float mode).

    Returns:
        ColumnCaseProfile với t, s, condition_value, eigenbasis và vector suy rộng.

    Raises:
        ZeroMatrixException: Nếu B = 0.
        NotNilpotentException: Nếu các cột không tỉ lệ hoặc điều kiện của case không thỏa.
    """
    if b.dim != 3:
        raise DimensionMismatchException("column_case_profile requires a 3x3 matrix")
    picked = first_nonzero_column(b, tol)
    if picked is None:
        raise ZeroMatrixException("column_case_profile requires B != 0")

    mode = b.mode
    exact = mode == ScalarMode.EXACT
    threshold = 0.0 if exact else tol.effective_threshold(b)
    zero, one = Scalar.zero(mode), Scalar.one(mode)
    e1, e2, e3 = (SmallVector.unit(3, i, mode) for i in range(3))
    index, v = picked
    x, y, z = v.entries

    t: Optional[Scalar] = None
    s: Optional[Scalar] = None
    if index == 0:
        p = _pivot_index(v)
        t = _ratio(b.column(1), v, p)
        s = _ratio(b.column(2), v, p)
        _check_proportional(b.column(1), v, t, threshold, "1")
        _check_proportional(b.column(2), v, s, threshold, "2")
        condition = x + t * y + s * z
        scale = max(1.0, abs(t.to_float()), abs(s.to_float()))
        basis = (SmallVector((-t, one, zero)), SmallVector((-s, zero, one)))
        generalized = e1
    elif index == 1:
        p = _pivot_index(v)
        t = _ratio(b.column(2), v, p)
        _check_proportional(b.column(2), v, t, threshold, "2")
        condition = y + t * z
        scale = max(1.0, abs(t.to_float()))
        basis = (SmallVector((zero, -t, one)), e1)
        generalized = e2
    else:
        condition = z
        scale = 1.0
        basis = (e1, e2)
        generalized = e3

    if not condition.is_zero(threshold * scale):
        raise NotNilpotentException(
            f"Case {index + 1} condition fails (value {condition}); B^2 != 0"
        )

    logger.debug(f"Column case {index + 1}: pivot {v}, t={t}, s={s}, condition={condition}")
    return ColumnCaseProfile(
        case_id=index + 1,
        pivot_column=v,
        t=t,
        s=s,
        condition_value=condition,
        eigenbasis=basis,
        eigenvector=v,
        generalized=generalized,
        tolerance_sensitive=not exact,
    )


def nilpotent_from_parameters(case_id: int, **params) -> SmallMatrix:
    """
    Dựng B (B != 0, B^2 = 0) từ tham số của từng case.

    case 1: t, s, y, z với (y, z) != 0; cột đầu (-t y - s z, y, z)
    case 2: t, x, z với (x, z) != 0; cột hai (x, -t z, z)
    case 3: x, y không đồng thời bằng 0
    """
    p = {key: as_scalar(value) for key, value in params.items()}
    if case_id == 1:
        v = SmallVector((-p["t"] * p["y"] - p["s"] * p["z"], p["y"], p["z"]))
        columns = [v, v.scale(p["t"]), v.scale(p["s"])]
    elif case_id == 2:
        v = SmallVector((p["x"], -p["t"] * p["z"], p["z"]))
        columns = [SmallVector.zeros(3, v.mode), v, v.scale(p["t"])]
    elif case_id == 3:
        v = SmallVector((p["x"], p["y"], Scalar.zero(p["x"].mode)))
        columns = [SmallVector.zeros(3, v.mode), SmallVector.zeros(3, v.mode), v]
    else:
        raise ValueError(f"Unknown column case {case_id}")
    if v.is_zero():
        raise ZeroVectorException(f"Parameters {params} give B = 0")
    return SmallMatrix.from_columns(columns)
