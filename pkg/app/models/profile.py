from typing import Optional, Tuple

from app.core.matrix import SmallVector
from app.core.scalar import Scalar
from app.utils.models import DomainModel


class ColumnCaseProfile(DomainModel):
    """
    Mẫu cột của B (B != 0, B^2 = 0) cho trường hợp trị riêng bội ba, eigenspace 2 chiều.

    case 1: B = (v | t v | s v), điều kiện x + t y + s z = 0
    case 2: B = (0 | v | t v), điều kiện y + t z = 0
    case 3: B = (0 | 0 | v), điều kiện z = 0
    """

    case_id: int
    pivot_column: SmallVector
    t: Optional[Scalar] = None
    s: Optional[Scalar] = None
    condition_value: Scalar
    eigenbasis: Tuple[SmallVector, SmallVector]
    eigenvector: SmallVector
    generalized: SmallVector
    tolerance_sensitive: bool = False
