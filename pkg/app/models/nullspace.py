from typing import Tuple

from app.core.matrix import SmallVector
from app.utils.models import DomainModel


class NullSpaceBasis(DomainModel):
    """Cơ sở không gian null (có thể rỗng); mọi vector v thỏa M v = 0."""

    vectors: Tuple[SmallVector, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.vectors)
