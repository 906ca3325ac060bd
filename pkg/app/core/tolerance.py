from typing import Union

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings
from app.core.matrix import SmallMatrix, SmallVector


class TolerancePolicy(BaseModel):
    """
    Chính sách zero-test cho float mode; bị bỏ qua hoàn toàn ở exact mode.

    Nếu relative = True, ngưỡng hiệu dụng = zero_threshold * max(1, max-abs của đối tượng đang kiểm tra).
    """

    zero_threshold: float = Field(1e-9, ge=0)
    relative: bool = True
    cluster_eps: float = Field(1e-6, ge=0)

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_settings(cls, **overrides) -> "TolerancePolicy":
        values = {
            "zero_threshold": settings.CH_EIGEN_TOLERANCE,
            "relative": settings.CH_EIGEN_RELATIVE,
            "cluster_eps": settings.CH_EIGEN_CLUSTER_EPS,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def effective_threshold(self, subject: Union[SmallMatrix, SmallVector]) -> float:
        if not self.relative:
            return self.zero_threshold
        return self.zero_threshold * max(1.0, subject.max_abs())


EXACT_POLICY = TolerancePolicy(zero_threshold=0.0, relative=False)
