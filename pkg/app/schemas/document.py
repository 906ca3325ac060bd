from collections import defaultdict
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.constants import ScalarMode, SpectralKind
from app.core.matrix import SmallMatrix
from app.core.scalar import Scalar, as_scalar
from app.models import SpectralClass
from app.utils.models import DomainModel


class MatrixDocument(DomainModel):
    """Tài liệu đầu vào: {"matrix": [[scalar, ...], ...], "name": tùy chọn}."""

    matrix: SmallMatrix
    name: Optional[str] = None

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def mode(self) -> ScalarMode:
        return self.matrix.mode


class JordanBlock(DomainModel):
    eigenvalue: Scalar
    size: int = Field(..., ge=1, le=3)

    @field_validator("eigenvalue", mode="before")
    @classmethod
    def coerce_eigenvalue(cls, v):
        if isinstance(v, float) or (isinstance(v, Scalar) and not v.is_exact):
            raise ValueError("Jordan block eigenvalues must be exact")
        return as_scalar(v)


class JordanSpec(DomainModel):
    """
    Cấu trúc Jordan mong muốn: danh sách block (eigenvalue, kích thước).

    Chấp nhận block dạng {"eigenvalue": "3", "size": 2} hoặc cặp ["3", 2].
    """

    dim: int
    blocks: List[JordanBlock]

    @field_validator("blocks", mode="before")
    @classmethod
    def assemble_blocks(cls, v):
        if isinstance(v, list):
            return [
                {"eigenvalue": b[0], "size": b[1]} if isinstance(b, (list, tuple)) else b
                for b in v
            ]
        return v

    @model_validator(mode="after")
    def check_sizes(self):
        if self.dim not in (2, 3):
            raise ValueError(f"Jordan spec dimension must be 2 or 3, got {self.dim}")
        total = sum(b.size for b in self.blocks)
        if total != self.dim:
            raise ValueError(f"Block sizes sum to {total}, expected {self.dim}")
        return self

    def grouped(self) -> Dict[Scalar, List[int]]:
        groups: Dict[Scalar, List[int]] = defaultdict(list)
        for block in self.blocks:
            groups[block.eigenvalue].append(block.size)
        return dict(groups)

    def expected_class(self) -> SpectralClass:
        """SpectralClass mà ma trận sinh từ spec này phải có."""
        groups = self.grouped()
        if self.dim == 2:
            if len(groups) == 2:
                return SpectralClass(kind=SpectralKind.DISTINCT2)
            return SpectralClass(kind=SpectralKind.DOUBLE2, geo=len(self.blocks))
        if len(groups) == 3:
            return SpectralClass(kind=SpectralKind.DISTINCT3)
        if len(groups) == 2:
            double = next(sizes for sizes in groups.values() if sum(sizes) == 2)
            return SpectralClass(kind=SpectralKind.SIMPLE_PLUS_DOUBLE, geo=len(double))
        return SpectralClass(kind=SpectralKind.TRIPLE, geo=len(self.blocks))


class ResultDocument(BaseModel):
    """
    Kết quả của analyze, đã ở dạng JSON-ready; serialize với sort_keys để byte-stable.
    """

    input: Dict[str, Any]
    mode: ScalarMode
    tolerance: Optional[float] = None
    spectrum: List[Dict[str, Any]]
    spectral_class: str = Field(..., alias="class")
    eigenspaces: List[Dict[str, Any]]
    chains: List[Dict[str, Any]]
    trace: List[str]
    verification: Dict[str, Any]
    profile: Optional[Dict[str, Any]] = None

    model_config = ConfigDict(populate_by_name=True, use_enum_values=True)
