from typing import List, Optional, Tuple

from pydantic import Field

from app.core.matrix import SmallVector
from app.core.scalar import Scalar
from app.models.profile import ColumnCaseProfile
from app.models.spectrum import SpectralClass
from app.utils.models import DomainModel


class JordanChain(DomainModel):
    """
    Chuỗi Jordan [v, w, ...]: (A - λI) v = 0, (A - λI) vectors[k] = vectors[k-1].
    """

    eigenvalue: Scalar
    vectors: Tuple[SmallVector, ...]

    @property
    def length(self) -> int:
        return len(self.vectors)

    @property
    def eigenvector(self) -> SmallVector:
        return self.vectors[0]


class EigenRecord(DomainModel):
    eigenvalue: Scalar
    algebraic: int
    geometric: int
    basis: Tuple[SmallVector, ...]
    chains: Tuple[JordanChain, ...]


class ExtractionTrace(DomainModel):
    """Danh sách quyết định theo thứ tự (B_i nào được tạo, tích nào được test, cột nào được chọn)."""

    entries: Tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def contains(self, fragment: str) -> bool:
        return any(fragment in line for line in self.entries)


class EigenStructure(DomainModel):
    matrix_dim: int
    spectral_class: SpectralClass = Field(alias="class")
    records: Tuple[EigenRecord, ...]
    trace: ExtractionTrace
    profile: Optional[ColumnCaseProfile] = None
    source: str = "column"

    def record_for(self, eigenvalue: Scalar) -> EigenRecord:
        for record in self.records:
            if record.eigenvalue == eigenvalue:
                return record
        raise KeyError(f"No eigenvalue {eigenvalue} in structure")

    @property
    def eigenvalues(self) -> List[Scalar]:
        return [r.eigenvalue for r in self.records]
