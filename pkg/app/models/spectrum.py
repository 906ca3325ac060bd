from typing import List, Optional, Tuple

from pydantic import model_validator

from app.constants import ScalarMode, SpectralKind
from app.core.exceptions import InconsistentSpectrumException
from app.core.scalar import Scalar
from app.utils.models import DomainModel


class CharPoly(DomainModel):
    """Đa thức đặc trưng monic, hệ số theo thứ tự hằng số trước: (c0, c1, ..., 1)."""

    coefficients: Tuple[Scalar, ...]

    @model_validator(mode="after")
    def check_monic(self):
        if len(self.coefficients) not in (3, 4):
            raise ValueError("Characteristic polynomial must have degree 2 or 3")
        if self.coefficients[-1] != 1:
            raise ValueError("Characteristic polynomial must be monic")
        return self

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def mode(self) -> ScalarMode:
        return self.coefficients[0].mode

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                var = "λ" if power == 1 else f"λ^{power}"
                body = var if magnitude == 1 else f"{magnitude}{var}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class SpectrumEntry(DomainModel):
    eigenvalue: Scalar
    algebraic: int


class Spectrum(DomainModel):
    """Các eigenvalue phân biệt, sắp xếp tăng dần, kèm bội đại số."""

    dim: int
    entries: Tuple[SpectrumEntry, ...]

    @model_validator(mode="after")
    def check_multiplicities(self):
        if any(e.algebraic < 1 for e in self.entries):
            raise InconsistentSpectrumException("Multiplicities must be positive")
        total = sum(e.algebraic for e in self.entries)
        if total != self.dim:
            raise InconsistentSpectrumException(
                f"Multiplicities sum to {total}, expected {self.dim}"
            )
        values = [e.eigenvalue for e in self.entries]
        if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
            raise InconsistentSpectrumException("Eigenvalues must be distinct and ascending")
        return self

    @classmethod
    def from_pairs(cls, dim: int, pairs: List[Tuple[Scalar, int]]) -> "Spectrum":
        ordered = sorted(pairs, key=lambda p: p[0])
        return cls(
            dim=dim,
            entries=tuple(SpectrumEntry(eigenvalue=v, algebraic=m) for v, m in ordered),
        )

    @property
    def eigenvalues(self) -> List[Scalar]:
        return [e.eigenvalue for e in self.entries]

    @property
    def mode(self) -> ScalarMode:
        return self.entries[0].eigenvalue.mode

    def __str__(self) -> str:
        return "{" + ", ".join(f"({e.eigenvalue},{e.algebraic})" for e in self.entries) + "}"


class SpectralClass(DomainModel):
    """Nhãn dispatch: Distinct2 | Double2(geo) | Distinct3 | SimplePlusDouble(geo) | Triple(geo)."""

    kind: SpectralKind
    geo: Optional[int] = None
    evidence: Tuple[str, ...] = ()

    @property
    def label(self) -> str:
        if self.geo is None:
            return self.kind.value
        return f"{self.kind.value}(geo {self.geo})"

    def same_label(self, other: "SpectralClass") -> bool:
        return self.kind == other.kind and self.geo == other.geo

    def __str__(self) -> str:
        return self.label
