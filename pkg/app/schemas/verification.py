from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ResidualCheck(BaseModel):
    """Một kiểm tra có tên: đạt / không đạt kèm độ lớn residual."""

    name: str
    passed: bool
    residual: float = Field(0.0, ge=0)
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    checks: List[ResidualCheck] = []

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[ResidualCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def add(self, name: str, passed: bool, residual: float = 0.0, detail: Optional[str] = None) -> None:
        self.checks.append(
            ResidualCheck(name=name, passed=passed, residual=residual, detail=detail)
        )

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def summary(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "total": len(self.checks),
            "failed": [c.name for c in self.failures],
            "max_residual": self.max_residual,
        }
