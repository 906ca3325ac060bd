from typing import List, Optional

from pydantic import BaseModel, Field


class BenchRow(BaseModel):
    matrix_class: str
    count: int
    span_equal: int
    column_median_us: Optional[float] = None
    oracle_median_us: Optional[float] = None
    ratio: Optional[float] = None

    @property
    def gate_passed(self) -> bool:
        return self.span_equal == self.count


class BenchReport(BaseModel):
    seed: int
    count: int = Field(..., ge=1)
    rows: List[BenchRow] = []

    @property
    def gate_passed(self) -> bool:
        return all(r.gate_passed for r in self.rows)
