from statistics import median
from time import perf_counter
from typing import List, Optional, Sequence
import logging

from app.constants import MatrixClass
from app.core.exceptions import EigenException
from app.core.matrix import SmallMatrix
from app.core.tolerance import TolerancePolicy
from app.models import EigenStructure
from app.schemas import BenchReport, BenchRow
from app.services.base import BaseService
from app.services.extract import ExtractionService
from app.services.oracle import MatrixGenerator, OracleService
from app.services.spectrum import SpectrumService

logger = logging.getLogger(__name__)


class BenchmarkService(BaseService):
    """
    So sánh phương pháp cột với bộ giải null space cổ điển (chỉ exact mode).

    Với mỗi class: kiểm tra span-equality trên toàn bộ corpus trước, chỉ khi
    đạt 100% mới đo thời gian.
    """

    def __init__(self, policy: Optional[TolerancePolicy] = None):
        super().__init__(policy)
        self.spectrum_service = SpectrumService(self.policy)
        self.extraction_service = ExtractionService(self.policy)
        self.oracle_service = OracleService(self.policy)
        self.generator = MatrixGenerator()

    def structures_agree(self, column: EigenStructure, reference: EigenStructure) -> bool:
        """Cùng eigenvalue, cùng bội hình học, cùng span cho mọi eigenspace."""
        if column.eigenvalues != reference.eigenvalues:
            return False
        for ours, theirs in zip(column.records, reference.records):
            if ours.geometric != theirs.geometric:
                return False
            if not self.oracle_service.spans_equal(list(ours.basis), list(theirs.basis)):
                return False
        return True

    def _reference(self, a: SmallMatrix) -> EigenStructure:
        return self.oracle_service.eigensolve_reference(a, self.spectrum_service.spectrum_of(a))

    def _gate(self, matrices: Sequence[SmallMatrix]) -> int:
        agreed = 0
        for a in matrices:
            try:
                if self.structures_agree(self.extraction_service.analyze(a), self._reference(a)):
                    agreed += 1
                else:
                    logger.error(f"Span mismatch for {a}")
            except EigenException as e:
                logger.error(f"Bench gate failed on {a}: {e.detail}")
        return agreed

    @staticmethod
    def _median_us(run, matrices: Sequence[SmallMatrix]) -> float:
        samples = []
        for a in matrices:
            start = perf_counter()
            run(a)
            samples.append((perf_counter() - start) * 1e6)
        return median(samples)

    def run_class(self, kind: MatrixClass, count: int, seed: int) -> BenchRow:
        matrices = [a for _, a in self.generator.corpus(kind, count, seed)]
        agreed = self._gate(matrices)
        row = BenchRow(matrix_class=kind.value, count=count, span_equal=agreed)
        if not row.gate_passed:
            logger.error(f"{kind.value}: {agreed}/{count} span-equal; timings withheld")
            return row

        column_us = self._median_us(self.extraction_service.analyze, matrices)
        oracle_us = self._median_us(self._reference, matrices)
        logger.info(f"{kind.value}: column {column_us:.1f}us, oracle {oracle_us:.1f}us")
        return row.model_copy(
            update={
                "column_median_us": round(column_us, 3),
                "oracle_median_us": round(oracle_us, 3),
                "ratio": round(oracle_us / column_us, 4) if column_us > 0 else None,
            }
        )

    def run(self, classes: List[MatrixClass], count: int, seed: int = 0) -> BenchReport:
        """
        Args:
            classes: Các MatrixClass cần đo (rỗng = tất cả).
            count: Số ma trận cho mỗi class.
            seed: Seed gốc; class thứ i dùng seed + i.
        """
        classes = classes or list(MatrixClass)
        rows = [self.run_class(kind, count, seed + i) for i, kind in enumerate(classes)]
        return BenchReport(seed=seed, count=count, rows=rows)
