from typing import Optional
import logging

from app.constants import ScalarMode
from app.core.columns import are_independent
from app.core.config import settings
from app.core.matrix import SmallMatrix, SmallVector, shift
from app.core.tolerance import TolerancePolicy
from app.models import EigenStructure
from app.schemas import VerificationReport
from app.services.base import BaseService

logger = logging.getLogger(__name__)


class VerificationService(BaseService):
    """Kiểm tra lại một EigenStructure bằng phép nhân trực tiếp."""

    def __init__(self, policy: Optional[TolerancePolicy] = None, rtol: Optional[float] = None):
        super().__init__(policy)
        self.rtol = settings.CH_EIGEN_VERIFY_RTOL if rtol is None else rtol

    def _check_zero(self, a: SmallMatrix, residual: SmallVector, reference: SmallVector):
        """(đạt?, độ lớn residual). Exact đòi hỏi đúng bằng 0."""
        magnitude = residual.max_abs()
        if a.mode == ScalarMode.EXACT:
            return residual.is_zero(), magnitude
        threshold = self.rtol * max(1.0, a.max_abs()) * max(1.0, reference.max_abs())
        return magnitude <= threshold, magnitude

    def verify_structure(
        self, a: SmallMatrix, es: EigenStructure, tol: Optional[TolerancePolicy] = None
    ) -> VerificationReport:
        """
        Kiểm tra A v = λ v, đồng nhất thức chuỗi, độc lập tuyến tính và số chiều.

        Args:
            a: Ma trận gốc.
            es: EigenStructure được tạo từ a.
            tol: TolerancePolicy cho kiểm tra độc lập ở float mode (tùy chọn).

        Returns:
            VerificationReport; lỗi được ghi vào report, không raise.
        """
        policy = tol or self.policy
        report = VerificationReport()
        for record in es.records:
            lam = record.eigenvalue
            b = shift(a, lam)

            for i, v in enumerate(record.basis):
                passed, residual = self._check_zero(a, b @ v, v)
                report.add(f"eigen λ={lam} basis[{i}]", passed, residual)

            for c, chain in enumerate(record.chains):
                for k, vector in enumerate(chain.vectors):
                    image = b @ vector
                    target = image - chain.vectors[k - 1] if k > 0 else image
                    passed, residual = self._check_zero(a, target, vector)
                    report.add(f"chain λ={lam} #{c}[{k}]", passed, residual)

            report.add(
                f"independent λ={lam}",
                bool(record.basis) and are_independent(list(record.basis), policy),
            )
            report.add(
                f"geometric λ={lam}",
                len(record.basis) == record.geometric,
                detail=f"{len(record.basis)} basis vectors, geometric {record.geometric}",
            )
            total = sum(chain.length for chain in record.chains)
            report.add(
                f"algebraic λ={lam}",
                total == record.algebraic,
                detail=f"chain lengths sum to {total}, algebraic {record.algebraic}",
            )

        report.add(
            "dimension",
            sum(r.algebraic for r in es.records) == a.dim,
            detail=f"algebraic multiplicities cover dim {a.dim}",
        )
        if not report.passed:
            logger.error(f"Verification failed: {[c.name for c in report.failures]}")
        return report
