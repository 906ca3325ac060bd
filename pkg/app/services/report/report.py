from typing import Any, Dict, List, Optional
import logging

from app.constants import ScalarMode
from app.core.scalar import Scalar
from app.core.tolerance import TolerancePolicy
from app.models import CharPoly, EigenStructure, Spectrum
from app.schemas import BenchReport, MatrixDocument, ResultDocument, VerificationReport
from app.services.base import BaseService
from app.utils import serialize_scalar

logger = logging.getLogger(__name__)


def _factor(eigenvalue: Scalar, power: int) -> str:
    if eigenvalue.is_zero():
        body = "λ"
    elif eigenvalue < 0:
        body = f"(λ + {-eigenvalue})"
    else:
        body = f"(λ - {eigenvalue})"
    return body if power == 1 else f"{body}^{power}"


class ReportService(BaseService):
    """Dựng ResultDocument và các bản text tương ứng."""

    def build_result(
        self,
        document: MatrixDocument,
        structure: EigenStructure,
        verification: VerificationReport,
        policy: Optional[TolerancePolicy] = None,
    ) -> ResultDocument:
        policy = policy or self.policy
        records = structure.records
        profile = None
        if structure.profile is not None:
            p = structure.profile
            profile = self._prepare_data(
                {
                    "case": p.case_id,
                    "pivot_column": p.pivot_column,
                    "t": p.t,
                    "s": p.s,
                    "condition_value": p.condition_value,
                    "tolerance_sensitive": p.tolerance_sensitive,
                }
            )
        return ResultDocument(
            input=self._prepare_data({"matrix": document.matrix, "name": document.name}),
            mode=document.mode,
            tolerance=policy.zero_threshold if document.mode == ScalarMode.FLOAT else None,
            spectrum=[
                {
                    "eigenvalue": serialize_scalar(r.eigenvalue),
                    "algebraic": r.algebraic,
                    "geometric": r.geometric,
                }
                for r in records
            ],
            spectral_class=structure.spectral_class.label,
            eigenspaces=[
                {
                    "eigenvalue": serialize_scalar(r.eigenvalue),
                    "basis": self.prepare_list_data(list(r.basis)),
                }
                for r in records
            ],
            chains=[
                {
                    "eigenvalue": serialize_scalar(r.eigenvalue),
                    "vectors": self.prepare_list_data(list(chain.vectors)),
                }
                for r in records
                for chain in r.chains
            ],
            trace=list(structure.trace.entries),
            verification=verification.summary(),
            profile=profile,
        )

    def result_payload(self, result: ResultDocument) -> Dict[str, Any]:
        return result.model_dump(by_alias=True, mode="json")

    def render_text(self, result: ResultDocument) -> List[str]:
        """Bản text: trace nguyên văn, sau đó spectrum, eigenspace, chuỗi và kết quả kiểm tra."""
        lines = []
        name = result.input.get("name")
        lines.append(f"matrix {result.input['matrix']}" + (f" ({name})" if name else ""))
        lines.append(f"mode {result.mode}")
        lines.append("trace:")
        lines.extend(f"  {entry}" for entry in result.trace)
        lines.append(f"class {result.spectral_class}")
        for entry, space in zip(result.spectrum, result.eigenspaces):
            lines.append(
                f"λ = {entry['eigenvalue']} (algebraic {entry['algebraic']}, geometric {entry['geometric']})"
            )
            for vector in space["basis"]:
                lines.append(f"  eigenvector ({', '.join(str(x) for x in vector)})")
        for chain in result.chains:
            if len(chain["vectors"]) > 1:
                body = " -> ".join("(" + ", ".join(str(x) for x in v) + ")" for v in chain["vectors"])
                lines.append(f"chain λ = {chain['eigenvalue']}: {body}")
        summary = result.verification
        if summary.get("passed"):
            lines.append("all checks passed")
        else:
            lines.append(f"failed checks: {', '.join(summary.get('failed', []))}")
        return lines

    # ************* charpoly ************* #

    def factored_form(self, spectrum: Spectrum) -> str:
        return "".join(_factor(e.eigenvalue, e.algebraic) for e in spectrum.entries)

    def charpoly_payload(self, poly: CharPoly, spectrum: Optional[Spectrum]) -> Dict[str, Any]:
        payload = {
            "coefficients": self.prepare_list_data(list(poly.coefficients)),
            "polynomial": str(poly),
        }
        if spectrum is not None:
            payload["factored"] = self.factored_form(spectrum)
        return payload

    def render_charpoly(self, poly: CharPoly, spectrum: Optional[Spectrum]) -> List[str]:
        lines = [
            f"p(λ) = {poly}",
            "coefficients " + " ".join(str(c) for c in poly.coefficients),
        ]
        if spectrum is not None:
            lines.append(f"p(λ) = {self.factored_form(spectrum)}")
        return lines

    # ************* verify / bench ************* #

    def render_verification(self, report: VerificationReport) -> List[str]:
        lines = [
            f"{'ok  ' if c.passed else 'FAIL'} {c.name}"
            + (f" residual {c.residual:.3g}" if c.residual else "")
            for c in report.checks
        ]
        lines.append("all checks passed" if report.passed else f"{len(report.failures)} checks failed")
        return lines

    def render_bench(self, report: BenchReport) -> List[str]:
        lines = [f"bench seed {report.seed}, {report.count} matrices per class"]
        for row in report.rows:
            if row.ratio is None:
                lines.append(
                    f"{row.matrix_class}: span-equal {row.span_equal}/{row.count}; timings withheld"
                )
                continue
            lines.append(
                f"{row.matrix_class}: span-equal {row.span_equal}/{row.count}, "
                f"column {row.column_median_us:.1f}us, oracle {row.oracle_median_us:.1f}us, "
                f"ratio {row.ratio:.2f}"
            )
        return lines
