from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging

from app.constants import ScalarMode, SpectralKind
from app.core.columns import are_independent, best_column, best_column_index, is_zero_vector
from app.core.exceptions import (
    ClassMismatchException,
    ComputationException,
    DimensionMismatchException,
    EigenException,
)
from app.core.matrix import SmallMatrix, SmallVector, mat_mul, normalize_eigenvector, shift
from app.core.scalar import Scalar
from app.core.tolerance import TolerancePolicy
from app.models import (
    ColumnCaseProfile,
    EigenRecord,
    EigenStructure,
    ExtractionTrace,
    JordanChain,
    SpectralClass,
    Spectrum,
)
from app.services.base import BaseService, TraceRecorder
from app.services.spectrum import SpectrumService
from .profile import column_case_profile

logger = logging.getLogger(__name__)


def _record(
    eigenvalue: Scalar,
    algebraic: int,
    basis: Sequence[SmallVector],
    chains: Sequence[Sequence[SmallVector]],
) -> EigenRecord:
    return EigenRecord(
        eigenvalue=eigenvalue,
        algebraic=algebraic,
        geometric=len(basis),
        basis=tuple(basis),
        chains=tuple(JordanChain(eigenvalue=eigenvalue, vectors=tuple(c)) for c in chains),
    )


class ExtractionService(BaseService):
    """
    Trích xuất eigenspace và chuỗi Jordan chỉ bằng tích các ma trận dịch chuyển
    và việc chọn cột; không khử Gauss, không giải hệ phương trình.
    """

    def __init__(self, policy: Optional[TolerancePolicy] = None):
        super().__init__(policy)
        self.spectrum_service = SpectrumService(self.policy)

    # ************* Helpers ************* #

    def _require(
        self, a: SmallMatrix, spec: Spectrum, kind: SpectralKind, trace: TraceRecorder
    ) -> SpectralClass:
        """Phân loại lại A và đối chiếu với routine được gọi."""
        spectral_class = self.spectrum_service.classify(a, spec)
        if spectral_class.kind != kind:
            raise ClassMismatchException(
                f"Matrix is {spectral_class.label}, routine expects {kind.value}"
            )
        trace.add(f"class {spectral_class.label}")
        trace.extend(spectral_class.evidence)
        return spectral_class

    def _form_shift(self, a: SmallMatrix, lam: Scalar, name: str, trace: TraceRecorder) -> SmallMatrix:
        b = shift(a, lam)
        trace.add(f"formed {name} = A - ({lam})I = {b}")
        return b

    def _pick_column(
        self, m: SmallMatrix, name: str, lam: Scalar, trace: TraceRecorder
    ) -> SmallVector:
        """Chọn cột khác 0 của m làm eigenvector cho lam (đã chuẩn hóa)."""
        picked = best_column_index(m, self.policy)
        if picked is None:
            raise ClassMismatchException(f"{name} has no nonzero column")
        index, column = picked
        vector = normalize_eigenvector(column)
        trace.add(f"picked column {index} of {name} = {column} -> eigenvector {vector} for λ={lam}")
        return vector

    def _structure(
        self,
        a: SmallMatrix,
        spectral_class: SpectralClass,
        records: List[EigenRecord],
        trace: TraceRecorder,
        profile: Optional[ColumnCaseProfile] = None,
    ) -> EigenStructure:
        return EigenStructure(
            matrix_dim=a.dim,
            spectral_class=spectral_class,
            records=tuple(sorted(records, key=lambda r: r.eigenvalue)),
            trace=ExtractionTrace(entries=tuple(trace.entries)),
            profile=profile,
        )

    def _standard_basis(self, a: SmallMatrix) -> List[SmallVector]:
        return [SmallVector.unit(a.dim, i, a.mode) for i in range(a.dim)]

    # ************* 2x2 ************* #

    def extract_2x2_distinct(self, a: SmallMatrix, spec: Spectrum) -> EigenStructure:
        """
        Hai eigenvalue phân biệt: cột khác 0 của B1 là eigenvector của λ2 và ngược lại.

        Raises:
            ClassMismatchException: Nếu A không thuộc Distinct2.
        """
        trace = TraceRecorder(__name__)
        spectral_class = self._require(a, spec, SpectralKind.DISTINCT2, trace)
        lam1, lam2 = spec.eigenvalues
        b1 = self._form_shift(a, lam1, "B1", trace)
        b2 = self._form_shift(a, lam2, "B2", trace)
        v2 = self._pick_column(b1, "B1", lam2, trace)
        v1 = self._pick_column(b2, "B2", lam1, trace)
        records = [_record(lam1, 1, [v1], [[v1]]), _record(lam2, 1, [v2], [[v2]])]
        return self._structure(a, spectral_class, records, trace)

    def extract_2x2_double(self, a: SmallMatrix, spec: Spectrum) -> EigenStructure:
        """
        Eigenvalue kép: B = 0 thì mọi vector là eigenvector; ngược lại chọn w với
        B w != 0 và v = B w cho chuỗi [v, w].
        """
        trace = TraceRecorder(__name__)
        spectral_class = self._require(a, spec, SpectralKind.DOUBLE2, trace)
        lam = spec.eigenvalues[0]
        b = self._form_shift(a, lam, "B", trace)

        if spectral_class.geo == 2:
            basis = self._standard_basis(a)
            trace.add("B is zero; eigenspace is the whole plane, using e1, e2")
            return self._structure(
                a, spectral_class, [_record(lam, 2, basis, [[e] for e in basis])], trace
            )

        v, w = self._seed_chain(b, [SmallVector.unit(2, i, a.mode) for i in range(2)], trace)
        record = _record(lam, 2, [normalize_eigenvector(v)], [[v, w]])
        return self._structure(a, spectral_class, [record], trace)

    def _seed_chain(
        self, b: SmallMatrix, seeds: Sequence[SmallVector], trace: TraceRecorder, label: str = "e"
    ) -> Tuple[SmallVector, SmallVector]:
        """Thử lần lượt các seed w tới khi B w != 0; trả về (v = B w, w)."""
        for i, w in enumerate(seeds):
            v = b @ w
            if not is_zero_vector(v, self.policy):
                trace.add(f"tried w = {label}{i + 1} = {w}: B w = {v} is nonzero; chain [v, w]")
                return v, w
            trace.add(f"tried w = {label}{i + 1} = {w}: B w = 0")
        raise ClassMismatchException("No seed vector leaves the kernel of B")

    # ************* 3x3 ************* #

    def extract_3x3_distinct(self, a: SmallMatrix, spec: Spectrum) -> EigenStructure:
        """Ba eigenvalue phân biệt: cột khác 0 của B_i B_j là eigenvector của λ_k."""
        trace = TraceRecorder(__name__)
        spectral_class = self._require(a, spec, SpectralKind.DISTINCT3, trace)
        lams = spec.eigenvalues
        shifted = [self._form_shift(a, lam, f"B{i + 1}", trace) for i, lam in enumerate(lams)]
        records = []
        for k, lam in enumerate(lams):
            i, j = [n for n in range(3) if n != k]
            product = mat_mul(shifted[i], shifted[j])
            name = f"B{i + 1}B{j + 1}"
            trace.add(f"formed {name} = {product}")
            v = self._pick_column(product, name, lam, trace)
            records.append(_record(lam, 1, [v], [[v]]))
        return self._structure(a, spectral_class, records, trace)

    def extract_3x3_simple_double(self, a: SmallMatrix, spec: Spectrum) -> EigenStructure:
        """
        λ1 đơn, λ2 kép: cột của B2^2 cho λ1; với λ2 dùng cột của B1 (geo 2)
        hoặc chuỗi [B2 w, w] với w là cột của B1 (geo 1).
        """
        trace = TraceRecorder(__name__)
        spectral_class = self._require(a, spec, SpectralKind.SIMPLE_PLUS_DOUBLE, trace)
        lam1, lam2 = self.spectrum_service.split_simple_double(spec)
        b1 = self._form_shift(a, lam1, "B1", trace)
        b2 = self._form_shift(a, lam2, "B2", trace)
        b2_squared = mat_mul(b2, b2)
        trace.add(f"formed B2^2 = {b2_squared}")
        v1 = self._pick_column(b2_squared, "B2^2", lam1, trace)
        simple = _record(lam1, 1, [v1], [[v1]])

        if spectral_class.geo == 2:
            basis = self._independent_pair(b1, trace)
            double = _record(lam2, 2, basis, [[v] for v in basis])
            return self._structure(a, spectral_class, [simple, double], trace)

        seeds = b1.columns()
        w, v = None, None
        for j, column in enumerate(seeds):
            if is_zero_vector(column, self.policy):
                continue
            image = b2 @ column
            if not is_zero_vector(image, self.policy):
                w, v = column, image
                trace.add(f"picked column {j} of B1 as w = {w}; v = B2 w = {v}")
                break
            trace.add(f"column {j} of B1 is an eigenvector of λ={lam2}; skipped")
        if w is None:
            raise ClassMismatchException("Every column of B1 lies in the kernel of B2")

        self._cross_check_product(b2, b1, v, trace)
        double = _record(lam2, 2, [normalize_eigenvector(v)], [[v, w]])
        return self._structure(a, spectral_class, [simple, double], trace)

    def _independent_pair(self, b1: SmallMatrix, trace: TraceRecorder) -> List[SmallVector]:
        """Cặp cột đầu tiên của B1 có ít nhất một định thức con 2x2 khác 0."""
        columns = b1.columns()
        for i in range(3):
            for j in range(i + 1, 3):
                if are_independent([columns[i], columns[j]], self.policy):
                    trace.add(f"columns {i} and {j} of B1 are independent (nonzero 2x2 minor)")
                    return [normalize_eigenvector(columns[i]), normalize_eigenvector(columns[j])]
        raise ClassMismatchException("B1 has no pair of independent columns")

    def _cross_check_product(
        self, b2: SmallMatrix, b1: SmallMatrix, v: SmallVector, trace: TraceRecorder
    ) -> None:
        """Mọi cột khác 0 của B2 B1 song song với v."""
        product = mat_mul(b2, b1)
        column = best_column(product, self.policy)
        if column is None:
            return
        parallel = not are_independent([column, v], self.policy)
        trace.add(f"cross-check: column {column} of B2B1 is parallel to v: {parallel}")

    def extract_3x3_triple(self, a: SmallMatrix, spec: Spectrum) -> EigenStructure:
        """
        Eigenvalue bội ba. geo 3: e1, e2, e3; geo 1: cột của B^2 và chuỗi
        [B^2 v1, B v1, v1]; geo 2: mẫu cột của B (column_case_profile).

        Raises:
            ClassMismatchException: Nếu A không thuộc Triple.
            NotNilpotentException: Nếu điều kiện của case không thỏa.
        """
        trace = TraceRecorder(__name__)
        spectral_class = self._require(a, spec, SpectralKind.TRIPLE, trace)
        lam = spec.eigenvalues[0]
        b = self._form_shift(a, lam, "B", trace)

        if spectral_class.geo == 3:
            basis = self._standard_basis(a)
            trace.add("B is zero; eigenspace is the whole space, using e1, e2, e3")
            return self._structure(
                a, spectral_class, [_record(lam, 3, basis, [[e] for e in basis])], trace
            )

        if spectral_class.geo == 1:
            b_squared = mat_mul(b, b)
            trace.add(f"formed B^2 = {b_squared}")
            v = self._pick_column(b_squared, "B^2", lam, trace)
            for i in range(3):
                seed = SmallVector.unit(3, i, a.mode)
                middle = b @ seed
                head = b @ middle
                if not is_zero_vector(head, self.policy):
                    trace.add(f"seed v1 = e{i + 1}: chain [B^2 v1, B v1, v1] = [{head}, {middle}, {seed}]")
                    record = _record(lam, 3, [v], [[head, middle, seed]])
                    return self._structure(a, spectral_class, [record], trace)
                trace.add(f"seed e{i + 1} lies in the kernel of B^2")
            raise ClassMismatchException("No standard basis vector escapes the kernel of B^2")

        profile = column_case_profile(b, self.policy)
        trace.add(
            f"column case {profile.case_id}: pivot column {profile.pivot_column}"
            + (f", t = {profile.t}" if profile.t is not None else "")
            + (f", s = {profile.s}" if profile.s is not None else "")
            + f", condition value {profile.condition_value}"
        )
        if profile.tolerance_sensitive:
            trace.add("profile is tolerance-sensitive (float zero-pattern dispatch)")
        basis = [normalize_eigenvector(v) for v in profile.eigenbasis]
        other = next(u for u in basis if are_independent([u, profile.eigenvector], self.policy))
        trace.add(
            f"chain [{profile.eigenvector}, {profile.generalized}] and eigenvector {other}"
        )
        record = _record(lam, 3, basis, [[profile.eigenvector, profile.generalized], [other]])
        return self._structure(a, spectral_class, [record], trace, profile=profile)

    # ************* Pipeline ************* #

    def dispatch_table(self) -> Dict[SpectralKind, Callable[[SmallMatrix, Spectrum], EigenStructure]]:
        return {
            SpectralKind.DISTINCT2: self.extract_2x2_distinct,
            SpectralKind.DOUBLE2: self.extract_2x2_double,
            SpectralKind.DISTINCT3: self.extract_3x3_distinct,
            SpectralKind.SIMPLE_PLUS_DOUBLE: self.extract_3x3_simple_double,
            SpectralKind.TRIPLE: self.extract_3x3_triple,
        }

    def analyze(self, a: SmallMatrix, tol: Optional[TolerancePolicy] = None) -> EigenStructure:
        """
        Pipeline đầy đủ: char_poly -> eigenvalues -> classify -> extract_*.

        Args:
            a: Ma trận 2x2 hoặc 3x3.
            tol: TolerancePolicy thay cho policy của service (tùy chọn).

        Returns:
            EigenStructure với trace ghi lại mọi quyết định.

        Raises:
            IrrationalSpectrumException, ComplexSpectrumException, NotNilpotentException
            ComputationException: Lỗi không thuộc miền (được log và bọc lại).
        """
        if tol is not None and tol != self.policy:
            return ExtractionService(tol).analyze(a)
        if a.dim not in (2, 3):
            raise DimensionMismatchException(f"Unsupported dimension {a.dim}")
        try:
            return self._run_pipeline(a)
        except EigenException:
            raise
        except Exception as e:
            logger.error(f"Error analyzing {a}: {e!r}")
            raise ComputationException(f"Analysis failed: {type(e).__name__}: {e}")

    def _run_pipeline(self, a: SmallMatrix) -> EigenStructure:
        prefix = TraceRecorder(__name__)
        poly = self.spectrum_service.char_poly(a)
        prefix.add(f"characteristic polynomial {poly}")
        spec = self.spectrum_service.eigenvalues(poly)
        prefix.add(f"spectrum {spec}")
        if a.mode == ScalarMode.FLOAT:
            prefix.add(f"float mode, zero threshold {self.policy.effective_threshold(a):.3g}")

        spectral_class = self.spectrum_service.classify(a, spec)
        structure = self.dispatch_table()[spectral_class.kind](a, spec)
        logger.debug(f"Analyzed {a}: {structure.spectral_class.label}")
        return structure.model_copy(
            update={"trace": ExtractionTrace(entries=tuple(prefix.entries) + structure.trace.entries)}
        )
