from typing import List, Optional, Tuple
import logging

from app.constants import ScalarMode, SpectralKind
from app.core.columns import is_zero_matrix
from app.core.exceptions import (
    InconsistentSpectrumException,
    ModeMismatchException,
)
from app.core.matrix import SmallMatrix, mat_mul, shift
from app.core.scalar import Scalar
from app.models import CharPoly, SpectralClass, Spectrum
from app.services.base import BaseService
from .roots import (
    cluster_roots,
    exact_roots,
    solve_cubic_float,
    solve_quadratic_float,
)

logger = logging.getLogger(__name__)


class SpectrumService(BaseService):
    """Service cho đa thức đặc trưng, eigenvalue và phân loại spectral class."""

    # ************* Characteristic polynomial ************* #

    def char_poly(self, a: SmallMatrix) -> CharPoly:
        """
        Đa thức đặc trưng monic det(λI - A).

        2x2: λ^2 - (trace) λ + det.
        3x3: λ^3 - (trace) λ^2 + (tổng định thức con chính) λ - det.
        """
        one = Scalar.one(a.mode)
        if a.dim == 2:
            coefficients = (a.det(), -a.trace(), one)
        else:
            coefficients = (-a.det(), a.principal_minor_sum(), -a.trace(), one)
        return CharPoly(coefficients=coefficients)

    def char_poly_at(self, poly: CharPoly, a: SmallMatrix) -> SmallMatrix:
        """Tính p(A) bằng Horner với tích ma trận (Cayley-Hamilton: kết quả là 0)."""
        identity = SmallMatrix.identity(a.dim, a.mode)
        result = identity.scale(poly.coefficients[-1])
        for c in reversed(poly.coefficients[:-1]):
            result = mat_mul(result, a) + identity.scale(c)
        return result

    # ************* Eigenvalues ************* #

    def eigenvalues(self, poly: CharPoly) -> Spectrum:
        if poly.mode == ScalarMode.EXACT:
            return self.eigenvalues_exact(poly)
        return self.eigenvalues_float(poly)

    def eigenvalues_exact(self, poly: CharPoly) -> Spectrum:
        """
        Tìm nghiệm hữu tỉ bằng rational-root method, bội bằng deflation lặp.

        Raises:
            ModeMismatchException: Nếu đa thức ở float mode.
            IrrationalSpectrumException: Nếu còn nghiệm thực vô tỉ.
            ComplexSpectrumException: Nếu có nghiệm phức.
        """
        if poly.mode != ScalarMode.EXACT:
            raise ModeMismatchException("eigenvalues_exact requires an exact polynomial")
        roots = exact_roots([c.value for c in poly.coefficients])
        pairs: List[Tuple[Scalar, int]] = []
        for root in roots:
            if pairs and pairs[-1][0].value == root:
                pairs[-1] = (pairs[-1][0], pairs[-1][1] + 1)
            else:
                pairs.append((Scalar(root), 1))
        logger.debug(f"Exact roots of {poly}: {roots}")
        return Spectrum.from_pairs(poly.degree, pairs)

    def eigenvalues_float(self, poly: CharPoly) -> Spectrum:
        """
        Nghiệm closed-form (bậc 2: công thức ổn định; bậc 3: lượng giác / Cardano),
        sau đó gộp cụm nghiệm trong cluster_eps thành một eigenvalue (giá trị trung bình).

        Raises:
            ModeMismatchException: Nếu đa thức ở exact mode.
            ComplexSpectrumException: Nếu discriminant âm vượt ngưỡng.
        """
        if poly.mode != ScalarMode.FLOAT:
            raise ModeMismatchException("eigenvalues_float requires a float polynomial")
        c = [x.value for x in poly.coefficients]
        threshold = self.policy.zero_threshold
        if poly.degree == 2:
            roots = solve_quadratic_float(c[1], c[0], threshold)
        else:
            roots = solve_cubic_float(c[2], c[1], c[0], threshold)
        clusters = cluster_roots(roots, self.policy.cluster_eps)
        logger.debug(f"Float roots of {poly}: {roots} -> {len(clusters)} clusters")
        pairs = [(Scalar(sum(group) / len(group)), len(group)) for group in clusters]
        return Spectrum.from_pairs(poly.degree, pairs)

    # ************* Classification ************* #

    def split_simple_double(self, spec: Spectrum) -> Tuple[Scalar, Scalar]:
        """(λ1 đơn, λ2 kép) cho spectrum 3x3 có hai eigenvalue."""
        simple = next(e.eigenvalue for e in spec.entries if e.algebraic == 1)
        double = next(e.eigenvalue for e in spec.entries if e.algebraic == 2)
        return simple, double

    def classify(self, a: SmallMatrix, spec: Spectrum) -> SpectralClass:
        """
        Phân loại chỉ bằng tích và zero-test của các ma trận dịch chuyển (không tính rank).

        Raises:
            InconsistentSpectrumException: Nếu bội không khớp với chiều ma trận.
        """
        if spec.dim != a.dim:
            raise InconsistentSpectrumException(
                f"Spectrum multiplicities sum to {spec.dim}, matrix is {a.dim}x{a.dim}"
            )
        if spec.mode != a.mode:
            raise ModeMismatchException("Spectrum and matrix modes differ")
        count = len(spec.entries)

        if a.dim == 2:
            if count == 2:
                return SpectralClass(kind=SpectralKind.DISTINCT2, evidence=("two distinct eigenvalues",))
            lam = spec.eigenvalues[0]
            b = shift(a, lam)
            b_zero = is_zero_matrix(b, self.policy)
            return SpectralClass(
                kind=SpectralKind.DOUBLE2,
                geo=2 if b_zero else 1,
                evidence=(f"B = A - ({lam})I is {'zero' if b_zero else 'nonzero'}",),
            )

        if count == 3:
            return SpectralClass(kind=SpectralKind.DISTINCT3, evidence=("three distinct eigenvalues",))

        if count == 2:
            lam1, lam2 = self.split_simple_double(spec)
            b1 = shift(a, lam1)
            b2 = shift(a, lam2)
            product_zero = is_zero_matrix(mat_mul(b2, b1), self.policy)
            return SpectralClass(
                kind=SpectralKind.SIMPLE_PLUS_DOUBLE,
                geo=2 if product_zero else 1,
                evidence=(f"B2·B1 is {'zero' if product_zero else 'nonzero'}",),
            )

        lam = spec.eigenvalues[0]
        b = shift(a, lam)
        if is_zero_matrix(b, self.policy):
            return SpectralClass(kind=SpectralKind.TRIPLE, geo=3, evidence=("B is zero",))
        if not is_zero_matrix(mat_mul(b, b), self.policy):
            return SpectralClass(kind=SpectralKind.TRIPLE, geo=1, evidence=("B is nonzero", "B^2 is nonzero"))
        return SpectralClass(kind=SpectralKind.TRIPLE, geo=2, evidence=("B is nonzero", "B^2 is zero"))

    # ************* Minimal polynomial ************* #

    def minimal_poly(self, a: SmallMatrix, spec: Spectrum) -> List[Tuple[Scalar, int]]:
        """
        Đa thức tối tiểu dưới dạng [(λ, số mũ)], tìm bằng zero-test trên các ước
        của đa thức đặc trưng, bậc tổng nhỏ nhất trước.
        """
        shifted = [(e.eigenvalue, shift(a, e.eigenvalue), e.algebraic) for e in spec.entries]
        candidates = self._exponent_vectors([m for _, _, m in shifted])
        for exponents in candidates:
            product = SmallMatrix.identity(a.dim, a.mode)
            for (_, b, _), k in zip(shifted, exponents):
                for _ in range(k):
                    product = mat_mul(product, b)
            if is_zero_matrix(product, self.policy):
                return [(lam, k) for (lam, _, _), k in zip(shifted, exponents)]
        # Cayley-Hamilton đảm bảo không tới được đây
        return [(lam, m) for lam, _, m in shifted]

    @staticmethod
    def _exponent_vectors(multiplicities: List[int]) -> List[Tuple[int, ...]]:
        vectors: List[Tuple[int, ...]] = [()]
        for m in multiplicities:
            vectors = [v + (k,) for v in vectors for k in range(1, m + 1)]
        return sorted(vectors, key=lambda v: (sum(v), v))

    def spectrum_of(self, a: SmallMatrix, poly: Optional[CharPoly] = None) -> Spectrum:
        return self.eigenvalues(poly or self.char_poly(a))
