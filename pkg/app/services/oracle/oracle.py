from fractions import Fraction
from typing import List, Sequence, Tuple
import logging

from app.constants import ScalarMode, SpectralKind
from app.core.exceptions import (
    DimensionMismatchException,
    InconsistentSpectrumException,
    ModeMismatchException,
)
from app.core.matrix import SmallMatrix, SmallVector, mat_mul, normalize_eigenvector, shift
from app.models import (
    EigenRecord,
    EigenStructure,
    ExtractionTrace,
    JordanChain,
    NullSpaceBasis,
    SpectralClass,
    Spectrum,
)
from app.services.base import BaseService, TraceRecorder

logger = logging.getLogger(__name__)


def _rref(rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Khử Gauss-Jordan với pivot hữu tỉ chính xác; trả về (ma trận rút gọn, cột pivot)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def _require_exact(*subjects) -> None:
    for subject in subjects:
        if subject.mode != ScalarMode.EXACT:
            raise ModeMismatchException("The oracle works in exact mode only")


class OracleService(BaseService):
    """Bộ giải tham chiếu cổ điển: null space bằng khử Gauss chính xác."""

    def null_space(self, m: SmallMatrix) -> NullSpaceBasis:
        """
        Cơ sở của ker(M): một vector cho mỗi cột tự do (tham số hóa back-substitution).

        Raises:
            ModeMismatchException: Nếu M ở float mode.
        """
        _require_exact(m)
        reduced, pivots = _rref([[e.value for e in row] for row in m.rows])
        n = m.dim
        vectors = []
        for free in (c for c in range(n) if c not in pivots):
            values = [Fraction(0)] * n
            values[free] = Fraction(1)
            for i, c in enumerate(pivots):
                values[c] = -reduced[i][free]
            vectors.append(SmallVector(values))
        return NullSpaceBasis(vectors=tuple(vectors))

    def rank(self, vectors: Sequence[SmallVector]) -> int:
        if not vectors:
            return 0
        _require_exact(*vectors)
        _, pivots = _rref([[e.value for e in v] for v in vectors])
        return len(pivots)

    def spans_equal(self, u: Sequence[SmallVector], v: Sequence[SmallVector]) -> bool:
        """
        rank(U) = rank(V) = rank(U ∪ V).

        Raises:
            DimensionMismatchException: Nếu các vector khác chiều.
        """
        dims = {x.dim for x in list(u) + list(v)}
        if len(dims) > 1:
            raise DimensionMismatchException(f"Vectors of different dimensions: {sorted(dims)}")
        rank_u = self.rank(u)
        return rank_u == self.rank(v) == self.rank(list(u) + list(v))

    # ************* Reference solver ************* #

    def _chains(
        self, b: SmallMatrix, eigenvalue, algebraic: int, eigenspace: List[SmallVector]
    ) -> List[List[SmallVector]]:
        geometric = len(eigenspace)
        if algebraic == geometric:
            return [[v] for v in eigenspace]

        if algebraic == 3 and geometric == 1:
            b_squared = mat_mul(b, b)
            for i in range(b.dim):
                seed = SmallVector.unit(b.dim, i, b.mode)
                if not (b_squared @ seed).is_zero():
                    return [[b_squared @ seed, b @ seed, seed]]
            raise InconsistentSpectrumException(f"No length-3 chain for λ={eigenvalue}")

        generalized = self.null_space(mat_mul(b, b)).vectors
        w = next((g for g in generalized if not (b @ g).is_zero()), None)
        if w is None:
            raise InconsistentSpectrumException(f"No generalized eigenvector for λ={eigenvalue}")
        v = b @ w
        chains = [[v, w]]
        for u in eigenspace:
            if len(chains) == geometric:
                break
            if self.rank([c[0] for c in chains] + [u]) == len(chains) + 1:
                chains.append([u])
        return chains

    def _spectral_class(self, dim: int, geos: List[Tuple[int, int]]) -> SpectralClass:
        """Nhãn class suy từ (bội đại số, bội hình học) của từng eigenvalue."""
        evidence = tuple(f"null space dimension {g} for algebraic {m}" for m, g in geos)
        if dim == 2:
            if len(geos) == 2:
                return SpectralClass(kind=SpectralKind.DISTINCT2, evidence=evidence)
            return SpectralClass(kind=SpectralKind.DOUBLE2, geo=geos[0][1], evidence=evidence)
        if len(geos) == 3:
            return SpectralClass(kind=SpectralKind.DISTINCT3, evidence=evidence)
        if len(geos) == 2:
            geo = next(g for m, g in geos if m == 2)
            return SpectralClass(kind=SpectralKind.SIMPLE_PLUS_DOUBLE, geo=geo, evidence=evidence)
        return SpectralClass(kind=SpectralKind.TRIPLE, geo=geos[0][1], evidence=evidence)

    def eigensolve_reference(self, a: SmallMatrix, spec: Spectrum) -> EigenStructure:
        """
        Eigenspace = null_space(A - λI); lớp suy rộng = null_space((A - λI)^2) khi thiếu chiều.

        Raises:
            InconsistentSpectrumException: Nếu spectrum không khớp với A.
        """
        _require_exact(a)
        if spec.dim != a.dim:
            raise InconsistentSpectrumException(
                f"Spectrum multiplicities sum to {spec.dim}, matrix is {a.dim}x{a.dim}"
            )
        trace = TraceRecorder(__name__)
        trace.add("oracle-derived structure (exact elimination)")
        records, geos = [], []
        for entry in spec.entries:
            lam = entry.eigenvalue
            b = shift(a, lam)
            eigenspace = list(self.null_space(b).vectors)
            if not eigenspace or len(eigenspace) > entry.algebraic:
                raise InconsistentSpectrumException(
                    f"λ={lam} has null space dimension {len(eigenspace)}, algebraic {entry.algebraic}"
                )
            trace.add(f"null_space(A - ({lam})I) has dimension {len(eigenspace)}")
            chains = self._chains(b, lam, entry.algebraic, eigenspace)
            if sum(len(c) for c in chains) != entry.algebraic:
                raise InconsistentSpectrumException(f"Chains for λ={lam} do not cover its multiplicity")
            geos.append((entry.algebraic, len(eigenspace)))
            records.append(
                EigenRecord(
                    eigenvalue=lam,
                    algebraic=entry.algebraic,
                    geometric=len(eigenspace),
                    basis=tuple(normalize_eigenvector(v) for v in eigenspace),
                    chains=tuple(JordanChain(eigenvalue=lam, vectors=tuple(c)) for c in chains),
                )
            )
        return EigenStructure(
            matrix_dim=a.dim,
            spectral_class=self._spectral_class(a.dim, geos),
            records=tuple(records),
            trace=ExtractionTrace(entries=tuple(trace.entries)),
            source="oracle",
        )
