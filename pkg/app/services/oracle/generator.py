"""
Sinh ma trận có cấu trúc Jordan định trước: A = P J P^-1 với P nguyên ngẫu nhiên (có seed).
"""

from fractions import Fraction
from typing import List, Optional, Tuple
import logging

import numpy as np

from app.constants import MATRIX_CLASS_BLOCKS, MatrixClass
from app.core.config import settings
from app.core.matrix import SmallMatrix, mat_mul
from app.core.scalar import Scalar
from app.schemas import JordanBlock, JordanSpec

logger = logging.getLogger(__name__)

# Số nguyên và nửa nguyên trong [-6, 6]
EIGENVALUE_POOL = [Fraction(k, 2) for k in range(-12, 13)]


class MatrixGenerator:
    def __init__(self, entry_bound: Optional[int] = None, max_attempts: Optional[int] = None):
        self.entry_bound = entry_bound or settings.GENERATOR_ENTRY_BOUND
        self.max_attempts = max_attempts or settings.GENERATOR_MAX_ATTEMPTS

    def jordan_matrix(self, spec: JordanSpec) -> SmallMatrix:
        """Eigenvalue trên đường chéo, 1 trên đường chéo phụ bên trong mỗi block."""
        n = spec.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for block in spec.blocks:
            for k in range(block.size):
                rows[offset + k][offset + k] = block.eigenvalue.value
                if k + 1 < block.size:
                    rows[offset + k][offset + k + 1] = Fraction(1)
            offset += block.size
        return SmallMatrix(rows)

    def conjugate(self, j: SmallMatrix, p: SmallMatrix) -> SmallMatrix:
        """P J P^-1, với P^-1 = adj(P) / det(P) chính xác."""
        return mat_mul(mat_mul(p, j), p.inverse())

    def random_invertible(self, rng: np.random.Generator, dim: int) -> SmallMatrix:
        """
        Rút P với phần tử nguyên trong [-bound, bound] tới khi det(P) != 0;
        sau max_attempts lần thất bại thì nới rộng khoảng giá trị.
        """
        bound = self.entry_bound
        while True:
            for _ in range(self.max_attempts):
                draw = rng.integers(-bound, bound + 1, size=(dim, dim))
                p = SmallMatrix([[int(x) for x in row] for row in draw])
                if not p.det().is_zero():
                    return p
            logger.warning(f"No invertible P within bound {bound}; widening")
            bound *= 2

    def generate_matrix(self, spec: JordanSpec, seed: int) -> SmallMatrix:
        """Tái lập hoàn toàn theo (spec, seed)."""
        rng = np.random.default_rng(seed)
        p = self.random_invertible(rng, spec.dim)
        return self.conjugate(self.jordan_matrix(spec), p)

    def random_jordan_spec(self, kind: MatrixClass, rng: np.random.Generator) -> JordanSpec:
        """Eigenvalue phân biệt lấy từ EIGENVALUE_POOL cho mỗi nhóm block của class."""
        groups = MATRIX_CLASS_BLOCKS[kind]
        picks = rng.choice(len(EIGENVALUE_POOL), size=len(groups), replace=False)
        blocks = [
            JordanBlock(eigenvalue=Scalar(EIGENVALUE_POOL[int(i)]), size=size)
            for i, sizes in zip(picks, groups)
            for size in sizes
        ]
        return JordanSpec(dim=sum(b.size for b in blocks), blocks=blocks)

    def corpus(
        self, kind: MatrixClass, count: int, seed: int
    ) -> List[Tuple[JordanSpec, SmallMatrix]]:
        rng = np.random.default_rng(seed)
        items = []
        for _ in range(count):
            spec = self.random_jordan_spec(kind, rng)
            p = self.random_invertible(rng, spec.dim)
            items.append((spec, self.conjugate(self.jordan_matrix(spec), p)))
        return items
