"""
Module core chứa các thành phần cơ bản cho ứng dụng: cấu hình, exceptions,
số học scalar exact/float và ma trận nhỏ 2x2, 3x3.
"""

# Export cấu hình
from .config import settings

# Export exceptions
from .exceptions import (
    EigenException,
    ModeMismatchException,
    DimensionMismatchException,
    ZeroVectorException,
    ZeroMatrixException,
    IrrationalSpectrumException,
    ComplexSpectrumException,
    InconsistentSpectrumException,
    ClassMismatchException,
    NotNilpotentException,
    ParseException,
    InputValidationException,
    UsageException,
    ComputationException,
)

# Export số học
from .scalar import Scalar, scalar_canonicalize, as_scalar
from .matrix import SmallVector, SmallMatrix, mat_mul, shift, normalize_eigenvector
from .tolerance import TolerancePolicy, EXACT_POLICY
from .columns import (
    is_zero_matrix,
    is_zero_vector,
    first_nonzero_column,
    best_column,
    best_column_index,
    minors_2x2,
    are_independent,
)
