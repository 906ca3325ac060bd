"""
Module chứa các constants của ứng dụng.
"""

from .variable import (
    ScalarMode,
    SpectralKind,
    MatrixClass,
    OutputFormat,
    ExitCode,
    MATRIX_CLASS_BLOCKS,
    get_matrix_class,
)
