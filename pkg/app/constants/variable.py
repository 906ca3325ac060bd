from enum import Enum, IntEnum


# Scalar mode
class ScalarMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


# Spectral class kinds
class SpectralKind(str, Enum):
    DISTINCT2 = "Distinct2"
    DOUBLE2 = "Double2"
    DISTINCT3 = "Distinct3"
    SIMPLE_PLUS_DOUBLE = "SimplePlusDouble"
    TRIPLE = "Triple"


# Matrix classes used by generator / bench
class MatrixClass(str, Enum):
    DISTINCT2 = "distinct2"
    DOUBLE2_GEO1 = "double2-geo1"
    DOUBLE2_GEO2 = "double2-geo2"
    DISTINCT3 = "distinct3"
    SIMPLE_DOUBLE_GEO1 = "simple-double-geo1"
    SIMPLE_DOUBLE_GEO2 = "simple-double-geo2"
    TRIPLE_GEO1 = "triple-geo1"
    TRIPLE_GEO2 = "triple-geo2"
    TRIPLE_GEO3 = "triple-geo3"


# Output format
class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


# Exit codes
class ExitCode(IntEnum):
    OK = 0
    DOMAIN_ERROR = 1
    USAGE_ERROR = 2


# Jordan block layout per matrix class: groups of block sizes sharing one eigenvalue
MATRIX_CLASS_BLOCKS = {
    MatrixClass.DISTINCT2: [[1], [1]],
    MatrixClass.DOUBLE2_GEO1: [[2]],
    MatrixClass.DOUBLE2_GEO2: [[1, 1]],
    MatrixClass.DISTINCT3: [[1], [1], [1]],
    MatrixClass.SIMPLE_DOUBLE_GEO1: [[1], [2]],
    MatrixClass.SIMPLE_DOUBLE_GEO2: [[1], [1, 1]],
    MatrixClass.TRIPLE_GEO1: [[3]],
    MatrixClass.TRIPLE_GEO2: [[2, 1]],
    MatrixClass.TRIPLE_GEO3: [[1, 1, 1]],
}


def get_matrix_class(name: str) -> MatrixClass:
    try:
        return MatrixClass(name)
    except ValueError:
        raise ValueError(
            f"Unknown matrix class '{name}', expected one of: "
            + ", ".join(c.value for c in MatrixClass)
        )
