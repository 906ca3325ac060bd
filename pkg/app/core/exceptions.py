from app.constants import ExitCode


class EigenException(Exception):
    """Base exception, mang theo exit code và detail giống HTTPException."""

    def __init__(self, exit_code: int = ExitCode.DOMAIN_ERROR, detail: str = "Eigen error"):
        super().__init__(detail)
        self.exit_code = int(exit_code)
        self.detail = detail

    def __str__(self) -> str:
        return self.detail


class ModeMismatchException(EigenException):
    def __init__(self, detail: str = "Exact and float scalars cannot be mixed"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class DimensionMismatchException(EigenException):
    def __init__(self, detail: str = "Dimension mismatch"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class ZeroVectorException(EigenException):
    def __init__(self, detail: str = "Vector is zero"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class ZeroMatrixException(EigenException):
    def __init__(self, detail: str = "Matrix is zero"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class IrrationalSpectrumException(EigenException):
    def __init__(self, detail: str = "Spectrum is not rational; use --mode float"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class ComplexSpectrumException(EigenException):
    def __init__(self, detail: str = "Spectrum has complex eigenvalues"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class InconsistentSpectrumException(EigenException):
    def __init__(self, detail: str = "Multiplicities do not sum to the matrix dimension"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class ClassMismatchException(EigenException):
    def __init__(self, detail: str = "Spectral class does not match the extraction routine"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class NotNilpotentException(EigenException):
    def __init__(self, detail: str = "Shifted matrix does not satisfy B^2 = 0"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)

class ParseException(EigenException):
    def __init__(self, detail: str = "Malformed input", line: int = 0, column: int = 0):
        if line:
            detail = f"{detail} (line {line}, column {column})"
        super().__init__(exit_code=ExitCode.USAGE_ERROR, detail=detail)
        self.line = line
        self.column = column

class InputValidationException(EigenException):
    def __init__(self, detail: str = "Invalid input", location: str = ""):
        if location:
            detail = f"{detail} at {location}"
        super().__init__(exit_code=ExitCode.USAGE_ERROR, detail=detail)
        self.location = location

class UsageException(EigenException):
    def __init__(self, detail: str = "Invalid command-line usage"):
        super().__init__(exit_code=ExitCode.USAGE_ERROR, detail=detail)

class ComputationException(EigenException):
    def __init__(self, detail: str = "Computation failed"):
        super().__init__(exit_code=ExitCode.DOMAIN_ERROR, detail=detail)
