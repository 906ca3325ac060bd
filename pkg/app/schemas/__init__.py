"""
Module chứa các schema Pydantic cho tài liệu vào / ra.
"""

# Export các schema chính
from .document import MatrixDocument, JordanBlock, JordanSpec, ResultDocument

from .verification import ResidualCheck, VerificationReport

from .bench import BenchRow, BenchReport
