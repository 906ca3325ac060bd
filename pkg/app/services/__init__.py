"""
Module services chứa logic tính toán của ứng dụng.
"""

# Import BaseService trước vì nó là dependency cơ bản
from .base import BaseService, TraceRecorder

# Import các service theo thứ tự dependency
# SpectrumService chỉ phụ thuộc vào BaseService
from .spectrum import SpectrumService

# ExtractionService dùng SpectrumService để phân loại
from .extract import (
    ExtractionService,
    VerificationService,
    column_case_profile,
    nilpotent_from_parameters,
)

# OracleService và MatrixGenerator
from .oracle import OracleService, MatrixGenerator

# BenchmarkService dùng tất cả service ở trên
from .bench import BenchmarkService

# ReportService
from .report import ReportService

# Export tất cả
__all__ = [
    'BaseService',
    'TraceRecorder',
    'SpectrumService',
    'ExtractionService',
    'VerificationService',
    'column_case_profile',
    'nilpotent_from_parameters',
    'OracleService',
    'MatrixGenerator',
    'BenchmarkService',
    'ReportService',
]
