"""
Engine trích xuất eigenvector bằng cột của tích ma trận dịch chuyển.
"""

from .extract import ExtractionService
from .profile import column_case_profile, nilpotent_from_parameters
from .verify import VerificationService
