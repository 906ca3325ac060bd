"""
Bộ giải tham chiếu và bộ sinh ma trận cho kiểm thử.
"""

from .oracle import OracleService
from .generator import MatrixGenerator, EIGENVALUE_POOL
