"""
CH Eigen: eigenvector và chuỗi Jordan của ma trận 2x2 / 3x3 từ cột của các ma trận dịch chuyển.
"""

__version__ = "0.1.0"
