"""
Module chứa các model dữ liệu miền của ứng dụng.
"""

# Export các model chính
from .spectrum import CharPoly, Spectrum, SpectrumEntry, SpectralClass
from .profile import ColumnCaseProfile
from .eigen import JordanChain, EigenRecord, EigenStructure, ExtractionTrace
from .nullspace import NullSpaceBasis
