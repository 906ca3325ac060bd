import pytest

from app.core import EXACT_POLICY, TolerancePolicy
from app.services import (
    ExtractionService,
    MatrixGenerator,
    OracleService,
    ReportService,
    SpectrumService,
    VerificationService,
)
from tests.helpers import mat


# Các ma trận mẫu dùng chung
GOLDEN_MATRICES = {
    "distinct2": mat([4, 1], [2, 5]),
    "double2": mat([2, 1], [-1, 4]),
    "distinct3": mat([7, -4, -5], [3, -2, -3], [6, -4, -4]),
    "simple_double_geo2": mat([4, -9, -6], [-6, 7, 6], [12, -18, -14]),
    "simple_double_geo1": mat([5, -10, -7], [-6, 7, 6], [13, -19, -15]),
    "triple_case1": mat([-2, 5, -10], [-1, 4, -2], [2, -2, 7]),
    "triple_case2": mat([2, -1, 2], [0, -4, 12], [0, -3, 8]),
}

GOLDEN_LABELS = {
    "distinct2": "Distinct2",
    "double2": "Double2(geo 1)",
    "distinct3": "Distinct3",
    "simple_double_geo2": "SimplePlusDouble(geo 2)",
    "simple_double_geo1": "SimplePlusDouble(geo 1)",
    "triple_case1": "Triple(geo 2)",
    "triple_case2": "Triple(geo 2)",
}


@pytest.fixture
def policy() -> TolerancePolicy:
    return TolerancePolicy(zero_threshold=1e-9, relative=True, cluster_eps=1e-6)


@pytest.fixture
def exact_policy() -> TolerancePolicy:
    return EXACT_POLICY


@pytest.fixture
def spectrum_service(policy) -> SpectrumService:
    return SpectrumService(policy)


@pytest.fixture
def extraction_service(policy) -> ExtractionService:
    return ExtractionService(policy)


@pytest.fixture
def verification_service(policy) -> VerificationService:
    return VerificationService(policy)


@pytest.fixture
def oracle_service(policy) -> OracleService:
    return OracleService(policy)


@pytest.fixture
def report_service(policy) -> ReportService:
    return ReportService(policy)


@pytest.fixture
def generator() -> MatrixGenerator:
    return MatrixGenerator(entry_bound=9, max_attempts=64)


@pytest.fixture
def golden_matrices():
    return dict(GOLDEN_MATRICES)
