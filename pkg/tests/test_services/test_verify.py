import pytest

from app.core import Scalar
from app.services import VerificationService
from tests.conftest import GOLDEN_MATRICES
from tests.helpers import fmat, vec


def E(n, d=1):
    return Scalar.exact(n, d)


def _replace_record(structure, eigenvalue, **update):
    records = tuple(
        r.model_copy(update=update) if r.eigenvalue == eigenvalue else r for r in structure.records
    )
    return structure.model_copy(update={"records": records})


@pytest.mark.parametrize("name", sorted(GOLDEN_MATRICES))
def test_golden_structures_pass(name, extraction_service, verification_service):
    a = GOLDEN_MATRICES[name]
    report = verification_service.verify_structure(a, extraction_service.analyze(a))
    assert report.passed
    assert report.max_residual == 0
    assert report.summary()["failed"] == []


def test_corrupted_eigenvector_fails(extraction_service, verification_service):
    a = GOLDEN_MATRICES["distinct2"]
    structure = _replace_record(extraction_service.analyze(a), E(6), basis=(vec(1, 3),))
    report = verification_service.verify_structure(a, structure)
    assert not report.passed
    assert [c.name for c in report.failures] == ["eigen λ=6 basis[0]"]
    assert report.max_residual == 1


def test_reversed_chain_fails(extraction_service, verification_service):
    a = GOLDEN_MATRICES["double2"]
    structure = extraction_service.analyze(a)
    chain = structure.record_for(E(3)).chains[0]
    flipped = chain.model_copy(update={"vectors": tuple(reversed(chain.vectors))})
    report = verification_service.verify_structure(a, _replace_record(structure, E(3), chains=(flipped,)))
    assert "chain λ=3 #0[0]" in report.summary()["failed"]


def test_missing_basis_vector_fails(extraction_service, verification_service):
    a = GOLDEN_MATRICES["simple_double_geo2"]
    structure = extraction_service.analyze(a)
    record = structure.record_for(E(-2))
    report = verification_service.verify_structure(
        a, _replace_record(structure, E(-2), basis=record.basis[:1])
    )
    assert "geometric λ=-2" in report.summary()["failed"]


def test_float_residuals_small(policy, extraction_service):
    a = fmat([7, -4, -5], [3, -2, -3], [6, -4, -4])
    structure = extraction_service.analyze(a)
    report = VerificationService(policy).verify_structure(a, structure)
    assert report.passed
    assert report.max_residual <= 1e-9


def test_float_corruption_detected(policy, extraction_service):
    a = fmat([4, 1], [2, 5])
    structure = extraction_service.analyze(a)
    largest = structure.records[-1].eigenvalue
    structure = _replace_record(structure, largest, basis=(vec(1, 3).to_mode(a.mode),))
    report = VerificationService(policy, rtol=1e-6).verify_structure(a, structure)
    assert not report.passed
    assert report.failures[0].residual == pytest.approx(1.0)
