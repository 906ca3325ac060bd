from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.constants import MatrixClass, ScalarMode
from app.core import (
    ClassMismatchException,
    ComplexSpectrumException,
    IrrationalSpectrumException,
    Scalar,
    SmallMatrix,
    mat_mul,
    shift,
)
from app.schemas import JordanSpec
from app.services import BenchmarkService, ExtractionService, MatrixGenerator, OracleService
from tests.conftest import GOLDEN_LABELS, GOLDEN_MATRICES
from tests.helpers import mat, square_matrices

halves = st.integers(min_value=-12, max_value=12).map(lambda k: Fraction(k, 2))


@pytest.mark.parametrize("dim", [2, 3])
def test_cayley_hamilton(spectrum_service, dim):
    @settings(max_examples=500, deadline=None)
    @given(a=square_matrices(dim))
    def check(a):
        poly = spectrum_service.char_poly(a)
        assert spectrum_service.char_poly_at(poly, a) == SmallMatrix.zeros(dim)

    check()


@settings(max_examples=200, deadline=None)
@given(
    values=st.lists(halves, min_size=2, max_size=2, unique=True),
    seed=st.integers(min_value=0, max_value=2 ** 32),
)
def test_distinct2_shift_product_vanishes(values, seed):
    generator, extraction_service, oracle_service = MatrixGenerator(), ExtractionService(), OracleService()
    spec = JordanSpec(dim=2, blocks=[[v, 1] for v in values])
    a = generator.generate_matrix(spec, seed)
    lam1, lam2 = sorted(Scalar(v) for v in values)
    b1, b2 = shift(a, lam1), shift(a, lam2)
    assert mat_mul(b2, b1) == SmallMatrix.zeros(2)
    structure = extraction_service.analyze(a)
    nonzero = [c for c in b1.columns() if not c.is_zero()]
    assert oracle_service.spans_equal(list(structure.record_for(lam2).basis), nonzero)


@pytest.mark.parametrize("kind", list(MatrixClass))
def test_column_method_matches_oracle(kind, generator, spectrum_service, extraction_service, oracle_service, verification_service):
    for spec, a in generator.corpus(kind, 112, seed=2024):
        structure = extraction_service.analyze(a)
        reference = oracle_service.eigensolve_reference(a, spectrum_service.spectrum_of(a))
        assert structure.spectral_class.label == spec.expected_class().label
        assert structure.eigenvalues == reference.eigenvalues
        for ours, theirs in zip(structure.records, reference.records):
            assert oracle_service.spans_equal(list(ours.basis), list(theirs.basis))
        assert verification_service.verify_structure(a, structure).passed


@pytest.mark.parametrize("name", sorted(GOLDEN_MATRICES))
@pytest.mark.parametrize("factor", [Fraction(2), Fraction(-1, 3), Fraction(7, 5)])
def test_scaling_invariance(name, factor, extraction_service, oracle_service):
    a = GOLDEN_MATRICES[name]
    base = extraction_service.analyze(a)
    scaled = extraction_service.analyze(a.scale(factor))
    assert sorted(v * factor for v in base.eigenvalues) == scaled.eigenvalues
    assert scaled.spectral_class.label == base.spectral_class.label
    for record in base.records:
        other = scaled.record_for(record.eigenvalue * factor)
        assert oracle_service.spans_equal(list(record.basis), list(other.basis))


@pytest.mark.parametrize("name", sorted(GOLDEN_MATRICES))
def test_float_mode_agrees_with_exact(name, extraction_service, verification_service):
    exact = GOLDEN_MATRICES[name]
    a = exact.to_mode(ScalarMode.FLOAT)
    structure = extraction_service.analyze(a)
    reference = extraction_service.analyze(exact)
    assert structure.spectral_class.label == GOLDEN_LABELS[name]
    assert len(structure.eigenvalues) == len(reference.eigenvalues)
    for got, want in zip(structure.eigenvalues, reference.eigenvalues):
        assert got.value == pytest.approx(float(want.value), abs=1e-9)
    assert verification_service.verify_structure(a, structure).passed


class TestNegativeControls:
    def test_rotation_is_complex(self, extraction_service):
        with pytest.raises(ComplexSpectrumException):
            extraction_service.analyze(mat([0, -1], [1, 0]))

    def test_golden_ratio_is_irrational(self, extraction_service):
        with pytest.raises(IrrationalSpectrumException):
            extraction_service.analyze(mat([1, 1], [1, 0]))

    def test_root_two_is_irrational(self, extraction_service):
        with pytest.raises(IrrationalSpectrumException):
            extraction_service.analyze(mat([0, 1], [2, 0]))

    def test_golden_ratio_in_float(self, extraction_service):
        structure = extraction_service.analyze(mat([1, 1], [1, 0]).to_mode(ScalarMode.FLOAT))
        assert structure.spectral_class.label == "Distinct2"

    def test_wrong_routine(self, extraction_service, spectrum_service):
        a = GOLDEN_MATRICES["triple_case1"]
        with pytest.raises(ClassMismatchException):
            extraction_service.extract_3x3_distinct(a, spectrum_service.spectrum_of(a))


class TestBench:
    def test_small_run_passes_gate(self, policy):
        report = BenchmarkService(policy).run([MatrixClass.DISTINCT2, MatrixClass.TRIPLE_GEO2], 4, seed=1)
        assert report.gate_passed
        assert [r.matrix_class for r in report.rows] == ["distinct2", "triple-geo2"]
        assert all(r.ratio is not None for r in report.rows)

    def test_structures_disagree_across_matrices(self, policy, extraction_service, oracle_service, spectrum_service):
        bench = BenchmarkService(policy)
        a = GOLDEN_MATRICES["simple_double_geo2"]
        b = GOLDEN_MATRICES["simple_double_geo1"]
        reference = oracle_service.eigensolve_reference(b, spectrum_service.spectrum_of(b))
        assert bench.structures_agree(extraction_service.analyze(b), reference)
        assert not bench.structures_agree(extraction_service.analyze(a), reference)
