import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from app.constants import MatrixClass
from app.core import (
    DimensionMismatchException,
    InconsistentSpectrumException,
    ModeMismatchException,
    Scalar,
    SmallMatrix,
)
from app.models import Spectrum
from app.schemas import JordanSpec
from tests.conftest import GOLDEN_MATRICES
from tests.helpers import entries, fmat, mat, nonzero_fractions, square_matrices, vec, vecs, vectors


def E(n, d=1):
    return Scalar.exact(n, d)


class TestNullSpace:
    def test_rank_one_2x2(self, oracle_service):
        basis = oracle_service.null_space(mat([1, 1], [2, 2]))
        assert basis.dimension == 1
        assert oracle_service.spans_equal(list(basis.vectors), [vec(-1, 1)])

    def test_identity(self, oracle_service):
        assert oracle_service.null_space(SmallMatrix.identity(3)).vectors == ()

    def test_shifted_rank_two(self, oracle_service):
        m = mat([3, -9, -6], [-6, 6, 6], [12, -18, -15])
        basis = oracle_service.null_space(m)
        assert basis.dimension == 1
        assert oracle_service.spans_equal(list(basis.vectors), [vec(1, -1, 2)])
        for v in basis.vectors:
            assert (m @ v).is_zero()

    def test_zero_matrix(self, oracle_service):
        assert oracle_service.null_space(SmallMatrix.zeros(2)).dimension == 2

    def test_float_rejected(self, oracle_service):
        with pytest.raises(ModeMismatchException):
            oracle_service.null_space(fmat([1, 0], [0, 1]))


class TestSpans:
    def test_scaling(self, oracle_service):
        assert oracle_service.spans_equal([vec(1, 2)], [vec(2, 4)])

    def test_different_dimensions(self, oracle_service):
        assert not oracle_service.spans_equal(vecs((1, 0), (0, 1)), [vec(1, 1)])

    def test_columns_of_b1_span_double_eigenspace(self, oracle_service):
        a = GOLDEN_MATRICES["simple_double_geo2"]
        b1 = a - SmallMatrix.identity(3)
        b2 = a + SmallMatrix.identity(3).scale(2)
        assert oracle_service.spans_equal(b1.columns(), list(oracle_service.null_space(b2).vectors))

    def test_dimension_mismatch(self, oracle_service):
        with pytest.raises(DimensionMismatchException):
            oracle_service.spans_equal([vec(1, 2)], [vec(1, 2, 3)])

    def test_rank(self, oracle_service):
        assert oracle_service.rank([]) == 0
        assert oracle_service.rank(vecs((1, 2, 3), (2, 4, 6), (0, 1, 0))) == 2


class TestReference:
    def test_matches_column_method(self, oracle_service, extraction_service, spectrum_service):
        a = GOLDEN_MATRICES["distinct2"]
        reference = oracle_service.eigensolve_reference(a, spectrum_service.spectrum_of(a))
        column = extraction_service.analyze(a)
        assert reference.source == "oracle"
        for ours, theirs in zip(column.records, reference.records):
            assert oracle_service.spans_equal(list(ours.basis), list(theirs.basis))

    def test_defective_double(self, oracle_service, spectrum_service, verification_service):
        a = GOLDEN_MATRICES["double2"]
        reference = oracle_service.eigensolve_reference(a, spectrum_service.spectrum_of(a))
        record = reference.record_for(E(3))
        assert record.geometric == 1
        assert [c.length for c in record.chains] == [2]
        assert verification_service.verify_structure(a, reference).passed

    def test_scalar_matrix(self, oracle_service, spectrum_service):
        a = SmallMatrix.identity(3).scale(5)
        reference = oracle_service.eigensolve_reference(a, spectrum_service.spectrum_of(a))
        assert reference.record_for(E(5)).geometric == 3
        assert reference.spectral_class.label == "Triple(geo 3)"

    @pytest.mark.parametrize("name", sorted(GOLDEN_MATRICES))
    def test_golden_structures_verify(self, name, oracle_service, spectrum_service, verification_service):
        a = GOLDEN_MATRICES[name]
        reference = oracle_service.eigensolve_reference(a, spectrum_service.spectrum_of(a))
        report = verification_service.verify_structure(a, reference)
        assert report.passed
        assert report.max_residual == 0

    def test_wrong_spectrum(self, oracle_service):
        spec = Spectrum.from_pairs(2, [(E(1), 1), (E(2), 1)])
        with pytest.raises(InconsistentSpectrumException):
            oracle_service.eigensolve_reference(GOLDEN_MATRICES["distinct2"], spec)


class TestGenerator:
    def test_identity_conjugation(self, generator):
        spec = JordanSpec(dim=2, blocks=[["3", 2]])
        j = generator.jordan_matrix(spec)
        assert j == mat([3, 1], [0, 3])
        assert generator.conjugate(j, SmallMatrix.identity(2)) == j

    @pytest.mark.parametrize("seed", [0, 1, 2 ** 63])
    def test_distinct_spectrum_char_poly(self, generator, spectrum_service, seed):
        spec = JordanSpec(dim=3, blocks=[["1", 1], ["2", 1], ["-2", 1]])
        a = generator.generate_matrix(spec, seed)
        assert spectrum_service.char_poly(a).coefficients == (E(4), E(-4), E(-1), E(1))

    def test_single_block_is_triple_geo1(self, generator, spectrum_service, oracle_service):
        spec = JordanSpec(dim=3, blocks=[["3", 3]])
        a = generator.generate_matrix(spec, 7)
        assert spectrum_service.classify(a, spectrum_service.spectrum_of(a)).label == "Triple(geo 1)"
        assert oracle_service.null_space(a - SmallMatrix.identity(3).scale(3)).dimension == 1

    def test_reproducible(self, generator):
        spec = JordanSpec(dim=2, blocks=[["1/2", 1], ["-3", 1]])
        assert generator.generate_matrix(spec, 42) == generator.generate_matrix(spec, 42)

    @pytest.mark.parametrize("kind", list(MatrixClass))
    def test_corpus_matches_expected_class(self, generator, spectrum_service, kind):
        for spec, a in generator.corpus(kind, 5, seed=11):
            label = spectrum_service.classify(a, spectrum_service.spectrum_of(a)).label
            assert label == spec.expected_class().label

    def test_random_spec_eigenvalues_in_pool(self, generator):
        rng = np.random.default_rng(3)
        spec = generator.random_jordan_spec(MatrixClass.DISTINCT3, rng)
        values = [b.eigenvalue.value for b in spec.blocks]
        assert len(set(values)) == 3
        assert all(-6 <= v <= 6 and (2 * v).denominator == 1 for v in values)

    def test_spec_validation(self):
        with pytest.raises(ValidationError):
            JordanSpec(dim=3, blocks=[["1", 1], ["2", 1]])
        with pytest.raises(ValidationError):
            JordanSpec(dim=2, blocks=[[1.5, 2]])
        with pytest.raises(ValidationError):
            JordanSpec(dim=4, blocks=[["1", 2], ["2", 2]])


class TestOracleProperties:
    def test_null_space_dimension_is_dim_minus_rank(self, oracle_service):
        @settings(deadline=None)
        @given(m=st.integers(2, 3).flatmap(square_matrices))
        def check(m):
            basis = oracle_service.null_space(m)
            assert basis.dimension == m.dim - oracle_service.rank([m.row(i) for i in range(m.dim)])
            for v in basis.vectors:
                assert (m @ v).is_zero()

        check()

    def test_spans_equal_is_an_equivalence(self, oracle_service):
        @settings(deadline=None)
        @given(u=st.lists(vectors(3), min_size=1, max_size=3), c=entries, d=nonzero_fractions)
        def check(u, c, d):
            assert oracle_service.spans_equal(u, u)
            # invertible recombinations of u
            v = [u[0] + u[-1].scale(c), *u[1:]] if len(u) > 1 else [u[0].scale(d)]
            w = [*v[:-1], v[-1].scale(d)]
            assert oracle_service.spans_equal(u, v)
            assert oracle_service.spans_equal(v, u)
            assert oracle_service.spans_equal(v, w)
            assert oracle_service.spans_equal(u, w)

        check()

    def test_generated_spectrum_is_recovered(self, spectrum_service, generator):
        @settings(max_examples=50, deadline=None)
        @given(kind=st.sampled_from(list(MatrixClass)), seed=st.integers(0, 2**32 - 1))
        def check(kind, seed):
            spec = generator.random_jordan_spec(kind, np.random.default_rng(seed))
            a = generator.generate_matrix(spec, seed)
            found = spectrum_service.eigenvalues_exact(spectrum_service.char_poly(a))
            expected = sorted((value, sum(sizes)) for value, sizes in spec.grouped().items())
            assert [(e.eigenvalue, e.algebraic) for e in found.entries] == expected

        check()
