import pytest

from app.core import (
    EXACT_POLICY,
    TolerancePolicy,
    are_independent,
    best_column,
    best_column_index,
    first_nonzero_column,
    is_zero_matrix,
    minors_2x2,
)
from app.core import SmallVector
from tests.helpers import fmat, mat, vec


def test_first_nonzero_column_exact():
    assert first_nonzero_column(mat([0, 1], [0, 2]), EXACT_POLICY) == (1, vec(1, 2))
    assert first_nonzero_column(mat([0, 0], [0, 0]), EXACT_POLICY) is None


def test_best_column_float_prefers_largest_norm(policy):
    m = fmat([1, 0, 5], [1, 0, 5], [0, 0, 0])
    index, column = best_column_index(m, policy)
    assert index == 2
    assert column == SmallVector([5.0, 5.0, 0.0])


def test_best_column_float_ignores_noise(policy):
    assert best_column(fmat([1e-13, 0], [0, 1e-14]), policy) is None


def test_is_zero_matrix_tolerance(policy):
    assert is_zero_matrix(fmat([1e-12, 0], [0, 0]), policy)
    assert not is_zero_matrix(fmat([1e-6, 0], [0, 0]), policy)
    assert not is_zero_matrix(mat(["1/1000000000000", 0], [0, 0]), policy)


def test_minors_and_independence():
    assert [m.value for m in minors_2x2(vec(1, 2), vec(2, 4))] == [0]
    assert not are_independent([vec(1, 2), vec(2, 4)], EXACT_POLICY)
    assert are_independent([vec(1, 0), vec(0, 1)], EXACT_POLICY)
    assert are_independent([vec(1, 0, 0), vec(0, 1, 0), vec(1, 1, 1)], EXACT_POLICY)
    assert not are_independent([vec(1, 0, 0), vec(0, 1, 0), vec(1, 1, 0)], EXACT_POLICY)
    assert not are_independent([vec(0, 0)], EXACT_POLICY)


def test_tolerance_policy_threshold():
    relative = TolerancePolicy(zero_threshold=1e-9, relative=True)
    absolute = TolerancePolicy(zero_threshold=1e-9, relative=False)
    m = fmat([100, 0], [0, 1])
    assert relative.effective_threshold(m) == pytest.approx(1e-7)
    assert absolute.effective_threshold(m) == pytest.approx(1e-9)


def test_tolerance_policy_from_settings_overrides():
    policy = TolerancePolicy.from_settings(zero_threshold=1e-6, cluster_eps=None)
    assert policy.zero_threshold == 1e-6
    assert policy.cluster_eps >= 0
