from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from app.core import (
    EXACT_POLICY,
    NotNilpotentException,
    Scalar,
    SmallMatrix,
    ZeroMatrixException,
    ZeroVectorException,
)
from app.services import column_case_profile, nilpotent_from_parameters
from tests.helpers import mat, vec

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def test_case1_worked_example():
    profile = column_case_profile(mat([-5, 5, -10], [-1, 1, -2], [2, -2, 4]), EXACT_POLICY)
    assert profile.case_id == 1
    assert profile.t == Scalar.exact(-1)
    assert profile.s == Scalar.exact(2)
    assert profile.condition_value == 0
    assert profile.pivot_column == vec(-5, -1, 2)
    assert profile.eigenbasis == (vec(1, 1, 0), vec(-2, 0, 1))
    assert profile.generalized == vec(1, 0, 0)


def test_case2_worked_example():
    profile = column_case_profile(mat([0, -1, 2], [0, -6, 12], [0, -3, 6]), EXACT_POLICY)
    assert profile.case_id == 2
    assert profile.t == Scalar.exact(-2)
    assert profile.s is None
    assert profile.condition_value == 0
    assert profile.eigenbasis == (vec(0, 2, 1), vec(1, 0, 0))
    assert profile.eigenvector == vec(-1, -6, -3)
    assert profile.generalized == vec(0, 1, 0)


def test_case3():
    profile = column_case_profile(mat([0, 0, 4], [0, 0, -7], [0, 0, 0]), EXACT_POLICY)
    assert profile.case_id == 3
    assert profile.eigenbasis == (vec(1, 0, 0), vec(0, 1, 0))
    assert profile.eigenvector == vec(4, -7, 0)
    assert profile.generalized == vec(0, 0, 1)


def test_all_ones_is_not_nilpotent():
    with pytest.raises(NotNilpotentException):
        column_case_profile(mat([1, 1, 1], [1, 1, 1], [1, 1, 1]), EXACT_POLICY)


def test_non_proportional_columns():
    with pytest.raises(NotNilpotentException):
        column_case_profile(mat([1, 0, 0], [0, 1, 0], [0, 0, 0]), EXACT_POLICY)


def test_case3_with_nonzero_corner():
    with pytest.raises(NotNilpotentException):
        column_case_profile(mat([0, 0, 1], [0, 0, 1], [0, 0, 1]), EXACT_POLICY)


def test_zero_matrix():
    with pytest.raises(ZeroMatrixException):
        column_case_profile(SmallMatrix.zeros(3), EXACT_POLICY)


def test_parameters_giving_zero():
    with pytest.raises(ZeroVectorException):
        nilpotent_from_parameters(3, x=0, y=0)


@settings(deadline=None)
@given(t=small, s=small, y=small, z=small)
def test_case1_family_recovers_parameters(t, s, y, z):
    assume(y != 0 or z != 0)
    b = nilpotent_from_parameters(1, t=t, s=s, y=y, z=z)
    assert b @ b == SmallMatrix.zeros(3)
    profile = column_case_profile(b, EXACT_POLICY)
    assert profile.case_id == 1
    assert profile.t == Scalar(t)
    assert profile.s == Scalar(s)
    for v in profile.eigenbasis:
        assert (b @ v).is_zero()


@settings(deadline=None)
@given(t=small, x=small, z=small)
def test_case2_family_recovers_parameters(t, x, z):
    assume(x != 0 or z != 0)
    b = nilpotent_from_parameters(2, t=t, x=x, z=z)
    assert b @ b == SmallMatrix.zeros(3)
    profile = column_case_profile(b, EXACT_POLICY)
    assert profile.case_id == 2
    assert profile.t == Scalar(t)
    assert b @ profile.generalized == profile.eigenvector


@given(x=small, y=small)
def test_case3_family(x, y):
    assume(x != 0 or y != 0)
    b = nilpotent_from_parameters(3, x=x, y=y)
    profile = column_case_profile(b, EXACT_POLICY)
    assert profile.case_id == 3
    assert profile.eigenvector == vec(x, y, Fraction(0))
