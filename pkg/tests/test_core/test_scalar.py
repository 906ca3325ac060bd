from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from app.constants import ScalarMode
from app.core import ModeMismatchException, Scalar, as_scalar, scalar_canonicalize


def test_parse_integer_and_fraction():
    assert Scalar.parse("3") == Scalar.exact(3, 1)
    assert Scalar.parse("−10/4") == Scalar.exact(-5, 2)
    assert str(Scalar.parse("-10/4")) == "-5/2"
    assert str(Scalar.parse("6/3")) == "2"


@pytest.mark.parametrize("text", ["", "abc", "1.5", "1/x"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        Scalar.parse(text)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        Scalar.parse("1/0")


def test_modes_never_mix():
    with pytest.raises(ModeMismatchException):
        Scalar.exact(1, 2) + Scalar(0.5)
    with pytest.raises(ModeMismatchException):
        Scalar(1.0) * Scalar.exact(2)


def test_int_promotes_to_operand_mode():
    assert Scalar.exact(1, 2) + 1 == Scalar.exact(3, 2)
    assert (Scalar(0.5) + 1).mode == ScalarMode.FLOAT
    assert 2 - Scalar.exact(1, 3) == Scalar.exact(5, 3)
    assert 1 / Scalar.exact(4) == Scalar.exact(1, 4)


def test_equality_is_mode_aware():
    assert Scalar.exact(1) != Scalar(1.0)
    assert Scalar.exact(1) == 1
    assert Scalar(1.0) == 1


def test_bool_is_rejected():
    with pytest.raises(TypeError):
        Scalar(True)


def test_mode_conversion_uses_decimal_literal():
    assert Scalar(0.1).to_mode(ScalarMode.EXACT) == Scalar.exact(1, 10)
    assert Scalar.exact(1, 4).to_mode(ScalarMode.FLOAT) == Scalar(0.25)


def test_exact_accessors_reject_float():
    with pytest.raises(ModeMismatchException):
        Scalar(0.5).numerator
    with pytest.raises(ModeMismatchException):
        scalar_canonicalize(Scalar(0.5))


def test_as_scalar_accepts_mixed_payloads():
    assert as_scalar("7/2") == Scalar.exact(7, 2)
    assert as_scalar(Fraction(1, 3)) == Scalar.exact(1, 3)
    assert as_scalar(2).is_exact
    assert not as_scalar(2.0).is_exact


def test_is_zero_threshold_only_applies_to_float():
    assert Scalar(1e-12).is_zero(1e-9)
    assert not Scalar.exact(1, 10 ** 12).is_zero(1e-9)


@given(st.fractions(max_denominator=10 ** 6))
def test_canonicalize_is_idempotent(value):
    once = scalar_canonicalize(Scalar(value))
    assert scalar_canonicalize(once) == once
    assert once.denominator > 0
    assert Scalar.parse(str(once)) == once
