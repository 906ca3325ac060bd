from fractions import Fraction
from functools import total_ordering
from typing import Union

from app.constants import ScalarMode
from app.core.exceptions import ModeMismatchException

Number = Union[int, Fraction, float]


@total_ordering
class Scalar:
    """
    Số vô hướng: exact (Fraction đã rút gọn) hoặc float 64-bit.

    Hai mode không bao giờ trộn lẫn; int của Python được nâng lên mode của toán hạng còn lại, Fraction chỉ đi với exact.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Number):
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            value = Fraction(value)
        elif not isinstance(value, (Fraction, float)):
            raise TypeError(f"Unsupported scalar payload: {type(value).__name__}")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # ---- constructors ----

    @classmethod
    def exact(cls, numerator: int, denominator: int = 1) -> "Scalar":
        return cls(Fraction(numerator, denominator))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse "p", "p/q" (exact)."""
        text = text.strip().replace("−", "-")
        if not text:
            raise ValueError("empty scalar")
        if "/" in text:
            num, den = text.split("/", 1)
            return cls(Fraction(int(num), int(den)))
        return cls(Fraction(int(text)))

    @classmethod
    def zero(cls, mode: ScalarMode) -> "Scalar":
        return cls(Fraction(0)) if mode == ScalarMode.EXACT else cls(0.0)

    @classmethod
    def one(cls, mode: ScalarMode) -> "Scalar":
        return cls(Fraction(1)) if mode == ScalarMode.EXACT else cls(1.0)

    # ---- accessors ----

    @property
    def value(self) -> Union[Fraction, float]:
        return self._value

    @property
    def mode(self) -> ScalarMode:
        return ScalarMode.EXACT if isinstance(self._value, Fraction) else ScalarMode.FLOAT

    @property
    def is_exact(self) -> bool:
        return isinstance(self._value, Fraction)

    @property
    def numerator(self) -> int:
        self._require_exact()
        return self._value.numerator

    @property
    def denominator(self) -> int:
        self._require_exact()
        return self._value.denominator

    def _require_exact(self) -> None:
        if not self.is_exact:
            raise ModeMismatchException("Operation requires an exact scalar")

    def is_zero(self, threshold: float = 0.0) -> bool:
        if self.is_exact:
            return self._value == 0
        return abs(self._value) <= threshold

    def to_float(self) -> float:
        return float(self._value)

    def to_mode(self, mode: ScalarMode) -> "Scalar":
        if mode == self.mode:
            return self
        if mode == ScalarMode.FLOAT:
            return Scalar(float(self._value))
        # Decimal literal của float, ví dụ 0.1 -> 1/10
        return Scalar(Fraction(repr(self._value)))

    # ---- arithmetic ----

    def _coerce(self, other) -> Union[Fraction, float]:
        if isinstance(other, Scalar):
            if other.is_exact != self.is_exact:
                raise ModeMismatchException(
                    f"Cannot combine {self.mode.value} scalar with {other.mode.value} scalar"
                )
            return other._value
        if isinstance(other, int) and not isinstance(other, bool):
            return Fraction(other) if self.is_exact else float(other)
        if isinstance(other, Fraction):
            if not self.is_exact:
                raise ModeMismatchException("Cannot combine float scalar with a Fraction")
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self._value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self._value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(o - self._value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self._value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self._value / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(o / self._value)

    def __pow__(self, exponent: int):
        return Scalar(self._value ** exponent)

    def __neg__(self):
        return Scalar(-self._value)

    def __abs__(self):
        return Scalar(abs(self._value))

    # ---- comparison ----

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.is_exact == other.is_exact and self._value == other._value
        if isinstance(other, int) and not isinstance(other, bool):
            return self._value == other
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._value < o

    def __hash__(self):
        return hash((self.is_exact, self._value))

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if self.is_exact:
            if self._value.denominator == 1:
                return str(self._value.numerator)
            return f"{self._value.numerator}/{self._value.denominator}"
        return repr(self._value)


def scalar_canonicalize(s: Scalar) -> Scalar:
    """Trả về dạng rút gọn p/q (q > 0, gcd = 1); idempotent."""
    if not s.is_exact:
        raise ModeMismatchException("scalar_canonicalize requires an exact scalar")
    return Scalar(Fraction(s.numerator, s.denominator))


def as_scalar(value) -> Scalar:
    """Chuyển int / Fraction / float / str / Scalar thành Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return Scalar.parse(value)
    return Scalar(value)
