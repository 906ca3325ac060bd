import math
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from app.constants import ScalarMode
from app.core.exceptions import (
    DimensionMismatchException,
    ModeMismatchException,
    ZeroVectorException,
)
from app.core.scalar import Scalar, as_scalar

SUPPORTED_DIMS = (2, 3)


def _common_mode(values: Iterable[Scalar]) -> ScalarMode:
    modes = {v.mode for v in values}
    if len(modes) != 1:
        raise ModeMismatchException("All entries must share one scalar mode")
    return modes.pop()


def _check_dim(dim: int) -> None:
    if dim not in SUPPORTED_DIMS:
        raise DimensionMismatchException(f"Only dimensions 2 and 3 are supported, got {dim}")


class SmallVector:
    """Vector cố định 2 hoặc 3 phần tử, bất biến."""

    __slots__ = ("_entries", "_mode")

    def __init__(self, entries: Iterable):
        values = tuple(as_scalar(e) for e in entries)
        _check_dim(len(values))
        object.__setattr__(self, "_mode", _common_mode(values))
        object.__setattr__(self, "_entries", values)

    def __setattr__(self, name, value):
        raise AttributeError("SmallVector is immutable")

    @classmethod
    def unit(cls, dim: int, index: int, mode: ScalarMode = ScalarMode.EXACT) -> "SmallVector":
        return cls(
            Scalar.one(mode) if i == index else Scalar.zero(mode) for i in range(dim)
        )

    @classmethod
    def zeros(cls, dim: int, mode: ScalarMode = ScalarMode.EXACT) -> "SmallVector":
        return cls(Scalar.zero(mode) for _ in range(dim))

    @property
    def dim(self) -> int:
        return len(self._entries)

    @property
    def mode(self) -> ScalarMode:
        return self._mode

    @property
    def entries(self) -> Tuple[Scalar, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> Scalar:
        return self._entries[index]

    def _check_compatible(self, other: "SmallVector") -> None:
        if other.dim != self.dim:
            raise DimensionMismatchException(f"Vector dims differ: {self.dim} vs {other.dim}")
        if other.mode != self.mode:
            raise ModeMismatchException()

    def __add__(self, other: "SmallVector") -> "SmallVector":
        self._check_compatible(other)
        return SmallVector(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other: "SmallVector") -> "SmallVector":
        self._check_compatible(other)
        return SmallVector(a - b for a, b in zip(self._entries, other._entries))

    def __neg__(self) -> "SmallVector":
        return SmallVector(-a for a in self._entries)

    def scale(self, factor) -> "SmallVector":
        return SmallVector(a * factor for a in self._entries)

    def max_abs(self) -> float:
        return max(abs(e.to_float()) for e in self._entries)

    def norm(self) -> float:
        return math.hypot(*(e.to_float() for e in self._entries))

    def is_zero(self, threshold: float = 0.0) -> bool:
        return all(e.is_zero(threshold) for e in self._entries)

    def to_mode(self, mode: ScalarMode) -> "SmallVector":
        return SmallVector(e.to_mode(mode) for e in self._entries)

    def __eq__(self, other):
        if not isinstance(other, SmallVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"SmallVector({self})"

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self._entries) + ")"


class SmallMatrix:
    """Ma trận vuông 2x2 hoặc 3x3 (row-major), bất biến."""

    __slots__ = ("_rows", "_mode")

    def __init__(self, rows: Iterable[Iterable]):
        values = tuple(tuple(as_scalar(e) for e in row) for row in rows)
        _check_dim(len(values))
        if any(len(row) != len(values) for row in values):
            raise DimensionMismatchException("Matrix must be square")
        object.__setattr__(self, "_mode", _common_mode(e for row in values for e in row))
        object.__setattr__(self, "_rows", values)

    def __setattr__(self, name, value):
        raise AttributeError("SmallMatrix is immutable")

    @classmethod
    def identity(cls, dim: int, mode: ScalarMode = ScalarMode.EXACT) -> "SmallMatrix":
        return cls(
            [Scalar.one(mode) if i == j else Scalar.zero(mode) for j in range(dim)]
            for i in range(dim)
        )

    @classmethod
    def zeros(cls, dim: int, mode: ScalarMode = ScalarMode.EXACT) -> "SmallMatrix":
        return cls([Scalar.zero(mode)] * dim for _ in range(dim))

    @classmethod
    def from_columns(cls, columns: Sequence[SmallVector]) -> "SmallMatrix":
        dim = len(columns)
        return cls([columns[j][i] for j in range(dim)] for i in range(dim))

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def mode(self) -> ScalarMode:
        return self._mode

    @property
    def rows(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Scalar:
        return self._rows[i][j]

    def row(self, i: int) -> SmallVector:
        return SmallVector(self._rows[i])

    def column(self, j: int) -> SmallVector:
        return SmallVector(row[j] for row in self._rows)

    def columns(self) -> List[SmallVector]:
        return [self.column(j) for j in range(self.dim)]

    def _check_compatible(self, other: "SmallMatrix") -> None:
        if other.dim != self.dim:
            raise DimensionMismatchException(f"Matrix dims differ: {self.dim} vs {other.dim}")
        if other.mode != self.mode:
            raise ModeMismatchException()

    def __add__(self, other: "SmallMatrix") -> "SmallMatrix":
        self._check_compatible(other)
        return SmallMatrix(
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "SmallMatrix") -> "SmallMatrix":
        self._check_compatible(other)
        return SmallMatrix(
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        )

    def __neg__(self) -> "SmallMatrix":
        return self.scale(-1)

    def scale(self, factor) -> "SmallMatrix":
        return SmallMatrix([e * factor for e in row] for row in self._rows)

    def __matmul__(self, other):
        if isinstance(other, SmallMatrix):
            return mat_mul(self, other)
        if isinstance(other, SmallVector):
            return self.apply(other)
        return NotImplemented

    def apply(self, v: SmallVector) -> SmallVector:
        if v.dim != self.dim:
            raise DimensionMismatchException(f"Cannot apply {self.dim}x{self.dim} matrix to dim {v.dim}")
        if v.mode != self.mode:
            raise ModeMismatchException()
        n = self.dim
        return SmallVector(
            sum((row[k] * v[k] for k in range(1, n)), row[0] * v[0]) for row in self._rows
        )

    def power(self, exponent: int) -> "SmallMatrix":
        result = SmallMatrix.identity(self.dim, self.mode)
        for _ in range(exponent):
            result = mat_mul(result, self)
        return result

    def transpose(self) -> "SmallMatrix":
        return SmallMatrix.from_columns([self.row(i) for i in range(self.dim)])

    def trace(self) -> Scalar:
        total = self._rows[0][0]
        for i in range(1, self.dim):
            total = total + self._rows[i][i]
        return total

    def principal_minor_sum(self) -> Scalar:
        """Tổng các định thức con chính 2x2 (hệ số bậc 1 của đa thức đặc trưng 3x3)."""
        r = self._rows
        if self.dim == 2:
            return self.det()
        return (
            (r[0][0] * r[1][1] - r[0][1] * r[1][0])
            + (r[0][0] * r[2][2] - r[0][2] * r[2][0])
            + (r[1][1] * r[2][2] - r[1][2] * r[2][1])
        )

    def det(self) -> Scalar:
        r = self._rows
        if self.dim == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def adjugate(self) -> "SmallMatrix":
        r = self._rows
        if self.dim == 2:
            return SmallMatrix([[r[1][1], -r[0][1]], [-r[1][0], r[0][0]]])

        def cofactor(i: int, j: int) -> Scalar:
            rows = [k for k in range(3) if k != i]
            cols = [k for k in range(3) if k != j]
            minor = (
                r[rows[0]][cols[0]] * r[rows[1]][cols[1]]
                - r[rows[0]][cols[1]] * r[rows[1]][cols[0]]
            )
            return minor if (i + j) % 2 == 0 else -minor

        # adj(A)[i][j] = cofactor(j, i)
        return SmallMatrix([cofactor(j, i) for j in range(3)] for i in range(3))

    def inverse(self) -> "SmallMatrix":
        determinant = self.det()
        if determinant.is_zero():
            raise ZeroDivisionError("Matrix is singular")
        return SmallMatrix([e / determinant for e in row] for row in self.adjugate().rows)

    def max_abs(self) -> float:
        return max(abs(e.to_float()) for row in self._rows for e in row)

    def to_mode(self, mode: ScalarMode) -> "SmallMatrix":
        return SmallMatrix([e.to_mode(mode) for e in row] for row in self._rows)

    def __eq__(self, other):
        if not isinstance(other, SmallMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SmallMatrix({self})"

    def __str__(self):
        return "[" + ", ".join("[" + ",".join(str(e) for e in row) + "]" for row in self._rows) + "]"


def mat_mul(a: SmallMatrix, b: SmallMatrix) -> SmallMatrix:
    if a.dim != b.dim:
        raise DimensionMismatchException(f"Cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    if a.mode != b.mode:
        raise ModeMismatchException()
    n = a.dim
    ra, rb = a.rows, b.rows
    return SmallMatrix(
        [sum((ra[i][k] * rb[k][j] for k in range(1, n)), ra[i][0] * rb[0][j]) for j in range(n)]
        for i in range(n)
    )


def shift(a: SmallMatrix, lam: Scalar) -> SmallMatrix:
    """A - lam * I."""
    if lam.mode != a.mode:
        raise ModeMismatchException(f"Shift {lam} does not match {a.mode.value} matrix")
    return SmallMatrix(
        [e - lam if i == j else e for j, e in enumerate(row)] for i, row in enumerate(a.rows)
    )


def normalize_eigenvector(v: SmallVector) -> SmallVector:
    """
    Chuẩn hóa eigenvector thành đại diện duy nhất của tia.

    Exact: các phần tử là số nguyên nguyên tố cùng nhau, phần tử khác 0 đầu tiên dương.
    Float: chuẩn Euclid bằng 1, phần tử khác 0 đầu tiên dương.

    Raises:
        ZeroVectorException: Nếu v = 0.
    """
    if v.mode == ScalarMode.EXACT:
        values = [e.value for e in v]
        if all(x == 0 for x in values):
            raise ZeroVectorException("Cannot normalize the zero vector")
        lcm = math.lcm(*(x.denominator for x in values))
        ints = [int(x * lcm) for x in values]
        g = math.gcd(*ints)
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x != 0)
        if lead < 0:
            ints = [-x for x in ints]
        return SmallVector(Fraction(x) for x in ints)

    values = [e.value for e in v]
    norm = math.hypot(*values)
    if norm == 0.0:
        raise ZeroVectorException("Cannot normalize the zero vector")
    unit = [x / norm for x in values]
    # Bỏ qua nhiễu roundoff khi chọn dấu
    lead = next(x for x in unit if abs(x) > 1e-12)
    if lead < 0:
        unit = [-x for x in unit]
    return SmallVector(unit)
