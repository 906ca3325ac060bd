from fractions import Fraction
from typing import Iterable, List

import hypothesis.strategies as st

from app.core import SmallMatrix, SmallVector


def mat(*rows: Iterable) -> SmallMatrix:
    """Ma trận exact từ int / Fraction / chuỗi "p/q"."""
    return SmallMatrix([[Fraction(x) for x in row] for row in rows])


def fmat(*rows: Iterable) -> SmallMatrix:
    return SmallMatrix([[float(x) for x in row] for row in rows])


def vec(*values) -> SmallVector:
    return SmallVector([Fraction(x) for x in values])


def vecs(*vectors: Iterable) -> List[SmallVector]:
    return [vec(*v) for v in vectors]


# Hypothesis strategies
entries = st.fractions(min_value=-12, max_value=12, max_denominator=4)
nonzero_fractions = entries.filter(lambda x: x != 0)


def square_matrices(dim: int) -> st.SearchStrategy:
    return st.lists(st.lists(entries, min_size=dim, max_size=dim), min_size=dim, max_size=dim).map(SmallMatrix)


def vectors(dim: int) -> st.SearchStrategy:
    return st.lists(entries, min_size=dim, max_size=dim).map(SmallVector)
