from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .._compat import popcount
from ..model.matrix import BinaryMatrix, WildcardMatrix
from ..model.types import DenseDiagonal, DenseValues, PartialRow, RowMask
from ..util import vector_to_int


class PartialBinaryMatrix:
    """n×k binary matrix whose rows may be null (not filled yet). A null row
    is different from the all-zero row."""

    __slots__ = ("k", "_rows")

    def __init__(self, k: int, rows: Iterable[PartialRow]) -> None:
        self.k = k
        self._rows: List[PartialRow] = list(rows)
        for row in self._rows:
            if row is not None and (row < 0 or row >> k):
                raise ValueError(f"Row {row} does not fit into {k} columns")

    @classmethod
    def null(cls, n: int, k: int) -> "PartialBinaryMatrix":
        return cls(k, [None] * n)

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[PartialRow, ...]:
        return tuple(self._rows)

    def row(self, i: int) -> PartialRow:
        return self._rows[i]

    def is_null(self, i: int) -> bool:
        return self._rows[i] is None

    def set_row(self, i: int, row: Union[RowMask, Sequence[int]]) -> None:
        mask = row if isinstance(row, int) else vector_to_int(row)
        if mask < 0 or mask >> self.k:
            raise ValueError(f"Row {mask} does not fit into {self.k} columns")
        self._rows[i] = mask

    def filled(self) -> List[int]:
        return [i for i, row in enumerate(self._rows) if row is not None]

    def copy(self) -> "PartialBinaryMatrix":
        return PartialBinaryMatrix(self.k, self._rows)

    def to_binary_matrix(self) -> BinaryMatrix:
        if any(row is None for row in self._rows):
            raise ValueError("Cannot convert a matrix with null rows to a binary matrix")
        return BinaryMatrix.from_row_masks(self._rows, self.k)  # type: ignore

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialBinaryMatrix):
            return NotImplemented
        return self.k == other.k and self._rows == other._rows

    def __repr__(self) -> str:
        return f"PartialBinaryMatrix(k={self.k}, rows={self._rows})"


@lru_cache(maxsize=None)
def vector_order(k: int, ones: Optional[int] = None) -> Tuple[RowMask, ...]:
    """Vectors of {0,1}^k in lexicographic order, optionally only those with
    the given number of ones."""
    vectors = range(1 << k)
    if ones is None:
        return tuple(vectors)
    return tuple(v for v in vectors if popcount(v) == ones)


def is_compatible(
    v: RowMask,
    i: int,
    rows: Sequence[PartialRow],
    values: DenseValues,
    diagonal: DenseDiagonal,
) -> bool:
    target = diagonal[i]
    if target is not None and popcount(v) != target:
        return False
    row_values = values[i]
    for j, other in enumerate(rows):
        if other is not None and j != i and popcount(v & other) != row_values[j]:
            return False
    return True


def first_compatible(
    i: int,
    rows: Sequence[PartialRow],
    values: DenseValues,
    diagonal: DenseDiagonal,
    k: int,
) -> Optional[RowMask]:
    """The lexicographically first i-compatible vector, if any."""
    row_values = values[i]
    filled = [
        (other, row_values[j])
        for j, other in enumerate(rows)
        if other is not None and j != i
    ]
    for v in vector_order(k, diagonal[i]):
        for other, target in filled:
            if popcount(v & other) != target:
                break
        else:
            return v
    return None


def extend_rows(
    rows: Sequence[PartialRow],
    values: DenseValues,
    diagonal: DenseDiagonal,
    k: int,
) -> Tuple[List[PartialRow], int]:
    """Fill the null rows in increasing order with their first compatible
    vector. Returns the filled rows and the index of the first row that could
    not be filled, or len(rows) if every row was filled."""
    filled = list(rows)
    for i, row in enumerate(filled):
        if row is not None:
            continue
        v = first_compatible(i, filled, values, diagonal, k)
        if v is None:
            return filled, i
        filled[i] = v
    return filled, len(filled)


def i_compatible(
    v: Union[RowMask, Sequence[int]],
    i: int,
    B: PartialBinaryMatrix,
    A: WildcardMatrix,
) -> bool:
    """v is i-compatible for B if v·v ≜ A[i, i] and v·B[j] = A[i, j] for every
    non-null row j ≠ i of B."""
    mask = v if isinstance(v, int) else vector_to_int(v)
    values, diagonal = A.to_lists()
    return is_compatible(mask, i, B.rows, values, diagonal)


def extend_basis(
    A: WildcardMatrix, B: PartialBinaryMatrix
) -> Tuple[PartialBinaryMatrix, int]:
    """Try to complete B greedily: each null row, in increasing order, gets
    the first i-compatible vector in lexicographic order. B itself is left
    unchanged.

    RETURNS (Tuple[PartialBinaryMatrix, int]):
        The (partially) filled matrix and the first row that could not be
        filled, or n when every row was filled.
    """
    if B.n != A.n:
        raise ValueError(
            f"Dimension mismatch: partial matrix has {B.n} rows, matrix has dimension {A.n}"
        )
    values, diagonal = A.to_lists()
    rows, i = extend_rows(B.rows, values, diagonal, B.k)
    return PartialBinaryMatrix(B.k, rows), i
