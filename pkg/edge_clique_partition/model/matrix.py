from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy

from ..util import int_to_vector, vector_to_int
from .types import Clique, RowMask


class Wildcard(Enum):
    """The diagonal wildcard. It matches any value under `wildcard_eq`."""

    STAR = "*"

    def __repr__(self) -> str:
        return "⋆"

    def __str__(self) -> str:
        return self.value


WILDCARD = Wildcard.STAR

WildcardEntry = Union[int, Wildcard]


def wildcard_eq(x: WildcardEntry, y: WildcardEntry) -> bool:
    """Wildcard equality: x and y are equal, or at least one of them is the
    wildcard. The relation is not transitive through a wildcard."""
    if x is WILDCARD or y is WILDCARD:
        return True
    return x == y


def _readonly(array: numpy.ndarray) -> numpy.ndarray:
    array.setflags(write=False)
    return array


class WildcardMatrix:
    """Symmetric non-negative integer matrix whose diagonal entries may be
    wildcards. Instances are immutable.

    values (numpy.ndarray):
        n×n integer array. Diagonal positions holding a wildcard store 0.
    wildcard (numpy.ndarray):
        Boolean array of length n, True where the diagonal entry is a wildcard.
    """

    __slots__ = ("_values", "_wildcard")

    def __init__(self, values: numpy.ndarray, wildcard: numpy.ndarray) -> None:
        values = numpy.array(values, dtype=numpy.int64, copy=True)
        if values.size == 0:
            values = values.reshape(0, 0)
        wildcard = numpy.array(wildcard, dtype=bool, copy=True).reshape(-1)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(
                f"Wildcard matrix must be square, got an array of shape {values.shape}"
            )
        n = values.shape[0]
        if wildcard.shape[0] != n:
            raise ValueError(
                f"Wildcard mask has length {wildcard.shape[0]}, but the matrix has dimension {n}"
            )
        if (values < 0).any():
            raise ValueError("Wildcard matrix entries must be non-negative integers")
        if not numpy.array_equal(values, values.T):
            raise ValueError("Wildcard matrix must be symmetric")
        diagonal = numpy.arange(n)
        values[diagonal[wildcard], diagonal[wildcard]] = 0
        self._values = _readonly(values)
        self._wildcard = _readonly(wildcard)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[WildcardEntry]]) -> "WildcardMatrix":
        """Construct a matrix from nested rows, using `WILDCARD` (or the
        string "*") for diagonal wildcards."""
        n = len(rows)
        values = numpy.zeros((n, n), dtype=numpy.int64)
        wildcard = numpy.zeros(n, dtype=bool)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(
                    f"Row {i} has {len(row)} entries, expected {n} for a square matrix"
                )
            for j, entry in enumerate(row):
                if entry is WILDCARD or entry == "*":
                    if i != j:
                        raise ValueError(
                            f"Wildcards may only occur on the diagonal, found one at ({i}, {j})"
                        )
                    wildcard[i] = True
                else:
                    values[i, j] = int(entry)  # type: ignore
        return cls(values, wildcard)

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def values(self) -> numpy.ndarray:
        """Read-only integer entries. Wildcard diagonal positions read as 0."""
        return self._values

    @property
    def wildcard(self) -> numpy.ndarray:
        """Read-only mask of wildcard diagonal entries."""
        return self._wildcard

    def entry(self, i: int, j: int) -> WildcardEntry:
        if i == j and self._wildcard[i]:
            return WILDCARD
        return int(self._values[i, j])

    def row(self, i: int) -> List[WildcardEntry]:
        return [self.entry(i, j) for j in range(self.n)]

    def diagonal(self) -> List[Optional[int]]:
        """Diagonal entries, None standing for a wildcard."""
        return [
            None if self._wildcard[i] else int(self._values[i, i])
            for i in range(self.n)
        ]

    def is_adjacent(self, u: int, v: int) -> bool:
        return u != v and self._values[u, v] > 0

    def is_isolated(self, v: int) -> bool:
        row = self._values[v].copy()
        row[v] = 0
        return not row.any()

    def max_weight(self) -> int:
        """The largest integer entry, or 0 for an all-zero/all-wildcard matrix."""
        if self.n == 0:
            return 0
        return int(self._values.max())

    def to_lists(self) -> Tuple[List[List[int]], List[Optional[int]]]:
        """Plain Python view used by the search loops."""
        return self._values.tolist(), self.diagonal()

    def submatrix(self, indices: Sequence[int]) -> "WildcardMatrix":
        index = numpy.asarray(indices, dtype=numpy.int64)
        return WildcardMatrix(
            self._values[numpy.ix_(index, index)], self._wildcard[index]
        )

    def with_diagonal(self, i: int, value: WildcardEntry) -> "WildcardMatrix":
        values = self._values.copy()
        wildcard = self._wildcard.copy()
        if value is WILDCARD:
            wildcard[i] = True
            values[i, i] = 0
        else:
            wildcard[i] = False
            values[i, i] = int(value)  # type: ignore
        return WildcardMatrix(values, wildcard)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WildcardMatrix):
            return NotImplemented
        return numpy.array_equal(self._values, other._values) and numpy.array_equal(
            self._wildcard, other._wildcard
        )

    def __hash__(self) -> int:
        return hash((self._values.tobytes(), self._wildcard.tobytes(), self.n))

    def __repr__(self) -> str:
        return f"WildcardMatrix({self.n}×{self.n})"

    def __str__(self) -> str:
        return "\n".join(
            " ".join(str(entry) for entry in self.row(i)) for i in range(self.n)
        )


class BinaryMatrix:
    """Immutable n×k matrix over {0,1}. Row u is the characteristic vector
    of vertex u in the k cliques."""

    __slots__ = ("_entries",)

    def __init__(self, entries: numpy.ndarray) -> None:
        entries = numpy.array(entries, dtype=numpy.int64, copy=True)
        if entries.ndim != 2:
            raise ValueError(
                f"Binary matrix must be two-dimensional, got shape {entries.shape}"
            )
        if not numpy.isin(entries, (0, 1)).all():
            raise ValueError("Binary matrix entries must be 0 or 1")
        self._entries = _readonly(entries.astype(numpy.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(numpy.zeros((rows, cols), dtype=numpy.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int) -> "BinaryMatrix":
        if not rows:
            return cls.zeros(0, cols)
        return cls(numpy.asarray(rows, dtype=numpy.int64).reshape(len(rows), cols))

    @classmethod
    def from_row_masks(cls, masks: Sequence[RowMask], cols: int) -> "BinaryMatrix":
        return cls.from_rows([int_to_vector(mask, cols) for mask in masks], cols)

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def entries(self) -> numpy.ndarray:
        return self._entries

    def row_masks(self) -> List[RowMask]:
        return [vector_to_int(row) for row in self._entries.tolist()]

    def gram(self) -> numpy.ndarray:
        """B·Bᵀ, the matrix of pairwise row dot products."""
        entries = self._entries.astype(numpy.int64)
        return entries @ entries.T

    def column_sets(self) -> List[Clique]:
        return [
            frozenset(int(u) for u in numpy.flatnonzero(self._entries[:, j]))
            for j in range(self.cols)
        ]

    def total_ones(self) -> int:
        return int(self._entries.sum())

    def pad_columns(self, cols: int) -> "BinaryMatrix":
        if cols < self.cols:
            raise ValueError(
                f"Cannot pad a matrix with {self.cols} columns to {cols} columns"
            )
        padding = numpy.zeros((self.rows, cols - self.cols), dtype=numpy.uint8)
        return BinaryMatrix(numpy.hstack([self._entries, padding]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return numpy.array_equal(self._entries, other._entries)

    def __hash__(self) -> int:
        return hash((self._entries.tobytes(), self._entries.shape))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}×{self.cols})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(bit) for bit in row) for row in self._entries)
