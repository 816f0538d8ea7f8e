import math
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy

from .._compat import popcount
from ..model.matrix import BinaryMatrix
from ..model.types import RowMask

MatrixLike = Union[BinaryMatrix, numpy.ndarray, Sequence[Sequence[int]]]


def _as_array(M: MatrixLike) -> numpy.ndarray:
    if isinstance(M, BinaryMatrix):
        return M.entries.astype(numpy.int64)
    return numpy.asarray(M, dtype=numpy.int64)


def is_w_limited(M: MatrixLike, w: int) -> bool:
    """A binary matrix is w-limited if every pair of distinct rows has a dot
    product of at most w."""
    entries = _as_array(M)
    if entries.shape[0] < 2:
        return True
    gram = entries @ entries.T
    numpy.fill_diagonal(gram, 0)
    return bool(gram.max() <= w)


def zarankiewicz_bound(k: int, w: int) -> int:
    """⌊k^{3/2}·w^{1/2}⌋ + k, computed with integer arithmetic. No w-limited
    k×k matrix has more ones."""
    _check_dimensions(k, w)
    return math.isqrt(k**3 * w) + k


def zarankiewicz_cap(k: int, w: int) -> int:
    """⌈k^{3/2}·w^{1/2}⌉ + k, the ones cap used to prune the enumeration."""
    _check_dimensions(k, w)
    root = math.isqrt(k**3 * w)
    if root * root < k**3 * w:
        root += 1
    return root + k


def w_limited_count_bound(k: int, w: int) -> float:
    """Upper bound (2e·√(k/w))^{k^{3/2}w^{1/2}+k} on the number of w-limited
    k×k binary matrices."""
    _check_dimensions(k, w)
    exponent = k**1.5 * w**0.5 + k
    return (2 * math.e * math.sqrt(k / w)) ** exponent


def _check_dimensions(k: int, w: int) -> None:
    if k < 1:
        raise ValueError(f"Matrix dimension k must be at least 1, got {k}")
    if w < 1:
        raise ValueError(f"Dot product limit w must be at least 1, got {w}")


def w_limited_rows(
    k: int,
    w: int,
    ones_cap: Optional[int] = None,
    prefix: Sequence[RowMask] = (),
) -> Iterator[Tuple[RowMask, ...]]:
    """Enumerate w-limited k×k matrices as tuples of row masks, in
    lexicographic row-major order, starting with the given prefix rows.
    Partial matrices are rejected as soon as two rows exceed dot product w
    or the number of ones exceeds `ones_cap`."""
    cap = k * k if ones_cap is None else ones_cap
    rows: List[RowMask] = list(prefix)
    ones = sum(popcount(row) for row in rows)
    if ones > cap or any(popcount(a & b) > w for a, b in combinations(rows, 2)):
        return
    candidates = range(1 << k)

    def extend(ones: int) -> Iterator[Tuple[RowMask, ...]]:
        if len(rows) == k:
            yield tuple(rows)
            return
        for row in candidates:
            row_ones = popcount(row)
            if ones + row_ones > cap:
                continue
            if any(popcount(row & other) > w for other in rows):
                continue
            rows.append(row)
            yield from extend(ones + row_ones)
            rows.pop()

    yield from extend(ones)


def enumerate_w_limited(
    k: int, w: int, ones_cap: Optional[int] = None
) -> Iterator[BinaryMatrix]:
    """Stream every w-limited k×k binary matrix with at most `ones_cap` ones
    exactly once, in lexicographic row-major order."""
    _check_dimensions(k, w)
    for rows in w_limited_rows(k, w, ones_cap):
        yield BinaryMatrix.from_row_masks(rows, k)
