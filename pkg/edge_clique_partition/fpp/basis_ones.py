from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Union

import numpy

from ..model.matrix import BinaryMatrix

# Largest number of rows for which the minimum-ones row basis is searched
# exhaustively.
EXACT_ROW_LIMIT = 12


def rational_rank(matrix: Union[numpy.ndarray, Sequence[Sequence[int]]]) -> int:
    """Rank over the rationals, computed with exact Gaussian elimination."""
    rows: List[List[Fraction]] = [
        [Fraction(int(x)) for x in row] for row in numpy.asarray(matrix).tolist()
    ]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col] / lead[col]
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], lead)]
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class BasisOnesReport:
    """Ones in the row bases of a binary matrix.

    rank (int):
        Rank over the rationals.
    total_ones (int):
        Number of ones in the whole matrix.
    basis_ones (int):
        Minimum number of ones over all row bases when `exact` is set,
        otherwise a lower bound on it.
    exact (bool):
        Whether `basis_ones` was found by exhaustive search.
    """

    rank: int
    total_ones: int
    basis_ones: int
    exact: bool


def basis_ones(B: BinaryMatrix, *, exact_limit: int = EXACT_ROW_LIMIT) -> BasisOnesReport:
    """Measure the ones in a minimum-ones row basis of B. For at most
    `exact_limit` rows all row subsets of size rank(B) are searched, for
    larger matrices the heaviest rows - rank(B) rows are subtracted from the
    total as a lower bound."""
    entries = B.entries.astype(numpy.int64)
    rank = rational_rank(entries)
    total = B.total_ones()
    weights = entries.sum(axis=1).tolist() if B.rows else []
    if rank == 0:
        return BasisOnesReport(0, total, 0, True)

    if B.rows <= exact_limit:
        best = None
        for subset in combinations(range(B.rows), rank):
            ones = sum(weights[i] for i in subset)
            if best is not None and ones >= best:
                continue
            if rational_rank(entries[list(subset)]) == rank:
                best = ones
        assert best is not None
        return BasisOnesReport(rank, total, best, True)

    heaviest = sorted(weights, reverse=True)[: B.rows - rank]
    return BasisOnesReport(rank, total, total - sum(heaviest), False)
