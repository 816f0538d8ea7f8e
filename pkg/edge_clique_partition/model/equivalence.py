from typing import Tuple

import numpy

from .instance import AwecpInstance, CliquePartition
from .matrix import BinaryMatrix, WildcardMatrix


def awecp_to_bsddw(inst: AwecpInstance) -> Tuple[WildcardMatrix, int]:
    """Map an AWECP instance to the equivalent BSD-DW instance (A, k).
    Off-diagonal entries are edge weights (0 for non-adjacent pairs), the
    diagonal holds vertex weights for annotated vertices and a wildcard for
    all other vertices."""
    n = inst.vertex_count
    values = numpy.zeros((n, n), dtype=numpy.int64)
    for u, v, weight in inst.edges:
        values[u, v] = weight
        values[v, u] = weight
    wildcard = numpy.ones(n, dtype=bool)
    for v, weight in inst.annotated.items():
        values[v, v] = weight
        wildcard[v] = False
    return WildcardMatrix(values, wildcard), inst.k


def bsddw_to_awecp(A: WildcardMatrix, k: int) -> AwecpInstance:
    """Inverse of `awecp_to_bsddw`."""
    values = A.values
    rows, cols = numpy.nonzero(numpy.triu(values, k=1))
    edges = tuple(
        (int(u), int(v), int(values[u, v])) for u, v in zip(rows.tolist(), cols.tolist())
    )
    annotated = {
        v: int(values[v, v]) for v in range(A.n) if not A.wildcard[v]
    }
    return AwecpInstance(A.n, edges, annotated, k)


def cliques_to_matrix(sol: CliquePartition, n: int, k: int) -> BinaryMatrix:
    """Characteristic vectors of the vertices in the cliques. Columns beyond
    the number of cliques are all-zero."""
    if len(sol) > k:
        raise ValueError(
            f"Clique partition exceeds budget: solution exceeds budget of {k} cliques "
            f"with {len(sol)} cliques"
        )
    entries = numpy.zeros((n, k), dtype=numpy.uint8)
    for j, clique in enumerate(sol):
        for v in clique:
            if not 0 <= v < n:
                raise ValueError(
                    f"Clique {j} contains vertex {v}, which is out of range for {n} vertices"
                )
            entries[v, j] = 1
    return BinaryMatrix(entries)


def matrix_to_cliques(B: BinaryMatrix) -> CliquePartition:
    """The j-th clique holds the vertices with a one in column j. All-zero
    columns are dropped."""
    return CliquePartition(clique for clique in B.column_sets() if clique)
