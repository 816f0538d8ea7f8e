from itertools import combinations
from typing import Optional

import numpy

from .equivalence import awecp_to_bsddw, cliques_to_matrix
from .instance import AwecpInstance, CliquePartition
from .matrix import BinaryMatrix, WildcardMatrix


def verify_bsd(A: WildcardMatrix, B: BinaryMatrix, k: int) -> bool:
    """Return True iff B has at most k columns and B·Bᵀ ≜ A."""
    if B.rows != A.n:
        raise ValueError(
            f"Dimension mismatch: decomposition has {B.rows} rows, matrix has dimension {A.n}"
        )
    if B.cols > k:
        return False
    gram = B.gram()
    agrees = gram == A.values
    # Wildcard diagonal entries match anything.
    diagonal = numpy.arange(A.n)
    agrees[diagonal[A.wildcard], diagonal[A.wildcard]] = True
    return bool(agrees.all())


def find_awecp_violation(inst: AwecpInstance, sol: CliquePartition) -> Optional[str]:
    """Return a description of the first violated AWECP constraint, or None
    if the clique partition is a solution. Vertices in messages are 1-based."""
    for clique in sol:
        for v in clique:
            if not 0 <= v < inst.vertex_count:
                raise ValueError(
                    f"Solution mentions vertex {v + 1}, but the instance has "
                    f"{inst.vertex_count} vertices"
                )

    if len(sol) > inst.k:
        return f"budget exceeded: {len(sol)} cliques for a budget of {inst.k}"

    weights = inst.edge_weights()
    coverage = {}
    for index, clique in enumerate(sol):
        for u, v in combinations(sorted(clique), 2):
            if (u, v) not in weights:
                return (
                    f"clique {index + 1} is not a clique: vertices {u + 1} and {v + 1} "
                    "are not adjacent"
                )
            coverage[(u, v)] = coverage.get((u, v), 0) + 1

    for (u, v), weight in weights.items():
        covered = coverage.get((u, v), 0)
        if covered != weight:
            kind = "under-covered" if covered < weight else "over-covered"
            return (
                f"edge {u + 1}-{v + 1} is {kind}: it appears in {covered} cliques, "
                f"its weight is {weight}"
            )

    for v, weight in inst.annotated.items():
        count = sum(1 for clique in sol if v in clique)
        if count != weight:
            return (
                f"vertex {v + 1} appears in {count} cliques, its vertex weight is {weight}"
            )

    return None


def verify_awecp(inst: AwecpInstance, sol: CliquePartition) -> bool:
    """Return True iff the cliques cover every edge exactly weight-many times,
    every annotated vertex exactly vertex-weight-many times, and there are at
    most k of them."""
    return find_awecp_violation(inst, sol) is None


def verify_awecp_via_bsd(inst: AwecpInstance, sol: CliquePartition) -> bool:
    """The same check as `verify_awecp`, performed on the mapped BSD-DW
    objects."""
    A, k = awecp_to_bsddw(inst)
    if len(sol) > k:
        return False
    return verify_bsd(A, cliques_to_matrix(sol, inst.vertex_count, k), k)
