from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import numpy

from ..model.matrix import WildcardMatrix
from ..model.types import Vertex
from ..util import logger
from .blocks import BlockPartition


class Verdict(Enum):
    CONTINUE = "continue"
    REDUCED = "reduced"
    NO = "no"


@dataclass(frozen=True)
class PreprocessResult:
    """Matrix without removable isolated vertices.

    matrix (WildcardMatrix):
        The remaining matrix.
    k (int):
        Unchanged budget.
    kept (Tuple[int, ...]):
        For each remaining vertex, its id in the input matrix.
    removed (Tuple[int, ...]):
        Input vertices whose solution row is forced to all-zeros.
    """

    matrix: WildcardMatrix
    k: int
    kept: Tuple[Vertex, ...]
    removed: Tuple[Vertex, ...]


def preprocess(A: WildcardMatrix, k: int) -> PreprocessResult:
    """Remove isolated vertices whose diagonal is a wildcard or 0. Isolated
    vertices with a positive vertex weight c are kept, they need c singleton
    cliques."""
    kept: List[Vertex] = []
    removed: List[Vertex] = []
    for v in range(A.n):
        if A.is_isolated(v) and (A.wildcard[v] or A.values[v, v] == 0):
            removed.append(v)
        else:
            kept.append(v)
    if removed:
        logger.debug("Removed %d isolated vertices", len(removed))
    return PreprocessResult(A.submatrix(kept), k, tuple(kept), tuple(removed))


def apply_rule1(blocks: BlockPartition, k: int) -> Verdict:
    """A YES instance without isolated vertices has at most 2^k blocks."""
    if len(blocks) > 2**k:
        return Verdict.NO
    return Verdict.CONTINUE


def apply_rule2(
    A: WildcardMatrix, blocks: BlockPartition, k: int
) -> Tuple[WildcardMatrix, Tuple[Vertex, ...]]:
    """Collapse every block with more than 2^k vertices to its lowest vertex v.
    The diagonal of v is set to the common off-diagonal value of the block,
    all other entries are copied.

    RETURNS (Tuple[WildcardMatrix, Tuple[int, ...]]):
        The reduced matrix and, for every vertex of A, the id of the vertex
        representing it in the reduced matrix.
    """
    if len(blocks) > 2**k:
        raise ValueError(
            f"Reduction rule 2 requires at most 2^k = {2**k} blocks, got {len(blocks)}. "
            "Apply rule 1 first"
        )

    representative: Dict[Vertex, Vertex] = {v: v for v in range(A.n)}
    diagonal_updates: Dict[Vertex, int] = {}
    for block in blocks:
        if len(block) <= 2**k:
            continue
        v, u = sorted(block)[:2]
        diagonal_updates[v] = int(A.values[u, v])
        for x in block:
            representative[x] = v
        logger.debug("Collapsed a block of %d twins onto vertex %d", len(block), v)

    survivors = sorted(set(representative.values()))
    new_id = {v: index for index, v in enumerate(survivors)}
    reduced = A.submatrix(survivors)
    if diagonal_updates:
        values = reduced.values.copy()
        wildcard = reduced.wildcard.copy()
        for v, alpha in diagonal_updates.items():
            values[new_id[v], new_id[v]] = alpha
            wildcard[new_id[v]] = False
        reduced = WildcardMatrix(values, wildcard)

    lift_map = tuple(new_id[representative[x]] for x in range(A.n))
    return reduced, lift_map


def is_block_uniform(A: WildcardMatrix, blocks: BlockPartition) -> bool:
    """All non-wildcard entries of A restricted to each block are equal."""
    for members in blocks:
        index = sorted(members)
        if len(index) < 2:
            continue
        sub = A.values[numpy.ix_(index, index)]
        mask = numpy.ones_like(sub, dtype=bool)
        wildcard = A.wildcard[index]
        mask[numpy.arange(len(index))[wildcard], numpy.arange(len(index))[wildcard]] = False
        if len(numpy.unique(sub[mask])) > 1:
            return False
    return True
