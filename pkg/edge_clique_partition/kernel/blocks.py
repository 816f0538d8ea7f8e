from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterator, List, Tuple

import numpy
from networkx.utils import UnionFind

from ..model.matrix import WildcardMatrix
from ..model.types import Vertex


@dataclass(frozen=True)
class BlockPartition:
    """Equivalence classes of the twin relation, singletons included,
    ordered by their smallest vertex."""

    blocks: Tuple[FrozenSet[Vertex], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[FrozenSet[Vertex]]:
        return iter(self.blocks)

    def sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def block_index(self) -> Dict[Vertex, int]:
        return {v: index for index, block in enumerate(self.blocks) for v in block}


def are_twins(A: WildcardMatrix, u: Vertex, v: Vertex) -> bool:
    """Two distinct vertices are twins if they are adjacent and their rows
    are equal up to wildcards."""
    if u == v or not A.is_adjacent(u, v):
        return False
    values, wildcard = A.values, A.wildcard
    agrees = values[u] == values[v]
    if wildcard[u]:
        agrees[u] = True
    if wildcard[v]:
        agrees[v] = True
    return bool(agrees.all())


def _twin_keys(A: WildcardMatrix, u: Vertex) -> Iterator[Hashable]:
    # Twins u, v share A[u, v] = alpha, and their rows agree everywhere once
    # each row's own diagonal entry is replaced by alpha. A non-wildcard
    # diagonal must already equal alpha.
    row = A.values[u].copy()
    row[u] = 0
    for alpha in numpy.unique(row[row > 0]).tolist():
        if not A.wildcard[u] and A.values[u, u] != alpha:
            continue
        keyed = row.copy()
        keyed[u] = alpha
        yield alpha, keyed.tobytes()


def compute_blocks(A: WildcardMatrix) -> BlockPartition:
    """Group the vertices of A into blocks of twins. Candidate groups are
    found by hashing rows, then every member is checked against the twin
    definition."""
    candidates: Dict[Hashable, List[Vertex]] = defaultdict(list)
    for u in range(A.n):
        for key in _twin_keys(A, u):
            candidates[key].append(u)

    union = UnionFind(range(A.n))
    for group in candidates.values():
        if len(group) > 1:
            union.union(*group)

    blocks = []
    for members in union.to_sets():
        block = sorted(members)
        first = block[0]
        for other in block[1:]:
            if not are_twins(A, first, other):
                raise RuntimeError(
                    f"Vertices {first} and {other} were grouped into one block, "
                    "but they are not twins"
                )
        blocks.append(frozenset(block))

    blocks.sort(key=min)
    return BlockPartition(tuple(blocks))
