import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy

from ..model.matrix import BinaryMatrix, WildcardMatrix
from ..model.types import Vertex
from ..util import logger
from .blocks import compute_blocks
from .rules import Verdict, apply_rule1, apply_rule2, preprocess


@dataclass(frozen=True)
class KernelLift:
    """Maps a kernel solution back to the original instance.

    original_n (int):
        Number of vertices of the original matrix.
    kernel_n (int):
        Number of vertices of the kernel.
    lift_map (Tuple[Optional[int], ...]):
        For each original vertex, the kernel vertex whose row it copies, or
        None for a removed isolated vertex, whose row is all-zero.
    """

    original_n: int
    kernel_n: int
    lift_map: Tuple[Optional[Vertex], ...]

    @classmethod
    def identity(cls, n: int) -> "KernelLift":
        return cls(n, n, tuple(range(n)))


@dataclass(frozen=True)
class KernelResult:
    """Outcome of kernelization. When the verdict is NO, `kernel` and
    `lift` are None."""

    verdict: Verdict
    k: int
    kernel: Optional[WildcardMatrix]
    lift: Optional[KernelLift]
    block_count: int

    @property
    def kernel_n(self) -> Optional[int]:
        return None if self.kernel is None else self.kernel.n


def kernelize(A: WildcardMatrix, k: int) -> KernelResult:
    """Compute a kernel with at most 4^k vertices, or decide that (A, k) is
    a NO instance. Isolated vertices are removed first, then twin blocks are
    computed, reduction rule 1 is checked and reduction rule 2 collapses every
    block with more than 2^k vertices."""
    pre = preprocess(A, k)
    blocks = compute_blocks(pre.matrix)
    if apply_rule1(blocks, k) is Verdict.NO:
        logger.debug("Rule 1: %d blocks exceed 2^%d", len(blocks), k)
        return KernelResult(Verdict.NO, k, None, None, len(blocks))

    reduced, rule2_map = apply_rule2(pre.matrix, blocks, k)
    lift_map: list = [None] * A.n
    for local, original in enumerate(pre.kept):
        lift_map[original] = rule2_map[local]
    lift = KernelLift(A.n, reduced.n, tuple(lift_map))
    logger.debug("Kernel has %d of %d vertices", reduced.n, A.n)
    return KernelResult(Verdict.REDUCED, k, reduced, lift, len(blocks))


def lift_solution(B: BinaryMatrix, lift: KernelLift) -> BinaryMatrix:
    """Turn a rank-k decomposition of the kernel into one of the original
    matrix: collapsed twins copy the row of their representative and removed
    isolated vertices get an all-zero row."""
    if B.rows != lift.kernel_n:
        raise ValueError(
            f"Dimension mismatch: kernel solution has {B.rows} rows, "
            f"the kernel has {lift.kernel_n} vertices"
        )
    entries = numpy.zeros((lift.original_n, B.cols), dtype=numpy.uint8)
    for x, source in enumerate(lift.lift_map):
        if source is not None:
            entries[x] = B.entries[source]
    return BinaryMatrix(entries)


def kernel_encoding_bits(k: int) -> int:
    """Bits needed to write down a kernel: C(4^k, 2) entries, each at most k
    in a YES instance."""
    return math.comb(4**k, 2) * max(1, math.ceil(math.log2(k + 1)))
