from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

import numpy

from ..model.instance import AwecpInstance, CliquePartition
from ..model.types import Vertex
from ..model.verify import find_awecp_violation
from .plane import FppPlane


@dataclass(frozen=True)
class GnInstance:
    """The split graph G_N: a clique over N²+N+1 vertices minus the clique
    over the independent set I of the first N+1 vertices. The budget is
    N²+N.

    order (int):
        N.
    instance (AwecpInstance):
        The unweighted instance, without annotated vertices.
    independent (Tuple[int, ...]):
        The vertices of I.
    """

    order: int
    instance: AwecpInstance
    independent: Tuple[Vertex, ...]

    @property
    def vertex_count(self) -> int:
        return self.instance.vertex_count

    @property
    def k(self) -> int:
        return self.instance.k


def gen_gn(N: int) -> GnInstance:
    """Build G_N. The construction does not need N to be a prime power; for
    other orders no partition into N²+N cliques is expected."""
    if N < 2:
        raise ValueError(f"Order N must be at least 2, got {N}")
    n = N * N + N + 1
    independent = tuple(range(N + 1))
    edges = tuple(
        (u, v, 1) for u, v in combinations(range(n), 2) if v > N
    )
    return GnInstance(N, AwecpInstance(n, edges, {}, N * N + N), independent)


def fpp_to_partition(plane: FppPlane, line_index_for_I: int = 0) -> CliquePartition:
    """Turn a plane into a partition of G_N into N²+N cliques. The points of
    the chosen line become the independent set 0..N, the remaining points
    become the vertices N+1.. in order, and every other line becomes a
    clique."""
    lines = plane.lines()
    if not 0 <= line_index_for_I < len(lines):
        raise ValueError(
            f"Line index {line_index_for_I} is out of range for a plane with "
            f"{len(lines)} lines"
        )
    special = sorted(lines[line_index_for_I])
    others = [x for x in range(plane.incidence.shape[0]) if x not in lines[line_index_for_I]]
    relabel = {point: vertex for vertex, point in enumerate(special + others)}
    return CliquePartition(
        [relabel[point] for point in line]
        for index, line in enumerate(lines)
        if index != line_index_for_I
    )


def partition_to_fpp(sol: CliquePartition, inst: GnInstance) -> FppPlane:
    """Turn a partition of G_N into at most N²+N cliques into a plane of order
    N: the sets are the cliques together with I.

    sol (CliquePartition):
        A solution of `inst.instance`.
    inst (GnInstance):
        The G_N instance.
    RETURNS (FppPlane):
        The plane over the vertices of G_N, with the cliques as its first
        lines and I as its last line.
    """
    violation = find_awecp_violation(inst.instance, sol)
    if violation is not None:
        raise ValueError(f"Partition is not a solution of G_{inst.order}: {violation}")
    sets = list(sol) + [frozenset(inst.independent)]
    n = inst.vertex_count
    incidence = numpy.zeros((n, len(sets)), dtype=numpy.uint8)
    for j, members in enumerate(sets):
        incidence[sorted(members), j] = 1
    plane = FppPlane(inst.order, incidence)
    plane.validate()
    return plane
