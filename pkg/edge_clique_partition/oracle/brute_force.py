import time
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator, List, Optional, Set, Tuple

import numpy

from ..model.equivalence import awecp_to_bsddw, matrix_to_cliques
from ..model.instance import AwecpInstance
from ..model.matrix import BinaryMatrix, WildcardMatrix
from ..solver.result import SolverStats, WecpResult
from ..util import registry

# Largest n·k the oracle accepts by default.
ORACLE_GUARD = 42


class OracleGuardError(ValueError):
    pass


def _check_guard(A: WildcardMatrix, k: int, guard: Optional[int]) -> None:
    if k < 0:
        raise ValueError(f"Budget k must be non-negative, got {k}")
    if guard is not None and A.n * k > guard:
        raise OracleGuardError(
            f"oracle guard exceeded: n·k = {A.n}·{k} = {A.n * k} > {guard}"
        )


class _SlotSearch:
    """Backtracking over edge slots. Edges are processed in order and every
    edge (u, v) of weight c is placed into exactly c cliques: existing cliques
    that do not contain both endpoints yet, or new cliques that are opened at
    the end of the clique list. Vertex weights are enforced as upper bounds
    during the search; the remaining deficit is filled with singletons."""

    def __init__(self, A: WildcardMatrix, k: int) -> None:
        self.n = A.n
        self.k = k
        self.values, self.diagonal = A.to_lists()
        self.edges: List[Tuple[int, int, int]] = [
            (u, v, self.values[u][v])
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.values[u][v] > 0
        ]
        self.cliques: List[List[int]] = []
        self.cover = [[0] * self.n for _ in range(self.n)]
        self.count = [0] * self.n

    def deficits(self) -> List[Tuple[int, int]]:
        """(vertex, missing memberships) for every annotated vertex."""
        return [
            (x, target - self.count[x])
            for x, target in enumerate(self.diagonal)
            if target is not None and target > self.count[x]
        ]

    def _can_add(self, x: int, j: int) -> bool:
        target = self.diagonal[x]
        if target is not None and self.count[x] >= target:
            return False
        cover_x, values_x = self.cover[x], self.values[x]
        return all(cover_x[y] < values_x[y] for y in self.cliques[j])

    def _add(self, x: int, j: int) -> None:
        for y in self.cliques[j]:
            self.cover[x][y] += 1
            self.cover[y][x] += 1
        self.cliques[j].append(x)
        self.count[x] += 1

    def _remove_last(self, j: int) -> None:
        x = self.cliques[j].pop()
        for y in self.cliques[j]:
            self.cover[x][y] -= 1
            self.cover[y][x] -= 1
        self.count[x] -= 1

    def _join(self, u: int, v: int, j: int, trail: List[int]) -> bool:
        members = self.cliques[j]
        for x in (u, v):
            if x in members:
                continue
            if not self._can_add(x, j):
                return False
            self._add(x, j)
            trail.append(j)
        return True

    def search(self, index: int = 0) -> Iterator[None]:
        """Yield once for every consistent placement of all edge slots; the
        placement is the current state at the time of the yield."""
        if index == len(self.edges):
            yield
            return
        u, v, weight = self.edges[index]
        need = weight - self.cover[u][v]
        if need == 0:
            yield from self.search(index + 1)
            return
        eligible = [
            j for j, members in enumerate(self.cliques) if not (u in members and v in members)
        ]
        room = self.k - len(self.cliques)
        for reused in range(min(need, len(eligible)), -1, -1):
            fresh = need - reused
            if fresh > room:
                break
            for chosen in combinations(eligible, reused):
                trail: List[int] = []
                opened = 0
                ok = all(self._join(u, v, j, trail) for j in chosen)
                while ok and opened < fresh:
                    self.cliques.append([])
                    opened += 1
                    ok = self._join(u, v, len(self.cliques) - 1, trail)
                if ok:
                    yield from self.search(index + 1)
                for j in reversed(trail):
                    self._remove_last(j)
                del self.cliques[len(self.cliques) - opened :]


def _columns(cliques: List[List[int]], n: int) -> List[Tuple[int, ...]]:
    columns = []
    for clique in cliques:
        column = [0] * n
        for x in clique:
            column[x] = 1
        columns.append(tuple(column))
    return columns


def _singleton(x: int, n: int) -> Tuple[int, ...]:
    column = [0] * n
    column[x] = 1
    return tuple(column)


def _to_matrix(columns: List[Tuple[int, ...]], n: int, k: int) -> BinaryMatrix:
    entries = numpy.zeros((n, k), dtype=numpy.uint8)
    for j, column in enumerate(columns):
        entries[:, j] = column
    return BinaryMatrix(entries)


def oracle_solve(
    A: WildcardMatrix, k: int, *, guard: Optional[int] = ORACLE_GUARD
) -> Optional[BinaryMatrix]:
    """Decide BSD-DW by exhaustive search. Meant as ground truth for small
    instances only.

    A (WildcardMatrix):
        The matrix to decompose.
    k (int):
        Number of columns.
    guard (Optional[int]):
        Largest accepted n·k. None disables the guard.
    RETURNS (Optional[BinaryMatrix]):
        An n×k matrix B with B·Bᵀ ≜ A, or None if there is none.
    """
    _check_guard(A, k, guard)
    search = _SlotSearch(A, k)
    for _ in search.search():
        deficits = search.deficits()
        if sum(d for _, d in deficits) > k - len(search.cliques):
            continue
        columns = _columns(search.cliques, A.n)
        for x, d in deficits:
            columns.extend([_singleton(x, A.n)] * d)
        return _to_matrix(columns, A.n, k)
    return None


def oracle_count(A: WildcardMatrix, k: int, *, guard: Optional[int] = ORACLE_GUARD) -> int:
    """Number of rank-k BSDs of A up to a permutation of the columns. Unused
    columns may be empty or a singleton of a vertex with a wildcard
    diagonal, so these choices are counted as distinct solutions."""
    _check_guard(A, k, guard)
    n = A.n
    free_choices = [tuple([0] * n)] + [
        _singleton(x, n) for x, target in enumerate(A.diagonal()) if target is None
    ]
    seen: Set[Tuple[Tuple[int, ...], ...]] = set()
    search = _SlotSearch(A, k)
    for _ in search.search():
        deficits = search.deficits()
        free = k - len(search.cliques) - sum(d for _, d in deficits)
        if free < 0:
            continue
        columns = _columns(search.cliques, n)
        for x, d in deficits:
            columns.extend([_singleton(x, n)] * d)
        for extra in combinations_with_replacement(free_choices, free):
            seen.add(tuple(sorted(columns + list(extra))))
    return len(seen)


def solve_with_oracle(
    inst: AwecpInstance, *, guard: Optional[int] = ORACLE_GUARD
) -> WecpResult:
    """Solve an AWECP instance with the oracle."""
    start = time.perf_counter()
    A, k = awecp_to_bsddw(inst)
    B = oracle_solve(A, k, guard=guard)
    stats = SolverStats(wall_time=time.perf_counter() - start, path="oracle")
    return WecpResult(None if B is None else matrix_to_cliques(B), stats)


@registry.solvers("edge-clique-partition.OracleSolver.v1")
def build_oracle_solver_v1(
    guard: Optional[int] = ORACLE_GUARD,
) -> Callable[[AwecpInstance], WecpResult]:
    """Construct the brute-force oracle as an AWECP solver.

    guard (Optional[int]):
        Largest accepted n·k, None to disable the guard.
    """

    def solve(inst: AwecpInstance) -> WecpResult:
        return solve_with_oracle(inst, guard=guard)

    return solve
