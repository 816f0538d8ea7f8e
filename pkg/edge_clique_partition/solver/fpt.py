import time
from concurrent.futures import FIRST_COMPLETED, wait
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from confection import Config
from pebble import ProcessFuture, ProcessPool

from .._compat import popcount
from ..kernel import Verdict, kernelize, lift_solution
from ..model.equivalence import awecp_to_bsddw, matrix_to_cliques
from ..model.instance import AwecpInstance
from ..model.matrix import BinaryMatrix, WildcardMatrix
from ..model.types import DenseDiagonal, DenseValues, PartialRow, RowMask
from ..model.verify import find_awecp_violation, verify_bsd
from ..util import logger, registry
from .basis import extend_rows, is_compatible
from .enumeration import zarankiewicz_cap
from .result import BsdResult, SolverStats, WecpResult

DEFAULT_CONFIG_STR = """
[solver]
@solvers = "edge-clique-partition.FptSolver.v1"
use_kernel = true
deterministic = true
threads = 1
try_trivial = true
"""

DEFAULT_CONFIG = Config().from_str(DEFAULT_CONFIG_STR)


@dataclass(frozen=True)
class SolverOptions:
    """Knobs of the FPT solver.

    deterministic (bool):
        Return the solution of the lexicographically first successful
        candidate, also when searching in parallel.
    threads (int):
        Number of worker processes. 1 searches in the calling process.
    use_kernel (bool):
        Kernelize before searching (only used by `solve_wecp`).
    try_trivial (bool):
        Check the one-clique-per-edge-unit solution before searching.
    """

    deterministic: bool = True
    threads: int = 1
    use_kernel: bool = True
    try_trivial: bool = True

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError(f"Number of threads must be at least 1, got {self.threads}")


class BasisSearch:
    """Depth-first search over the rows of the candidate basis matrix P.

    A candidate P = (P_1, ..., P_k) is consumed row by row: P_b is placed in
    the first row of B̃ that the greedy extension could not fill. Candidates
    that share a prefix share the work for that prefix, and the candidates
    are visited in lexicographic row-major order, so the first successful
    candidate is the same as in a plain enumeration of all candidates.
    """

    def __init__(
        self,
        values: DenseValues,
        diagonal: DenseDiagonal,
        k: int,
        w: int,
        ones_cap: int,
    ) -> None:
        self.values = values
        self.diagonal = diagonal
        self.n = len(values)
        self.k = k
        self.w = w
        self.ones_cap = ones_cap
        self.candidates = 0
        self.bases_extended = 0

    def run(self, first_rows: Optional[Sequence[RowMask]] = None) -> Optional[List[int]]:
        """Search the candidates whose first row is in `first_rows` (all
        candidates by default). Returns the rows of a decomposition with k
        columns, or None."""
        if self.n == 0:
            return []
        rows: List[PartialRow] = [None] * self.n
        return self._grow(rows, 0, [], [], 0, first_rows)

    def _grow(
        self,
        rows: List[PartialRow],
        i: int,
        basis: List[RowMask],
        positions: List[int],
        ones: int,
        choices: Optional[Sequence[RowMask]] = None,
    ) -> Optional[List[int]]:
        candidates = range(1 << self.k) if choices is None else choices
        last = len(basis) + 1 == self.k
        for row in candidates:
            row_ones = popcount(row)
            if ones + row_ones > self.ones_cap:
                continue
            if any(popcount(row & other) > self.w for other in basis):
                continue
            if not is_compatible(row, i, rows, self.values, self.diagonal):
                self.candidates += 1
                continue
            rows[i] = row
            self.bases_extended += 1
            if __debug__:
                self._check_basis_prefix(rows, basis + [row], positions + [i])
            filled, next_i = extend_rows(rows, self.values, self.diagonal, self.k)
            if next_i == self.n:
                self.candidates += 1
                return filled  # type: ignore
            if last:
                self.candidates += 1
            else:
                found = self._grow(
                    rows, next_i, basis + [row], positions + [i], ones + row_ones
                )
                if found is not None:
                    return found
            rows[i] = None
        return None

    @staticmethod
    def _check_basis_prefix(
        rows: Sequence[PartialRow], basis: List[RowMask], positions: List[int]
    ) -> None:
        # The non-null rows of B̃ are exactly the basis rows placed so far.
        assert [rows[p] for p in positions] == basis
        assert sum(row is not None for row in rows) == len(basis)


def _search_first_rows(
    values: DenseValues,
    diagonal: DenseDiagonal,
    k: int,
    w: int,
    ones_cap: int,
    first_rows: Sequence[RowMask],
) -> Tuple[Optional[List[int]], int, int]:
    search = BasisSearch(values, diagonal, k, w, ones_cap)
    found = search.run(first_rows)
    return found, search.candidates, search.bases_extended


def _parallel_search(
    values: DenseValues,
    diagonal: DenseDiagonal,
    k: int,
    w: int,
    ones_cap: int,
    options: SolverOptions,
    stats: SolverStats,
) -> Optional[List[int]]:
    """Partition the candidates by their first row and search the parts in
    worker processes. As soon as the answer is known the remaining parts are
    cancelled, which also terminates the workers still running them. In
    deterministic mode, the result of the first part (in enumeration order)
    that succeeds is returned."""
    first_rows = [row for row in range(1 << k) if popcount(row) <= ones_cap]
    pool = ProcessPool(max_workers=options.threads)
    futures: List[ProcessFuture] = []
    try:
        futures = [
            pool.schedule(
                _search_first_rows, args=(values, diagonal, k, w, ones_cap, (row,))
            )
            for row in first_rows
        ]
        if options.deterministic:
            return _join_in_order(futures, stats)
        return _join_first(futures, stats)
    finally:
        for future in futures:
            future.cancel()
        pool.stop()
        pool.join()


def _collect(future: ProcessFuture, stats: SolverStats) -> Optional[List[int]]:
    found, candidates, extended = future.result()
    stats.candidates += candidates
    stats.bases_extended += extended
    return found


def _join_in_order(
    futures: List[ProcessFuture], stats: SolverStats
) -> Optional[List[int]]:
    for future in futures:
        found = _collect(future, stats)
        if found is not None:
            return found
    return None


def _join_first(futures: List[ProcessFuture], stats: SolverStats) -> Optional[List[int]]:
    pending = set(futures)
    while pending:
        done, pending = wait(pending, return_when=FIRST_COMPLETED)
        for future in done:
            found = _collect(future, stats)
            if found is not None:
                return found
    return None


def early_no(A: WildcardMatrix, k: int) -> bool:
    """An entry w needs w distinct columns, so an entry larger than k proves
    that A has no rank-k BSD."""
    return A.max_weight() > k


def effective_budget(A: WildcardMatrix) -> int:
    """Upper bound on the number of non-empty columns any decomposition of A
    needs: the total edge weight plus the total vertex weight."""
    values = A.values
    off_diagonal = int(values.sum() - values.trace()) // 2
    diagonal = sum(d for d in A.diagonal() if d is not None)
    return off_diagonal + diagonal


def trivial_solution(A: WildcardMatrix, k: int) -> Optional[BinaryMatrix]:
    """One column {u, v} per unit of edge weight, plus singleton columns for
    vertices whose vertex weight exceeds their incident edge weight. Returns
    None if this does not give a rank-k BSD."""
    n = A.n
    values = A.values
    columns: List[List[int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            columns.extend([[u, v]] * int(values[u, v]))
    for v, target in enumerate(A.diagonal()):
        if target is None:
            continue
        deficit = target - (int(values[v].sum()) - int(values[v, v]))
        if deficit < 0:
            return None
        columns.extend([[v]] * deficit)
    if len(columns) > k:
        return None
    B = BinaryMatrix.zeros(n, k)
    entries = B.entries.copy()
    for j, column in enumerate(columns):
        entries[column, j] = 1
    B = BinaryMatrix(entries)
    return B if verify_bsd(A, B, k) else None


def solve_bsddw(
    A: WildcardMatrix, k: int, options: SolverOptions = SolverOptions()
) -> BsdResult:
    """Decide whether A has a rank-k BSD and return one if it does.

    A (WildcardMatrix):
        Symmetric non-negative matrix with a possibly wildcard diagonal.
    k (int):
        Number of columns of the decomposition.
    options (SolverOptions):
        Search options.
    RETURNS (BsdResult):
        An n×k binary matrix B with B·Bᵀ ≜ A, or None, together with
        solver statistics.
    """
    if k < 0:
        raise ValueError(f"Budget k must be non-negative, got {k}")
    start = time.perf_counter()
    stats = SolverStats()
    decomposition = _solve_bsddw(A, k, options, stats)
    stats.wall_time = time.perf_counter() - start
    return BsdResult(decomposition, stats)


def _solve_bsddw(
    A: WildcardMatrix, k: int, options: SolverOptions, stats: SolverStats
) -> Optional[BinaryMatrix]:
    w = A.max_weight()
    if w == 0:
        stats.path = "zero"
        return BinaryMatrix.zeros(A.n, k)
    if early_no(A, k):
        stats.path = "early-no"
        return None
    if options.try_trivial:
        trivial = trivial_solution(A, k)
        if trivial is not None:
            stats.path = "trivial"
            return trivial

    # Beyond the total weight, columns are never needed.
    k_eff = min(k, effective_budget(A))
    ones_cap = zarankiewicz_cap(k_eff, w)
    values, diagonal = A.to_lists()
    logger.debug(
        "Searching candidates: n=%d, k=%d, w=%d, ones cap=%d", A.n, k_eff, w, ones_cap
    )
    if options.threads > 1:
        rows = _parallel_search(values, diagonal, k_eff, w, ones_cap, options, stats)
    else:
        search = BasisSearch(values, diagonal, k_eff, w, ones_cap)
        rows = search.run()
        stats.candidates = search.candidates
        stats.bases_extended = search.bases_extended
    if rows is None:
        return None

    B = BinaryMatrix.from_row_masks(rows, k_eff).pad_columns(k)
    if not verify_bsd(A, B, k):
        raise RuntimeError("Internal error: the search returned an invalid decomposition")
    return B


def solve_wecp(
    inst: AwecpInstance, options: SolverOptions = SolverOptions()
) -> WecpResult:
    """Solve an AWECP instance through its BSD-DW equivalent.

    inst (AwecpInstance):
        The instance to solve.
    options (SolverOptions):
        Solver options. With `use_kernel`, the matrix is kernelized first and
        the kernel solution is lifted back.
    RETURNS (WecpResult):
        A clique partition with at most k cliques, or None.
    """
    start = time.perf_counter()
    A, k = awecp_to_bsddw(inst)
    kernel_n = block_count = None
    if options.use_kernel:
        kernel = kernelize(A, k)
        kernel_n, block_count = kernel.kernel_n, kernel.block_count
        if kernel.verdict is Verdict.NO:
            stats = SolverStats(
                wall_time=time.perf_counter() - start,
                block_count=block_count,
                path="kernel-no",
            )
            return WecpResult(None, stats)
        assert kernel.kernel is not None and kernel.lift is not None
        result = solve_bsddw(kernel.kernel, k, options)
        B = (
            None
            if result.decomposition is None
            else lift_solution(result.decomposition, kernel.lift)
        )
    else:
        result = solve_bsddw(A, k, options)
        B = result.decomposition

    stats = result.stats
    stats.kernel_n = kernel_n
    stats.block_count = block_count
    stats.wall_time = time.perf_counter() - start
    if B is None:
        return WecpResult(None, stats)

    partition = matrix_to_cliques(B)
    violation = find_awecp_violation(inst, partition)
    if violation is not None:
        raise RuntimeError(f"Internal error: lifted solution is invalid: {violation}")
    return WecpResult(partition, stats)


@registry.solvers("edge-clique-partition.FptSolver.v1")
def build_fpt_solver_v1(
    *,
    use_kernel: bool = True,
    deterministic: bool = True,
    threads: int = 1,
    try_trivial: bool = True,
) -> Callable[[AwecpInstance], WecpResult]:
    """Construct the exact FPT solver for AWECP.

    use_kernel (bool):
        Kernelize before searching.
    deterministic (bool):
        Return the same solution regardless of the number of threads.
    threads (int):
        Number of worker processes.
    try_trivial (bool):
        Try the one-clique-per-edge-unit solution first.
    """
    options = SolverOptions(
        deterministic=deterministic,
        threads=threads,
        use_kernel=use_kernel,
        try_trivial=try_trivial,
    )
    return partial(solve_wecp, options=options)


def load_solver(
    config_path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> Callable[[AwecpInstance], WecpResult]:
    """Resolve the [solver] block of a config file (or of the default config)
    into a solver callable."""
    overrides = {} if overrides is None else overrides
    if config_path is None:
        config = Config().from_str(DEFAULT_CONFIG_STR, overrides=overrides)
    else:
        config = Config().from_disk(config_path, overrides=overrides)
    if "solver" not in config:
        raise ValueError("Config does not contain a [solver] section")
    resolved = registry.resolve({"solver": config["solver"]})
    return resolved["solver"]
