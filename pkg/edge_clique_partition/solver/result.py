from dataclasses import dataclass, field, fields
from typing import List, Optional

from ..model.instance import CliquePartition
from ..model.matrix import BinaryMatrix


@dataclass
class SolverStats:
    """Counters collected during a solve.

    candidates (int):
        Candidate basis matrices P whose basis growth ran to completion.
        Matrices that share the prefix used by the basis growth count once.
    bases_extended (int):
        Number of times a row of P was added to the basis.
    wall_time (float):
        Wall-clock seconds spent in the solver.
    kernel_n (Optional[int]):
        Number of kernel vertices, if a kernel was computed.
    block_count (Optional[int]):
        Number of twin blocks, if a kernel was computed.
    path (str):
        How the answer was obtained: "search", "trivial", "zero",
        "early-no", "kernel-no" or "oracle".
    """

    candidates: int = 0
    bases_extended: int = 0
    wall_time: float = 0.0
    kernel_n: Optional[int] = None
    block_count: Optional[int] = None
    path: str = "search"

    def as_lines(self) -> List[str]:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, float):
                value = f"{value:.6f}"
            lines.append(f"{f.name}={'' if value is None else value}")
        return lines


@dataclass
class BsdResult:
    """Rank-k BSD, or None when the matrix has no rank-k BSD."""

    decomposition: Optional[BinaryMatrix]
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def is_yes(self) -> bool:
        return self.decomposition is not None


@dataclass
class WecpResult:
    """Clique partition, or None for a NO instance."""

    partition: Optional[CliquePartition]
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def is_yes(self) -> bool:
        return self.partition is not None
