from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy

from .basis_ones import rational_rank
from .field import GaloisField, gf_arith, prime_power_decomposition

Point = Tuple[int, int, int]


def projective_points(field: GaloisField) -> List[Point]:
    """Representatives of the points of PG(2, q): non-zero triples whose
    first non-zero coordinate is 1, in lexicographic order."""
    q = field.order
    points: List[Point] = [(0, 0, 1)]
    points.extend((0, 1, z) for z in range(q))
    points.extend((1, y, z) for y in range(q) for z in range(q))
    return points


def _dot(field: GaloisField, a: Point, b: Point) -> int:
    total = 0
    for x, y in zip(a, b):
        total = field.add(total, field.mul(x, y))
    return total


@dataclass(frozen=True, eq=False)
class FppPlane:
    """A finite projective plane of order N, given by its incidence matrix.
    Rows are the elements (points), columns are the sets (lines)."""

    order: int
    incidence: numpy.ndarray

    def __post_init__(self):
        incidence = numpy.array(self.incidence, dtype=numpy.uint8)
        if incidence.ndim != 2:
            raise ValueError(f"Incidence matrix must be 2D, got shape {incidence.shape}")
        incidence.flags.writeable = False
        object.__setattr__(self, "incidence", incidence)

    @property
    def size(self) -> int:
        """N²+N+1, the number of points and the number of lines."""
        return self.order**2 + self.order + 1

    def lines(self) -> List[FrozenSet[int]]:
        return [
            frozenset(numpy.flatnonzero(column).tolist()) for column in self.incidence.T
        ]

    def line_through(self) -> Dict[Tuple[int, int], int]:
        """Maps every pair of points (a < b) to the index of a line containing
        both."""
        lookup = {}
        for index, line in enumerate(self.lines()):
            for a, b in combinations(sorted(line), 2):
                lookup.setdefault((a, b), index)
        return lookup

    def find_quadrangle(self) -> Optional[Tuple[int, int, int, int]]:
        """Four points of which no three lie on a common line, if any."""
        lines = self.lines()
        lookup = self.line_through()
        n = self.incidence.shape[0]

        def collinear(a: int, b: int, c: int) -> bool:
            index = lookup.get((min(a, b), max(a, b)))
            return index is not None and c in lines[index]

        for a, b in combinations(range(n), 2):
            for c in range(b + 1, n):
                if collinear(a, b, c):
                    continue
                for d in range(c + 1, n):
                    if not (
                        collinear(a, b, d) or collinear(a, c, d) or collinear(b, c, d)
                    ):
                        return a, b, c, d
        return None

    def check_axioms(self) -> List[str]:
        """Describe every violated plane property. An empty list means the
        incidence matrix is a projective plane of the given order."""
        F = self.incidence.astype(numpy.int64)
        size = self.size
        if F.shape != (size, size):
            return [f"incidence matrix has shape {F.shape}, expected {(size, size)}"]
        problems = []
        if not numpy.isin(F, (0, 1)).all():
            problems.append("incidence matrix is not binary")
        if (F.sum(axis=0) != self.order + 1).any():
            problems.append(f"not every line has {self.order + 1} points")
        if (F.sum(axis=1) != self.order + 1).any():
            problems.append(f"not every point lies on {self.order + 1} lines")
        off_diagonal = ~numpy.eye(size, dtype=bool)
        if ((F @ F.T)[off_diagonal] != 1).any():
            problems.append("some pair of points does not lie on exactly one line")
        if ((F.T @ F)[off_diagonal] != 1).any():
            problems.append("some pair of lines does not meet in exactly one point")
        if not problems and self.find_quadrangle() is None:
            problems.append("there are no four points without three on a line")
        if not problems and rational_rank(F) != size:
            problems.append("incidence matrix does not have full rank")
        return problems

    def validate(self) -> None:
        problems = self.check_axioms()
        if problems:
            raise ValueError(
                f"Not a projective plane of order {self.order}: {'; '.join(problems)}"
            )


def gen_fpp(N: int) -> FppPlane:
    """Construct the projective plane PG(2, N) over GF(N).

    N (int):
        The order of the plane, must be a prime power.
    RETURNS (FppPlane):
        The plane. Points and lines are both indexed by normalized
        homogeneous triples, a point lies on a line iff their dot product is
        zero.
    """
    decomposition = prime_power_decomposition(N)
    if decomposition is None:
        raise ValueError(f"Plane order must be a prime power, got {N}")
    field = gf_arith(*decomposition)
    points = projective_points(field)
    incidence = numpy.array(
        [[int(_dot(field, point, line) == 0) for line in points] for point in points],
        dtype=numpy.uint8,
    )
    return FppPlane(N, incidence)
