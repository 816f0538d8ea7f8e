from typing import FrozenSet, Optional, Sequence, Tuple

# Vertices are 0-based internally and 1-based in the text formats.
Vertex = int

# (u, v, weight) with u < v.
WeightedEdge = Tuple[Vertex, Vertex, int]

# Clique as a set of vertices.
Clique = FrozenSet[Vertex]

# A {0,1}^k row packed into an int, column 0 being the most significant bit.
RowMask = int

# Row of a partially filled matrix; None is a null (unfilled) row, which
# is different from the all-zero row 0.
PartialRow = Optional[RowMask]

# Dense view of a wildcard matrix for the search loops: off-diagonal values
# per row and the diagonal, None standing for a wildcard.
DenseValues = Sequence[Sequence[int]]
DenseDiagonal = Sequence[Optional[int]]
