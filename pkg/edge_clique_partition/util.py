import logging
from typing import Iterable, Tuple

import catalogue
import confection

logger = logging.getLogger("edge_clique_partition")


class registry(confection.registry):
    solvers = catalogue.create("edge_clique_partition", "solvers", entry_points=True)


def vector_to_int(bits: Iterable[int]) -> int:
    """Pack a binary vector into an integer. The first entry of the vector
    becomes the most significant bit, so that iterating integers in increasing
    order visits {0,1}^k in lexicographic order."""
    value = 0
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"Binary vectors can only contain 0 and 1, got {bit}")
        value = (value << 1) | int(bit)
    return value


def int_to_vector(value: int, width: int) -> Tuple[int, ...]:
    """Unpack an integer produced by `vector_to_int` into `width` bits."""
    if value < 0 or value >> width:
        raise ValueError(f"Value {value} does not fit into a vector of width {width}")
    return tuple((value >> (width - 1 - j)) & 1 for j in range(width))
