from itertools import combinations, product

from .._compat import popcount
from .brute_force import OracleGuardError

# Largest k for which all 2^{k²} matrices are enumerated.
COUNT_GUARD = 4


def count_w_limited(k: int, w: int, *, guard: int = COUNT_GUARD) -> int:
    """Count the w-limited k×k binary matrices by checking all 2^{k²} of
    them. Rows are compared pairwise, so the order of rows matters and
    matrices with identical rows count separately."""
    if k < 0 or w < 0:
        raise ValueError(f"k and w must be non-negative, got k={k}, w={w}")
    if k > guard:
        raise OracleGuardError(f"oracle guard exceeded: k = {k} > {guard}")
    count = 0
    for rows in product(range(1 << k), repeat=k):
        if all(popcount(a & b) <= w for a, b in combinations(rows, 2)):
            count += 1
    return count
