from .basis_ones import BasisOnesReport, basis_ones, rational_rank
from .field import (
    GaloisField,
    find_irreducible,
    gf_arith,
    is_prime,
    prime_power_decomposition,
)
from .plane import FppPlane, gen_fpp, projective_points
from .split_graph import GnInstance, fpp_to_partition, gen_gn, partition_to_fpp
