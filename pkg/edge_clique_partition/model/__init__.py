from .equivalence import (
    awecp_to_bsddw,
    bsddw_to_awecp,
    cliques_to_matrix,
    matrix_to_cliques,
)
from .instance import AwecpInstance, CliquePartition
from .matrix import (
    WILDCARD,
    BinaryMatrix,
    Wildcard,
    WildcardEntry,
    WildcardMatrix,
    wildcard_eq,
)
from .verify import find_awecp_violation, verify_awecp, verify_bsd
