from .basis import PartialBinaryMatrix, extend_basis, i_compatible
from .enumeration import (
    enumerate_w_limited,
    is_w_limited,
    w_limited_count_bound,
    zarankiewicz_bound,
    zarankiewicz_cap,
)
from .fpt import (
    DEFAULT_CONFIG,
    DEFAULT_CONFIG_STR,
    BasisSearch,
    SolverOptions,
    build_fpt_solver_v1,
    early_no,
    effective_budget,
    load_solver,
    solve_bsddw,
    solve_wecp,
    trivial_solution,
)
from .result import BsdResult, SolverStats, WecpResult
