from .brute_force import (
    ORACLE_GUARD,
    OracleGuardError,
    build_oracle_solver_v1,
    oracle_count,
    oracle_solve,
    solve_with_oracle,
)
from .counting import COUNT_GUARD, count_w_limited
