from ._util import app
from .bench import bench_cli
from .gen import gen_fpp_cli, gen_gn_cli, gen_planted_cli, gen_random_cli
from .kernelize import kernelize_cli
from .oracle import oracle_cli
from .solve import solve_cli
from .verify import verify_cli
