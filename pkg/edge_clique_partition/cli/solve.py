from pathlib import Path
from typing import Any, Dict, Optional

from typer import Argument as Arg
from typer import Option as Opt
from wasabi import Printer

from ..formats import format_solution, read_instance, write_text
from ..model.verify import find_awecp_violation
from ..solver.fpt import load_solver
from ._util import EXIT_ERROR, app, echo_stats, exit_with_verdict, import_code, show_errors


@app.command("solve")
def solve_cli(
    # fmt: off
    instance_path: Path = Arg(..., help="Path to the instance file or '-' for stdin", exists=True, allow_dash=True, dir_okay=False),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the solution file or '-' for stdout", allow_dash=True, dir_okay=False),
    config_path: Optional[Path] = Opt(None, "--config", "-c", help="Path to a config file with a [solver] block", exists=True, dir_okay=False),
    code_path: Optional[Path] = Opt(None, "--code-path", "--code", help="Path to Python file with additional code (registered solvers) to be imported"),
    deterministic: Optional[bool] = Opt(None, "--deterministic/--nondeterministic", help="Return the same solution for any number of threads (default: deterministic)"),
    threads: Optional[int] = Opt(None, "--threads", "-t", envvar="WECP_THREADS", min=1, help="Number of worker processes (default: 1)"),
    no_kernel: bool = Opt(False, "--no-kernel", help="Search on the full instance instead of its kernel"),
    stats: bool = Opt(False, "--stats", help="Print solver statistics to stderr as key=value lines"),
    # fmt: on
):
    """
    Solve an AWECP instance. Writes the clique partition, or 's awecp NO' and
    exits with code 1 when there is none.
    """
    import_code(code_path)
    overrides: Dict[str, Any] = {}
    if deterministic is not None:
        overrides["solver.deterministic"] = deterministic
    if threads is not None:
        overrides["solver.threads"] = threads
    if no_kernel:
        overrides["solver.use_kernel"] = False
    is_yes = solve(
        instance_path,
        output_path,
        config_path=config_path,
        overrides=overrides,
        show_stats=stats,
    )
    exit_with_verdict(is_yes)


def solve(
    instance_path: Path,
    output_path: Path,
    *,
    config_path: Optional[Path] = None,
    overrides: Optional[Dict[str, Any]] = None,
    show_stats: bool = False,
) -> bool:
    msg = Printer()
    with show_errors(msg):
        inst = read_instance(instance_path)
        solver = load_solver(config_path, overrides)
        result = solver(inst)
    if result.partition is not None:
        violation = find_awecp_violation(inst, result.partition)
        if violation is not None:
            msg.fail("Solver returned an invalid solution", violation, exits=EXIT_ERROR)
    with show_errors(msg):
        write_text(output_path, format_solution(result.partition))
    if show_stats:
        echo_stats(result.stats)
    return result.is_yes
