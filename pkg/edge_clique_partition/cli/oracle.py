from pathlib import Path

from typer import Argument as Arg
from typer import Option as Opt
from wasabi import Printer

from ..formats import format_solution, read_instance, write_text
from ..model.equivalence import awecp_to_bsddw
from ..oracle import ORACLE_GUARD, oracle_count, solve_with_oracle
from ._util import app, echo_stats, exit_with_verdict, show_errors


@app.command("oracle")
def oracle_cli(
    # fmt: off
    instance_path: Path = Arg(..., help="Path to the instance file or '-' for stdin", exists=True, allow_dash=True, dir_okay=False),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the output file or '-' for stdout", allow_dash=True, dir_okay=False),
    count: bool = Opt(False, "--count", help="Count the solutions up to column permutation instead of solving"),
    guard: int = Opt(ORACLE_GUARD, "--guard", min=0, help="Largest accepted n·k"),
    stats: bool = Opt(False, "--stats", help="Print statistics to stderr as key=value lines"),
    # fmt: on
):
    """
    Solve (or count the solutions of) a small instance by exhaustive search.
    Refuses instances with n·k above the guard.
    """
    msg = Printer()
    with show_errors(msg):
        inst = read_instance(instance_path)
        if count:
            A, k = awecp_to_bsddw(inst)
            write_text(output_path, f"{oracle_count(A, k, guard=guard)}\n")
            return
        result = solve_with_oracle(inst, guard=guard)
        write_text(output_path, format_solution(result.partition))
    if stats:
        echo_stats(result.stats)
    exit_with_verdict(result.is_yes)
