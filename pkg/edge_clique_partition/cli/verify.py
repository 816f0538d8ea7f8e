from pathlib import Path

import typer
from typer import Argument as Arg
from wasabi import Printer

from ..formats import read_instance, read_solution
from ..model.verify import find_awecp_violation
from ._util import EXIT_NO, app, show_errors


@app.command("verify")
def verify_cli(
    # fmt: off
    instance_path: Path = Arg(..., help="Path to the instance file", exists=True, dir_okay=False),
    solution_path: Path = Arg(..., help="Path to the solution file or '-' for stdin", exists=True, allow_dash=True, dir_okay=False),
    # fmt: on
):
    """
    Check a solution against an instance. Exits with code 1 and names the
    first violated constraint if the solution is invalid.
    """
    if not verify(instance_path, solution_path):
        raise typer.Exit(code=EXIT_NO)


def verify(instance_path: Path, solution_path: Path) -> bool:
    msg = Printer()
    with show_errors(msg):
        inst = read_instance(instance_path)
        sol = read_solution(solution_path)
        if sol is None:
            msg.warn("Solution file claims that there is no solution, nothing to verify")
            return False
        violation = find_awecp_violation(inst, sol)
    if violation is not None:
        msg.fail("Invalid solution", violation)
        return False
    msg.good(f"Valid solution with {len(sol)} cliques (budget {inst.k})")
    return True
