import importlib.util
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer
from wasabi import Printer

from ..solver.result import SolverStats

COMMAND = "wecp"
NAME = "edge-clique-partition"
HELP = """Exact solvers for weighted edge clique partition and binary symmetric
decomposition with diagonal wildcards.

Exit codes: 0 for YES (or success), 1 for a proven NO (or a failed
verification), 2 for usage, parse and internal errors.
"""
GEN_HELP = """Generate planes, G_N instances and random instances."""

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

app = typer.Typer(name=NAME, help=HELP, no_args_is_help=True, add_completion=False)
gen_cli = typer.Typer(name="gen", help=GEN_HELP, no_args_is_help=True)
app.add_typer(gen_cli)


def import_code(code_path: Optional[Path]) -> None:
    """Import a Python file, e.g. to register additional solvers."""
    if code_path is None:
        return
    if not Path(code_path).exists():
        Printer().fail("Path to Python code not found", code_path, exits=EXIT_ERROR)
    try:
        spec = importlib.util.spec_from_file_location("python_code", str(code_path))
        assert spec is not None and spec.loader is not None
        module = importlib.util.module_from_spec(spec)
        sys.modules["python_code"] = module
        spec.loader.exec_module(module)
    except Exception as e:
        Printer().fail(f"Couldn't load Python code: {code_path}", e, exits=EXIT_ERROR)


@contextmanager
def show_errors(msg: Printer) -> Iterator[None]:
    """Report invalid input and internal errors with exit code 2."""
    try:
        yield
    except (OSError, ValueError, RuntimeError) as e:
        msg.fail(str(e), exits=EXIT_ERROR)


def echo_stats(stats: SolverStats) -> None:
    for line in stats.as_lines():
        typer.echo(line, err=True)


def exit_with_verdict(is_yes: bool) -> None:
    if not is_yes:
        raise typer.Exit(code=EXIT_NO)
