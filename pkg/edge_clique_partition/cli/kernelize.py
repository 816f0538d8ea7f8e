from pathlib import Path
from typing import Optional

import typer
from typer import Argument as Arg
from typer import Option as Opt
from wasabi import Printer

from ..formats import format_instance, format_mapping, format_solution, read_instance, write_text
from ..kernel import Verdict, kernelize
from ..model.equivalence import awecp_to_bsddw, bsddw_to_awecp
from ._util import app, exit_with_verdict, show_errors


@app.command("kernelize")
def kernelize_cli(
    # fmt: off
    instance_path: Path = Arg(..., help="Path to the instance file or '-' for stdin", exists=True, allow_dash=True, dir_okay=False),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the kernel instance file or '-' for stdout", allow_dash=True, dir_okay=False),
    mapping_path: Optional[Path] = Opt(None, "--mapping", "-m", help="Path to the vertex mapping (default: <output>.map, or stderr when writing to stdout)", dir_okay=False),
    # fmt: on
):
    """
    Compute the 4^k-vertex kernel of an instance. Annotated vertices of the
    kernel carry the diagonals set by the block reduction. Writes
    's awecp NO' and exits with code 1 when the kernelization proves that
    there is no solution.
    """
    exit_with_verdict(kernelize_instance(instance_path, output_path, mapping_path))


def kernelize_instance(
    instance_path: Path, output_path: Path, mapping_path: Optional[Path] = None
) -> bool:
    msg = Printer()
    with show_errors(msg):
        inst = read_instance(instance_path)
        A, k = awecp_to_bsddw(inst)
        result = kernelize(A, k)
        if result.verdict is Verdict.NO:
            write_text(output_path, format_solution(None))
            return False
        assert result.kernel is not None and result.lift is not None
        kernel_inst = bsddw_to_awecp(result.kernel, k)
        comment = (
            f"kernel of an instance with {inst.vertex_count} vertices, "
            f"{result.block_count} twin blocks"
        )
        write_text(output_path, format_instance(kernel_inst, comments=[comment]))
        mapping = format_mapping(result.lift)
        if mapping_path is None and str(output_path) != "-":
            mapping_path = Path(f"{output_path}.map")
        if mapping_path is None:
            typer.echo(mapping, err=True, nl=False)
        else:
            write_text(mapping_path, mapping)
    return True
