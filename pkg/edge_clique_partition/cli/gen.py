from pathlib import Path
from typing import Optional

import typer
from typer import Option as Opt
from wasabi import Printer

from ..formats import format_incidence, format_instance, format_solution, write_text
from ..fpp import gen_fpp, gen_gn, prime_power_decomposition
from ..generators import planted_instance, random_instance
from ._util import gen_cli, show_errors


@gen_cli.command("fpp")
def gen_fpp_cli(
    # fmt: off
    order: int = Opt(..., "-N", "--order", help="Order of the plane, a prime power"),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the output file or '-' for stdout", allow_dash=True, dir_okay=False),
    # fmt: on
):
    """
    Write the incidence matrix of the projective plane of order N (rows are
    points, columns are lines).
    """
    msg = Printer()
    with show_errors(msg):
        plane = gen_fpp(order)
        comment = f"projective plane of order {order}: rows are points, columns are lines"
        write_text(output_path, format_incidence(plane.incidence, comments=[comment]))


@gen_cli.command("gn")
def gen_gn_cli(
    # fmt: off
    order: int = Opt(..., "-N", "--order", help="Order N, at least 2"),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the output file or '-' for stdout", allow_dash=True, dir_okay=False),
    # fmt: on
):
    """
    Write the split graph G_N with budget k = N²+N. Its independent set holds
    the vertices 1..N+1.
    """
    msg = Printer()
    if order >= 2 and prime_power_decomposition(order) is None:
        # stdout may hold the instance
        typer.echo(f"Warning: {order} is not a prime power, no plane of this order is known", err=True)
    with show_errors(msg):
        gn = gen_gn(order)
        comment = f"G_{order}: independent set 1..{order + 1}, budget N^2+N"
        write_text(output_path, format_instance(gn.instance, comments=[comment]))


@gen_cli.command("random")
def gen_random_cli(
    # fmt: off
    n: int = Opt(..., "--n", "-n", min=0, help="Number of vertices"),
    p: float = Opt(0.5, "--p", "-p", help="Edge probability"),
    max_weight: int = Opt(1, "--max-weight", "-w", min=1, help="Largest edge weight"),
    k: int = Opt(..., "--k", "-k", min=0, help="Clique budget"),
    seed: int = Opt(0, "--seed", "-s", help="Random seed"),
    annotate_p: float = Opt(0.0, "--annotate-p", help="Probability that a vertex is annotated"),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the output file or '-' for stdout", allow_dash=True, dir_okay=False),
    # fmt: on
):
    """
    Write a random weighted instance. The same seed gives the same file.
    """
    msg = Printer()
    with show_errors(msg):
        inst = random_instance(n, p, max_weight, k, seed, annotate_p=annotate_p)
        comment = f"random instance: n={n} p={p} max_weight={max_weight} seed={seed}"
        write_text(output_path, format_instance(inst, comments=[comment]))


@gen_cli.command("planted")
def gen_planted_cli(
    # fmt: off
    n: int = Opt(..., "--n", "-n", min=1, help="Number of vertices"),
    cliques: int = Opt(..., "--cliques", "-c", min=0, help="Number of planted cliques"),
    max_size: int = Opt(3, "--max-size", help="Largest planted clique"),
    k: Optional[int] = Opt(None, "--k", "-k", min=0, help="Clique budget (default: number of planted cliques)"),
    seed: int = Opt(0, "--seed", "-s", help="Random seed"),
    annotate_p: float = Opt(0.0, "--annotate-p", help="Probability that a vertex is annotated"),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the output file or '-' for stdout", allow_dash=True, dir_okay=False),
    solution_path: Optional[Path] = Opt(None, "--solution", help="Path to write the planted solution to", dir_okay=False),
    # fmt: on
):
    """
    Write the sum of random cliques, a YES instance for any budget of at least
    the number of planted cliques.
    """
    msg = Printer()
    with show_errors(msg):
        inst, planted = planted_instance(
            n, cliques, max_size, seed, k=k, annotate_p=annotate_p
        )
        comment = f"planted instance: n={n} cliques={cliques} max_size={max_size} seed={seed}"
        write_text(output_path, format_instance(inst, comments=[comment]))
        if solution_path is not None:
            write_text(solution_path, format_solution(planted))
