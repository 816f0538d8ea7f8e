import csv
import io
from concurrent.futures import TimeoutError
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import srsly
from pebble import ProcessExpired, ProcessPool
from typer import Argument as Arg
from typer import Option as Opt
from wasabi import Printer

from ..formats import read_instance, write_text
from ..model.instance import AwecpInstance
from ..oracle import solve_with_oracle
from ..solver.fpt import SolverOptions, solve_wecp
from ..solver.result import SolverStats, WecpResult
from ..util import logger
from ._util import EXIT_ERROR, app, show_errors

BENCH_COLUMNS = [
    "instance",
    "solver",
    "n",
    "m",
    "k",
    "w",
    "kernel_n",
    "candidates",
    "wall_time",
    "verdict",
]

BENCH_SOLVERS: Dict[str, Callable[[AwecpInstance], WecpResult]] = {
    "kernel+fpt": lambda inst: solve_wecp(inst, SolverOptions(use_kernel=True)),
    "fpt": lambda inst: solve_wecp(inst, SolverOptions(use_kernel=False)),
    "oracle": solve_with_oracle,
}


@app.command("bench")
def bench_cli(
    # fmt: off
    corpus_dir: Path = Arg(..., help="Directory with instance files", exists=True, file_okay=False),
    output_path: Path = Opt("-", "--output", "-o", help="Path to the CSV report or '-' for stdout", allow_dash=True, dir_okay=False),
    solvers: str = Opt("kernel+fpt,oracle", "--solvers", help=f"Comma-separated solvers to run, out of: {', '.join(BENCH_SOLVERS)}"),
    timeout: Optional[float] = Opt(None, "--timeout", help="Seconds per instance and solver; slower runs are reported as TIMEOUT"),
    pattern: str = Opt("*.awecp", "--glob", help="Pattern of the instance files in the corpus directory"),
    jsonl_path: Optional[Path] = Opt(None, "--jsonl", help="Also write the report as JSON lines to this path", dir_okay=False),
    # fmt: on
):
    """
    Run solvers over a corpus of instances and write a CSV report with the
    columns instance, solver, n, m, k, w, kernel_n, candidates, wall_time and
    verdict (YES, NO, TIMEOUT or ERROR).
    """
    msg = Printer()
    names = [name.strip() for name in solvers.split(",") if name.strip()]
    unknown = [name for name in names if name not in BENCH_SOLVERS]
    if unknown:
        msg.fail(
            f"Unknown solvers: {', '.join(unknown)}",
            f"Available: {', '.join(BENCH_SOLVERS)}",
            exits=EXIT_ERROR,
        )
    with show_errors(msg):
        rows = bench(corpus_dir, names, pattern=pattern, timeout=timeout)
        write_text(output_path, format_report(rows))
        if jsonl_path is not None:
            srsly.write_jsonl(jsonl_path, rows)


def _solve(name: str, inst: AwecpInstance) -> Tuple[str, Any, Optional[SolverStats]]:
    try:
        result = BENCH_SOLVERS[name](inst)
    except Exception as e:
        return ("error", str(e), None)
    return ("ok", result.is_yes, result.stats)


def _run_with_timeout(
    pool: Optional[ProcessPool], name: str, inst: AwecpInstance, timeout: Optional[float]
) -> Tuple[str, Any, Optional[SolverStats]]:
    if pool is None:
        return _solve(name, inst)
    future = pool.schedule(_solve, args=(name, inst), timeout=timeout)
    try:
        return future.result()
    except TimeoutError:
        return ("timeout", None, None)
    except ProcessExpired as e:
        return ("error", f"solver process exited with code {e.exitcode}", None)


def bench(
    corpus_dir: Path,
    solvers: List[str],
    *,
    pattern: str = "*.awecp",
    timeout: Optional[float] = None,
) -> List[Dict[str, Any]]:
    """Run every solver on every instance of the corpus, in file name
    order. With a timeout, the runs happen in a worker process that is
    terminated and replaced when a run exceeds it."""
    pool = None if timeout is None else ProcessPool(max_workers=1)
    try:
        return _bench(corpus_dir, solvers, pattern, timeout, pool)
    finally:
        if pool is not None:
            pool.stop()
            pool.join()


def _bench(
    corpus_dir: Path,
    solvers: List[str],
    pattern: str,
    timeout: Optional[float],
    pool: Optional[ProcessPool],
) -> List[Dict[str, Any]]:
    rows = []
    for path in sorted(Path(corpus_dir).glob(pattern)):
        if not path.is_file():
            continue
        inst = read_instance(path)
        for name in solvers:
            status, payload, stats = _run_with_timeout(pool, name, inst, timeout)
            row: Dict[str, Any] = {
                "instance": path.name,
                "solver": name,
                "n": inst.vertex_count,
                "m": inst.edge_count,
                "k": inst.k,
                "w": inst.max_weight(),
                "kernel_n": None,
                "candidates": None,
                "wall_time": None,
                "verdict": status.upper(),
            }
            if status == "ok":
                assert stats is not None
                row.update(
                    kernel_n=stats.kernel_n,
                    candidates=stats.candidates,
                    wall_time=round(stats.wall_time, 6),
                    verdict="YES" if payload else "NO",
                )
            elif status == "error":
                logger.warning("%s failed on %s: %s", name, path.name, payload)
            rows.append(row)
    return rows


def format_report(rows: List[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if row[key] is None else row[key] for key in BENCH_COLUMNS})
    return buffer.getvalue()
