"""Line-based text formats for instances, solutions and kernel mappings.

Instance files::

    # comment
    p awecp <n> <m> <k>
    e <u> <v> <weight>        (exactly m lines)
    a <u> <vertex weight>     (annotated vertices)

Solution files hold `s awecp <count>` followed by `count` lines
`c <v1> <v2> ...`, or the single line `s awecp NO`. Kernel mappings hold one
line `m <original> <kernel>` per original vertex, kernel vertex 0 marks a
removed isolated vertex. All vertex ids are 1-based.
"""
import sys
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

import numpy

from .kernel import KernelLift
from .model.instance import AwecpInstance, CliquePartition

PathLike = Union[str, Path]

PROBLEM_NAME = "awecp"


class InstanceFormatError(ValueError):
    """Malformed instance, solution or mapping file. `line` is the 1-based
    number of the offending line, if known."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def read_text(path: PathLike) -> str:
    """Read a file, "-" reads standard input."""
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf8")


def write_text(path: PathLike, text: str) -> None:
    """Write a file, "-" writes to standard output."""
    if str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf8")


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _ints(fields: List[str], number: int) -> List[int]:
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise InstanceFormatError(f"expected integers, got '{' '.join(fields)}'", number)


def _vertex(value: int, n: int, number: int) -> int:
    if not 1 <= value <= n:
        raise InstanceFormatError(f"vertex {value} is out of range 1..{n}", number)
    return value - 1


def parse_instance(text: str) -> AwecpInstance:
    """Parse an instance file. Vertex ids are converted to 0-based ids."""
    header: Optional[Tuple[int, int, int]] = None
    edges: Dict[Tuple[int, int], int] = {}
    annotated: Dict[int, int] = {}
    for number, fields in _lines(text):
        kind, rest = fields[0], fields[1:]
        if kind == "p":
            if header is not None:
                raise InstanceFormatError("duplicate problem line", number)
            if len(rest) != 4 or rest[0] != PROBLEM_NAME:
                raise InstanceFormatError(
                    f"problem line must be 'p {PROBLEM_NAME} <n> <m> <k>'", number
                )
            n, m, k = _ints(rest[1:], number)
            if n < 0 or m < 0 or k < 0:
                raise InstanceFormatError("n, m and k must be non-negative", number)
            header = (n, m, k)
            continue
        if header is None:
            raise InstanceFormatError("problem line must come before other lines", number)
        n = header[0]
        if kind == "e":
            if len(rest) != 3:
                raise InstanceFormatError("edge line must be 'e <u> <v> <weight>'", number)
            u, v, weight = _ints(rest, number)
            u, v = _vertex(u, n, number), _vertex(v, n, number)
            if u == v:
                raise InstanceFormatError(f"self-loop at vertex {u + 1}", number)
            if weight < 1:
                raise InstanceFormatError(f"edge weight must be positive, got {weight}", number)
            key = (min(u, v), max(u, v))
            if key in edges:
                raise InstanceFormatError(
                    f"duplicate edge {key[0] + 1}-{key[1] + 1}", number
                )
            edges[key] = weight
        elif kind == "a":
            if len(rest) != 2:
                raise InstanceFormatError("annotation line must be 'a <u> <weight>'", number)
            u, weight = _ints(rest, number)
            u = _vertex(u, n, number)
            if weight < 0:
                raise InstanceFormatError(
                    f"vertex weight must be non-negative, got {weight}", number
                )
            if u in annotated:
                raise InstanceFormatError(f"duplicate annotation of vertex {u + 1}", number)
            annotated[u] = weight
        else:
            raise InstanceFormatError(f"unknown line type '{kind}'", number)

    if header is None:
        raise InstanceFormatError("missing problem line 'p awecp <n> <m> <k>'")
    n, m, k = header
    if len(edges) != m:
        raise InstanceFormatError(
            f"problem line announces {m} edges, but the file has {len(edges)}"
        )
    return AwecpInstance(
        n, tuple((u, v, w) for (u, v), w in edges.items()), annotated, k
    )


def format_instance(inst: AwecpInstance, comments: Optional[List[str]] = None) -> str:
    lines = [f"# {comment}" for comment in comments or []]
    lines.append(f"p {PROBLEM_NAME} {inst.vertex_count} {inst.edge_count} {inst.k}")
    lines.extend(f"e {u + 1} {v + 1} {w}" for u, v, w in inst.edges)
    lines.extend(f"a {v + 1} {w}" for v, w in inst.annotated.items())
    return "\n".join(lines) + "\n"


def read_instance(path: PathLike) -> AwecpInstance:
    return parse_instance(read_text(path))


def parse_solution(text: str) -> Optional[CliquePartition]:
    """Parse a solution file. Returns None for `s awecp NO`."""
    count: Optional[int] = None
    no = False
    cliques: List[List[int]] = []
    for number, fields in _lines(text):
        kind, rest = fields[0], fields[1:]
        if kind == "s":
            if count is not None or no:
                raise InstanceFormatError("duplicate solution line", number)
            if len(rest) != 2 or rest[0] != PROBLEM_NAME:
                raise InstanceFormatError(
                    f"solution line must be 's {PROBLEM_NAME} <count>' or 's {PROBLEM_NAME} NO'",
                    number,
                )
            if rest[1] == "NO":
                no = True
            else:
                (count,) = _ints(rest[1:], number)
                if count < 0:
                    raise InstanceFormatError("clique count must be non-negative", number)
        elif kind == "c":
            if count is None:
                raise InstanceFormatError("clique line without a preceding solution line", number)
            if not rest:
                raise InstanceFormatError("empty clique line", number)
            vertices = _ints(rest, number)
            if any(v < 1 for v in vertices):
                raise InstanceFormatError("vertex ids must be positive", number)
            repeated = sorted({v for v in vertices if vertices.count(v) > 1})
            if repeated:
                raise InstanceFormatError(
                    f"vertex {repeated[0]} is repeated in a clique line", number
                )
            cliques.append([v - 1 for v in vertices])
        else:
            raise InstanceFormatError(f"unknown line type '{kind}'", number)

    if no:
        if cliques:
            raise InstanceFormatError("a NO solution cannot list cliques")
        return None
    if count is None:
        raise InstanceFormatError(f"missing solution line 's {PROBLEM_NAME} <count>'")
    if len(cliques) != count:
        raise InstanceFormatError(
            f"solution line announces {count} cliques, but the file has {len(cliques)}"
        )
    return CliquePartition(cliques)


def format_solution(sol: Optional[CliquePartition]) -> str:
    if sol is None:
        return f"s {PROBLEM_NAME} NO\n"
    lines = [f"s {PROBLEM_NAME} {len(sol)}"]
    lines.extend(
        "c " + " ".join(str(v + 1) for v in clique) for clique in sol.sorted_cliques()
    )
    return "\n".join(lines) + "\n"


def read_solution(path: PathLike) -> Optional[CliquePartition]:
    return parse_solution(read_text(path))


def format_mapping(lift: KernelLift) -> str:
    return "".join(
        f"m {x + 1} {0 if target is None else target + 1}\n"
        for x, target in enumerate(lift.lift_map)
    )


def parse_mapping(text: str) -> KernelLift:
    """Parse a kernel mapping. The kernel size is the largest kernel vertex
    that occurs, every original vertex needs exactly one line."""
    targets: Dict[int, Optional[int]] = {}
    for number, fields in _lines(text):
        if fields[0] != "m" or len(fields) != 3:
            raise InstanceFormatError("mapping line must be 'm <original> <kernel>'", number)
        original, kernel = _ints(fields[1:], number)
        if original < 1 or kernel < 0:
            raise InstanceFormatError("invalid vertex id in mapping line", number)
        if original - 1 in targets:
            raise InstanceFormatError(f"duplicate mapping of vertex {original}", number)
        targets[original - 1] = None if kernel == 0 else kernel - 1
    n = len(targets)
    if sorted(targets) != list(range(n)):
        raise InstanceFormatError(f"mapping does not cover the vertices 1..{n}")
    lift_map = tuple(targets[x] for x in range(n))
    kernel_n = max((t + 1 for t in lift_map if t is not None), default=0)
    return KernelLift(n, kernel_n, lift_map)


def format_incidence(incidence: numpy.ndarray, comments: Optional[List[str]] = None) -> str:
    """Binary matrix as rows of space-separated 0/1 entries."""
    lines = [f"# {comment}" for comment in comments or []]
    lines.extend(" ".join(str(int(x)) for x in row) for row in incidence)
    return "\n".join(lines) + "\n"
