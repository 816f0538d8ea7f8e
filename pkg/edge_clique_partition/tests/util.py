import contextlib
import shutil
import tempfile
from itertools import combinations
from pathlib import Path
from typing import Optional

import networkx

from edge_clique_partition.formats import format_instance
from edge_clique_partition.model import AwecpInstance


@contextlib.contextmanager
def make_tempdir():
    d = Path(tempfile.mkdtemp())
    yield d
    shutil.rmtree(str(d))


def complete_instance(n: int, k: int, weight: int = 1) -> AwecpInstance:
    edges = tuple((u, v, weight) for u, v in combinations(range(n), 2))
    return AwecpInstance(n, edges, {}, k)


def atlas_instances(k: int):
    """Every graph on 1..5 vertices from the networkx graph atlas, as an
    unweighted instance with budget k."""
    for graph in networkx.graph_atlas_g()[1:53]:
        yield AwecpInstance.from_networkx(graph, k)


def write_instance(
    directory: Path, name: str, inst: AwecpInstance, comments: Optional[list] = None
) -> Path:
    path = directory / name
    path.write_text(format_instance(inst, comments), encoding="utf8")
    return path
