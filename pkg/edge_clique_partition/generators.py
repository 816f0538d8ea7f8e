from itertools import combinations
from typing import Dict, Optional, Tuple

import networkx
import numpy

from .model.instance import AwecpInstance, CliquePartition


def random_instance(
    n: int,
    p: float,
    max_weight: int,
    k: int,
    seed: int,
    *,
    annotate_p: float = 0.0,
) -> AwecpInstance:
    """G(n, p) random graph with edge weights drawn uniformly from
    1..max_weight. Every vertex is annotated with probability `annotate_p`,
    with a vertex weight drawn from 1..max_weight. The same seed gives the
    same instance."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must be in [0, 1], got {p}")
    if not 0.0 <= annotate_p <= 1.0:
        raise ValueError(f"Annotation probability must be in [0, 1], got {annotate_p}")
    if max_weight < 1:
        raise ValueError(f"Maximum weight must be at least 1, got {max_weight}")
    graph = networkx.gnp_random_graph(n, p, seed=seed)
    rng = numpy.random.default_rng(seed)
    edges = tuple(
        (u, v, int(rng.integers(1, max_weight + 1))) for u, v in sorted(graph.edges())
    )
    annotated = {
        v: int(rng.integers(1, max_weight + 1))
        for v in range(n)
        if rng.random() < annotate_p
    }
    return AwecpInstance(n, edges, annotated, k)


def planted_instance(
    n: int,
    cliques: int,
    max_size: int,
    seed: int,
    *,
    k: Optional[int] = None,
    annotate_p: float = 0.0,
) -> Tuple[AwecpInstance, CliquePartition]:
    """Sum of `cliques` random cliques of 1..max_size vertices each. Edge
    weights count how often a pair is covered and annotated vertices get
    their membership count as vertex weight, so the planted cliques solve
    the instance for any k ≥ `cliques` (the default k)."""
    if n < 1:
        raise ValueError(f"Number of vertices must be at least 1, got {n}")
    if not 1 <= max_size <= n:
        raise ValueError(f"Clique size must be in 1..{n}, got {max_size}")
    rng = numpy.random.default_rng(seed)
    planted = []
    for _ in range(cliques):
        size = int(rng.integers(1, max_size + 1))
        planted.append(sorted(rng.choice(n, size=size, replace=False).tolist()))

    weights: Dict[Tuple[int, int], int] = {}
    memberships = [0] * n
    for clique in planted:
        for v in clique:
            memberships[v] += 1
        for u, v in combinations(clique, 2):
            weights[(u, v)] = weights.get((u, v), 0) + 1
    annotated = {v: memberships[v] for v in range(n) if rng.random() < annotate_p}
    edges = tuple((u, v, w) for (u, v), w in sorted(weights.items()))
    inst = AwecpInstance(n, edges, annotated, cliques if k is None else k)
    return inst, CliquePartition(planted)


def blowup_instance(
    inst: AwecpInstance, t: int, *, twin_weight: Optional[int] = None
) -> AwecpInstance:
    """Replace every vertex v by t copies. Copies of u and v are joined with
    the weight of uv, and the copies of v are joined among each other with
    `twin_weight`, by default v's vertex weight if v is annotated and its
    largest incident edge weight (at least 1) otherwise. Annotations are
    copied. Copies of vertex v are the vertices v·t .. v·t+t-1."""
    if t < 1:
        raise ValueError(f"Blow-up factor must be at least 1, got {t}")
    largest = [0] * inst.vertex_count
    for u, v, w in inst.edges:
        largest[u] = max(largest[u], w)
        largest[v] = max(largest[v], w)

    edges = []
    for v in range(inst.vertex_count):
        weight = twin_weight
        if weight is None:
            weight = inst.annotated.get(v, max(largest[v], 1))
        if weight > 0:
            edges.extend(
                (v * t + i, v * t + j, weight) for i, j in combinations(range(t), 2)
            )
    for u, v, w in inst.edges:
        edges.extend((u * t + i, v * t + j, w) for i in range(t) for j in range(t))
    annotated = {
        v * t + i: weight for v, weight in inst.annotated.items() for i in range(t)
    }
    return AwecpInstance(inst.vertex_count * t, tuple(edges), annotated, inst.k)
