from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple

import networkx

from .types import Clique, Vertex, WeightedEdge


@dataclass(frozen=True)
class AwecpInstance:
    """Annotated Weighted Edge Clique Partition instance.

    vertex_count (int):
        Number of vertices, labelled 0..vertex_count-1.
    edges (Tuple[WeightedEdge, ...]):
        Edges (u, v, weight) with positive weights. They are normalized to
        u < v and sorted on construction.
    annotated (Mapping[int, int]):
        The annotated vertex set W with its vertex weights.
    k (int):
        Maximum number of cliques.
    """

    vertex_count: int
    edges: Tuple[WeightedEdge, ...]
    annotated: Mapping[Vertex, int] = field(default_factory=dict)
    k: int = 0

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(
                f"Vertex count must be non-negative, got {self.vertex_count}"
            )
        if self.k < 0:
            raise ValueError(f"Clique budget k must be non-negative, got {self.k}")

        normalized: Dict[Tuple[int, int], int] = {}
        for u, v, weight in self.edges:
            self._check_vertex(u)
            self._check_vertex(v)
            if u == v:
                raise ValueError(f"Self-loops are not allowed, found one at vertex {u}")
            if weight < 1:
                raise ValueError(
                    f"Edge weights must be positive, edge ({u}, {v}) has weight {weight}"
                )
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise ValueError(f"Duplicate edge ({key[0]}, {key[1]})")
            normalized[key] = int(weight)

        for v, weight in self.annotated.items():
            self._check_vertex(v)
            if weight < 0:
                raise ValueError(
                    f"Vertex weights must be non-negative, vertex {v} has weight {weight}"
                )

        object.__setattr__(
            self,
            "edges",
            tuple((u, v, w) for (u, v), w in sorted(normalized.items())),
        )
        object.__setattr__(
            self,
            "annotated",
            {int(v): int(w) for v, w in sorted(self.annotated.items())},
        )

    def __hash__(self) -> int:
        return hash(
            (self.vertex_count, self.edges, tuple(self.annotated.items()), self.k)
        )

    def _check_vertex(self, v: Vertex) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(
                f"Vertex {v} is out of range for an instance with {self.vertex_count} vertices"
            )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_weights(self) -> Dict[Tuple[Vertex, Vertex], int]:
        return {(u, v): w for u, v, w in self.edges}

    def max_weight(self) -> int:
        weights = [w for _, _, w in self.edges] + list(self.annotated.values())
        return max(weights, default=0)

    def with_budget(self, k: int) -> "AwecpInstance":
        return AwecpInstance(self.vertex_count, self.edges, self.annotated, k)

    def to_networkx(self) -> networkx.Graph:
        """Graph view with `weight` edge attributes and a `vertex_weight`
        node attribute on annotated vertices."""
        graph = networkx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_weighted_edges_from(self.edges)
        networkx.set_node_attributes(graph, dict(self.annotated), "vertex_weight")
        return graph

    @classmethod
    def from_networkx(
        cls, graph: networkx.Graph, k: int, *, default_weight: int = 1
    ) -> "AwecpInstance":
        """Build an instance from a graph whose nodes are relabelled to
        0..n-1 in sorted order. Missing edge weights default to `default_weight`."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [
            (index[u], index[v], int(data.get("weight", default_weight)))
            for u, v, data in graph.edges(data=True)
        ]
        annotated = {
            index[node]: int(weight)
            for node, weight in graph.nodes(data="vertex_weight")
            if weight is not None
        }
        return cls(len(nodes), tuple(edges), annotated, k)


@dataclass(frozen=True, init=False)
class CliquePartition:
    """Ordered list of cliques. Singleton cliques are allowed, they are used
    to cover the vertex weights of annotated vertices."""

    cliques: Tuple[Clique, ...]

    def __init__(self, cliques: Iterable[Iterable[Vertex]] = ()) -> None:
        object.__setattr__(
            self, "cliques", tuple(frozenset(int(v) for v in c) for c in cliques)
        )

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[Clique]:
        return iter(self.cliques)

    def __getitem__(self, index: int) -> Clique:
        return self.cliques[index]

    def vertices(self) -> FrozenSet[Vertex]:
        return frozenset(v for clique in self.cliques for v in clique)

    def sorted_cliques(self) -> List[List[Vertex]]:
        return [sorted(clique) for clique in self.cliques]
