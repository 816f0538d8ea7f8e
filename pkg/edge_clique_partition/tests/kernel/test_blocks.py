import numpy
import pytest

from edge_clique_partition.kernel import are_twins, compute_blocks
from edge_clique_partition.kernel.rules import is_block_uniform
from edge_clique_partition.model import WildcardMatrix, awecp_to_bsddw

from ..util import complete_instance


def test_complete_graph_is_one_block():
    A, _ = awecp_to_bsddw(complete_instance(5, 1))
    blocks = compute_blocks(A)
    assert blocks.sizes() == [5]
    assert is_block_uniform(A, blocks)


def test_star_has_singleton_blocks(star3):
    A, _ = awecp_to_bsddw(star3)
    blocks = compute_blocks(A)
    assert len(blocks) == 4
    assert not are_twins(A, 1, 2)


def test_twins_need_matching_weight():
    # Only the rows outside the pair itself have to agree.
    A = WildcardMatrix.from_rows([["*", 2, 1], [2, "*", 1], [1, 1, "*"]])
    assert are_twins(A, 0, 1)
    assert not are_twins(A, 0, 2)
    assert compute_blocks(A).sizes() == [2, 1]


def test_annotated_diagonal_must_match():
    A = WildcardMatrix.from_rows([[2, 1], [1, "*"]])
    assert not are_twins(A, 0, 1)
    A = WildcardMatrix.from_rows([[1, 1], [1, "*"]])
    assert are_twins(A, 0, 1)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_blocks_partition_vertices(n):
    A, _ = awecp_to_bsddw(complete_instance(n, 1, weight=2))
    blocks = compute_blocks(A)
    assert sorted(v for block in blocks for v in block) == list(range(n))
    assert blocks.block_index() == {v: 0 for v in range(n)}


def test_g2_blocks(g2):
    A, _ = awecp_to_bsddw(g2.instance)
    blocks = compute_blocks(A)
    # The four vertices outside the independent set are twins.
    assert sorted(blocks.sizes()) == [1, 1, 1, 4]


def random_typed_matrix(seed: int) -> WildcardMatrix:
    # Vertices of one type share rows, then one
    # symmetric pair of entries is overwritten at random.
    rng = numpy.random.default_rng(seed)
    n = int(rng.integers(2, 9))
    base = rng.integers(0, 3, size=(3, 3))
    base = numpy.triu(base) + numpy.triu(base, 1).T
    types = rng.integers(0, 3, size=n)
    values = base[numpy.ix_(types, types)].astype(numpy.int64)
    u, v = rng.choice(n, size=2, replace=False)
    values[u, v] = values[v, u] = int(rng.integers(0, 3))
    wildcard = rng.random(n) < 0.5
    for x in numpy.flatnonzero(~wildcard):
        if rng.random() < 0.3:
            values[x, x] = int(rng.integers(0, 3))
    return WildcardMatrix(values, wildcard)


@pytest.mark.parametrize("seed", range(50))
def test_blocks_are_twin_classes(seed):
    A = random_typed_matrix(seed)
    index = compute_blocks(A).block_index()
    assert sorted(index) == list(range(A.n))
    for u in range(A.n):
        for v in range(u + 1, A.n):
            assert (index[u] == index[v]) == are_twins(A, u, v), (u, v)
