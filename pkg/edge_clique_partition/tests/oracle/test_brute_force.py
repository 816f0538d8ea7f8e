import pytest

from edge_clique_partition.model import (
    AwecpInstance,
    WildcardMatrix,
    verify_awecp,
    verify_bsd,
)
from edge_clique_partition.oracle import (
    ORACLE_GUARD,
    OracleGuardError,
    oracle_count,
    oracle_solve,
    solve_with_oracle,
)

SINGLE_EDGE = WildcardMatrix.from_rows([["*", 1], [1, "*"]])


def test_triangle(triangle_matrix):
    B = oracle_solve(triangle_matrix, 1)
    assert B is not None
    assert verify_bsd(triangle_matrix, B, 1)


def test_path(path_matrix):
    assert oracle_solve(path_matrix, 1) is None
    B = oracle_solve(path_matrix, 2)
    assert verify_bsd(path_matrix, B, 2)


def test_weighted_and_annotated():
    A = WildcardMatrix.from_rows([[3, 2, 0], [2, "*", 1], [0, 1, 1]])
    B = oracle_solve(A, 4)
    assert B is not None
    assert verify_bsd(A, B, 4)
    assert oracle_solve(A, 3) is None


def test_zero_vertex_weight():
    A = WildcardMatrix.from_rows([[0, 1], [1, "*"]])
    assert oracle_solve(A, 3) is None


def test_fano_split_graph_below_budget(g2):
    inst = g2.instance.with_budget(5)
    assert solve_with_oracle(inst).partition is None


@pytest.mark.slow
def test_fano_split_graph(g2):
    result = solve_with_oracle(g2.instance)
    assert verify_awecp(g2.instance, result.partition)
    assert result.stats.path == "oracle"


def test_guard():
    A = WildcardMatrix.from_rows([["*"]])
    assert oracle_solve(A, ORACLE_GUARD) is not None
    big = WildcardMatrix.from_rows(
        [["*" if i == j else 1 for j in range(7)] for i in range(7)]
    )
    with pytest.raises(OracleGuardError, match="oracle guard exceeded"):
        oracle_solve(big, 7)
    with pytest.raises(OracleGuardError):
        oracle_count(big, 7)
    assert oracle_solve(big, 7, guard=None) is not None


def test_negative_budget(triangle_matrix):
    with pytest.raises(ValueError):
        oracle_solve(triangle_matrix, -1)


@pytest.mark.parametrize(
    "A, k, expected",
    [
        (SINGLE_EDGE, 1, 1),
        (SINGLE_EDGE, 2, 3),
        (WildcardMatrix.from_rows([["*", 1, 0], [1, "*", 1], [0, 1, "*"]]), 1, 0),
        (WildcardMatrix.from_rows([["*", 1, 1], [1, "*", 1], [1, 1, "*"]]), 1, 1),
        (WildcardMatrix.from_rows([[1, 1], [1, 1]]), 2, 1),
        (WildcardMatrix.from_rows([[0, 0], [0, 0]]), 2, 1),
    ],
)
def test_count(A, k, expected):
    assert oracle_count(A, k) == expected


def test_solve_with_oracle(triangle, path3):
    assert len(solve_with_oracle(triangle).partition) == 1
    assert solve_with_oracle(path3).partition is None
    inst = AwecpInstance(3, ((0, 1, 1),), {2: 2}, 3)
    result = solve_with_oracle(inst)
    assert verify_awecp(inst, result.partition)
    assert result.is_yes
