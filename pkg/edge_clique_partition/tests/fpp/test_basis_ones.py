from edge_clique_partition.fpp import basis_ones, rational_rank
from edge_clique_partition.model import BinaryMatrix


def test_rational_rank():
    assert rational_rank([[1, 0], [0, 1]]) == 2
    assert rational_rank([[1, 1], [1, 1]]) == 1
    assert rational_rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 3
    assert rational_rank([[0, 0]]) == 0


def test_identity():
    report = basis_ones(BinaryMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3))
    assert (report.rank, report.total_ones, report.basis_ones) == (3, 3, 3)


def test_prefers_light_rows():
    B = BinaryMatrix.from_rows([[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    report = basis_ones(B)
    assert report.exact
    assert report.basis_ones == 3
    assert report.total_ones == 6


def test_lower_bound_for_large_matrices():
    B = BinaryMatrix.from_rows([[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    report = basis_ones(B, exact_limit=2)
    assert not report.exact
    assert report.basis_ones == 3


def test_zero_matrix():
    report = basis_ones(BinaryMatrix.zeros(3, 2))
    assert report.rank == 0
    assert report.basis_ones == 0
