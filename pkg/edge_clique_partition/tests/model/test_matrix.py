import numpy
import pytest

from edge_clique_partition.model import (
    WILDCARD,
    BinaryMatrix,
    WildcardMatrix,
    wildcard_eq,
)


@pytest.mark.parametrize(
    "x, y, expected",
    [(3, 3, True), (3, WILDCARD, True), (WILDCARD, 3, True), (3, 4, False)],
)
def test_wildcard_eq(x, y, expected):
    assert wildcard_eq(x, y) is expected


def test_wildcard_eq_is_not_transitive():
    assert wildcard_eq(3, WILDCARD) and wildcard_eq(WILDCARD, 4)
    assert not wildcard_eq(3, 4)


def test_wildcard_matrix_entries(triangle_matrix):
    assert triangle_matrix.n == 3
    assert triangle_matrix.entry(0, 0) is WILDCARD
    assert triangle_matrix.entry(0, 1) == 1
    assert triangle_matrix.diagonal() == [None, None, None]
    assert triangle_matrix.max_weight() == 1
    assert str(triangle_matrix).splitlines()[0] == "* 1 1"


def test_wildcard_matrix_is_read_only(triangle_matrix):
    with pytest.raises(ValueError):
        triangle_matrix.values[0, 1] = 5


@pytest.mark.parametrize(
    "rows",
    [
        [[0, 1], [2, 0]],
        [[0, -1], [-1, 0]],
        [["*", "*"], [1, "*"]],
        [[0, 1]],
    ],
)
def test_wildcard_matrix_rejects_invalid_rows(rows):
    with pytest.raises(ValueError):
        WildcardMatrix.from_rows(rows)


def test_max_weight_of_degenerate_matrices():
    assert WildcardMatrix.from_rows([]).max_weight() == 0
    assert WildcardMatrix.from_rows([["*", 0], [0, "*"]]).max_weight() == 0
    assert WildcardMatrix.from_rows([[3]]).max_weight() == 3


def test_with_diagonal(triangle_matrix):
    A = triangle_matrix.with_diagonal(1, 2)
    assert A.entry(1, 1) == 2
    assert A.with_diagonal(1, WILDCARD) == triangle_matrix
    assert A != triangle_matrix


def test_submatrix(path_matrix):
    sub = path_matrix.submatrix([0, 2])
    assert sub.row(0) == [WILDCARD, 0]
    assert not sub.is_adjacent(0, 1)
    assert sub.is_isolated(0)


def test_binary_matrix_rows_and_masks():
    B = BinaryMatrix.from_rows([[1, 0], [1, 1], [0, 1]], 2)
    assert B.rows == 3 and B.cols == 2
    assert B.row_masks() == [0b10, 0b11, 0b01]
    assert BinaryMatrix.from_row_masks([2, 3, 1], 2) == B
    assert B.column_sets() == [frozenset({0, 1}), frozenset({1, 2})]
    assert B.total_ones() == 4
    numpy.testing.assert_array_equal(B.gram(), [[1, 1, 0], [1, 2, 1], [0, 1, 1]])


def test_binary_matrix_padding():
    B = BinaryMatrix.from_rows([[1], [1]], 1).pad_columns(3)
    assert B.cols == 3
    assert B.column_sets()[1:] == [frozenset(), frozenset()]
    with pytest.raises(ValueError):
        B.pad_columns(2)


def test_binary_matrix_rejects_non_binary_entries():
    with pytest.raises(ValueError):
        BinaryMatrix(numpy.array([[0, 2]]))
