"""
Testes de álgebra linear racional exata
"""

from fractions import Fraction

import pytest

from backend import linalg_exact
from backend.linalg_exact import (
    NonSymmetricMatrixError,
    SingularMatrixError,
    SparseRatMatrix,
    dump_matrix,
    gram_adjoint,
    in_span,
    intersection_dimension,
    inverse,
    is_positive_definite,
    is_positive_semidefinite_wrt,
    load_matrix,
    nullspace,
    orthogonal_complement,
    rank,
    rref_rows,
    span_equal,
    vec_add,
)


def test_nullspace_single_free_column():
    m = SparseRatMatrix.from_dense([[1, 1]])
    assert nullspace(m) == [{0: Fraction(-1), 1: Fraction(1)}]


def test_nullspace_of_injective_matrix_is_empty():
    assert nullspace(SparseRatMatrix.identity(3)) == []


def test_nullspace_of_zero_matrix_is_standard_basis():
    basis = nullspace(SparseRatMatrix.zero(2, 3))
    assert basis == [{0: 1}, {1: 1}, {2: 1}]


@pytest.mark.parametrize("rows", [
    [[1, 2, 3], [2, 4, 6], [0, 1, 1]],
    [[Fraction(1, 2), 0, 1, 0], [0, 0, 0, 0], [1, 1, 1, 1]],
    [[0, 0], [0, 0]],
])
def test_rank_plus_nullity(rows):
    m = SparseRatMatrix.from_dense(rows)
    assert rank(m) + len(nullspace(m)) == m.ncols
    for v in nullspace(m):
        assert m.apply(v) == {}


def test_sparse_and_dense_elimination_agree():
    rows = [
        {0: Fraction(2), 2: Fraction(1, 3)},
        {1: Fraction(-1), 2: Fraction(5)},
        {0: Fraction(4), 1: Fraction(-1), 2: Fraction(17, 3)},
        {3: Fraction(7)},
    ]
    sparse = rref_rows(rows, 4, dense_threshold=0)
    dense = rref_rows(rows, 4, dense_threshold=100)
    assert sparse == dense
    assert sparse[0] == [0, 1, 3]


def test_dense_path_up_to_threshold(monkeypatch):
    calls = []
    dense = linalg_exact._dense_rref

    def recording(rows, ncols):
        calls.append(ncols)
        return dense(rows, ncols)

    monkeypatch.setattr(linalg_exact, "_dense_rref", recording)
    rows = [{0: Fraction(1), 2: Fraction(2)}, {1: Fraction(3)}]
    rref_rows(rows, 3, dense_threshold=3)
    assert calls == [3]
    rref_rows(rows, 3, dense_threshold=2)
    assert calls == [3]


def test_gram_adjoint_with_identity_grams_is_transpose():
    a = SparseRatMatrix.from_dense([[1, 2], [0, 3], [4, 0]])
    adj = gram_adjoint(a, SparseRatMatrix.identity(2), SparseRatMatrix.identity(3))
    assert adj == a.transpose()


def test_gram_adjoint_of_zero_map():
    a = SparseRatMatrix.zero(2, 3)
    adj = gram_adjoint(a, SparseRatMatrix.identity(3), SparseRatMatrix.identity(2))
    assert adj.shape == (3, 2)
    assert adj.is_zero()


def test_gram_adjoint_weighted():
    a = SparseRatMatrix.from_dense([[1]])
    adj = gram_adjoint(a, SparseRatMatrix.from_dense([[3]]), SparseRatMatrix.from_dense([[10]]))
    assert adj.get(0, 0) == Fraction(10, 3)


def test_gram_adjoint_shape_mismatch():
    a = SparseRatMatrix.from_dense([[1, 2]])
    with pytest.raises(ValueError):
        gram_adjoint(a, SparseRatMatrix.identity(1), SparseRatMatrix.identity(1))


@pytest.mark.parametrize("rows,expected", [
    ([[2, 1], [1, 2]], True),
    ([[1, 2], [2, 1]], False),
    ([[1, 0], [0, 0]], False),
    ([[0, 0, 1], [0, 3, 0], [1, 0, 0]], False),
    ([[5, 0, 0], [0, Fraction(1, 7), 0], [0, 0, 2]], True),
])
def test_positive_definite(rows, expected):
    assert is_positive_definite(SparseRatMatrix.from_dense(rows)) is expected


def test_positive_definite_rejects_non_symmetric():
    with pytest.raises(NonSymmetricMatrixError):
        is_positive_definite(SparseRatMatrix.from_dense([[1, 1], [0, 1]]))


def test_positive_semidefinite_wrt_gram():
    gram = SparseRatMatrix.from_dense([[2, 0], [0, 1]])
    assert is_positive_semidefinite_wrt(gram, SparseRatMatrix.from_dense([[1, 0], [0, 0]]))
    assert not is_positive_semidefinite_wrt(gram, SparseRatMatrix.from_dense([[-1, 0], [0, 0]]))
    # G·m não simétrica
    assert not is_positive_semidefinite_wrt(gram, SparseRatMatrix.from_dense([[0, 1], [0, 0]]))


def test_inverse_block_diagonal():
    m = SparseRatMatrix.from_dense([[2, 0, 0], [0, 0, 1], [0, 1, 0]])
    inv = inverse(m)
    assert inv @ m == SparseRatMatrix.identity(3)
    assert inv.get(0, 0) == Fraction(1, 2)


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        inverse(SparseRatMatrix.from_dense([[1, 2], [2, 4]]))


def test_subspace_helpers():
    u = [{0: Fraction(1)}, {1: Fraction(1)}]
    v = [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(1), 1: Fraction(-1)}]
    assert span_equal(u, v, 3)
    assert in_span({0: Fraction(3), 1: Fraction(-2)}, v, 3)
    assert not in_span({2: Fraction(1)}, v, 3)
    assert intersection_dimension(u, [{1: Fraction(1)}, {2: Fraction(1)}], 3) == 1


def test_orthogonal_complement():
    gram = SparseRatMatrix.from_dense([[1, 0], [0, 4]])
    comp = orthogonal_complement([{0: Fraction(1), 1: Fraction(1)}], gram)
    assert comp == [{0: Fraction(-4), 1: Fraction(1)}]


def test_vec_add_drops_zeros():
    assert vec_add({0: Fraction(1)}, {0: Fraction(1)}, -1) == {}


def test_dump_and_load():
    m = SparseRatMatrix.from_dense([[0, Fraction(-3, 4)], [2, 0]])
    text = dump_matrix(m)
    assert text.splitlines()[0] == "2 2 2"
    assert "0 1 -3/4" in text
    assert load_matrix(text) == m


def test_load_matrix_wrong_count():
    with pytest.raises(ValueError):
        load_matrix("2 2 3\n0 0 1\n")
