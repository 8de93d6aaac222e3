from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from lqlie.linalg import RationalMatrix, canonical_basis, kernel, rank, sparse_kernel


def test_kernel_examples():
    assert kernel(RationalMatrix.identity(2)) == []
    assert len(kernel(RationalMatrix.zeros(2, 3))) == 3
    assert kernel(RationalMatrix([[1, 1]])) == [(1, -1)]


def test_rref_and_rank():
    M = RationalMatrix([[2, 4, 2], [1, 3, 2], [3, 7, 4]])
    assert rank(M) == 2
    assert M.rref() == RationalMatrix([[1, 0, -1], [0, 1, 1], [0, 0, 0]])


def test_canonical_basis_is_primitive_integer():
    vecs = canonical_basis([(Fraction(1, 2), Fraction(1, 3), 0), (0, 2, 4)])
    assert vecs == [(3, 0, -4), (0, 1, 2)]


matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(
        st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=1, max_size=5
    )
)


@given(matrices)
def test_kernel_rank_nullity_and_annihilation(rows):
    M = RationalMatrix(rows)
    ker = kernel(M)
    assert rank(M) + len(ker) == M.cols
    for v in ker:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in rows)
    if ker:
        assert rank(RationalMatrix(ker)) == len(ker)


@given(matrices)
def test_sparse_kernel_spans_the_same_space(rows):
    M = RationalMatrix(rows)
    sparse = sparse_kernel(M.sparse_rows(), M.cols)
    assert canonical_basis(sparse) == canonical_basis(kernel(M))
