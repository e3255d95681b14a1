"""Test linear algebra over GF(p)."""

import numpy as np
import pytest
import scipy.sparse
from hypothesis import given, settings
from hypothesis import strategies as st

from koszulx.utils.linalg import (
    SparseEchelon,
    add_scaled,
    kernel_mod_p,
    module_monomials,
    monomials_of_degree,
    rank_mod_p,
    row_reduce_mod_p,
)

P = 32003

matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda rows: st.lists(
        st.lists(st.integers(min_value=0, max_value=P - 1), min_size=4, max_size=4),
        min_size=rows,
        max_size=rows,
    )
)


class TestMonomials:
    """Test monomial enumeration."""

    def test_monomials_of_degree(self):
        """Test counts and order of monomials."""
        assert monomials_of_degree(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert len(monomials_of_degree(4)) == 15
        assert monomials_of_degree(-1) == ()
        assert monomials_of_degree(0) == ((0, 0, 0),)

    def test_module_monomials(self):
        """Test module monomials of a twisted free module."""
        monomials = module_monomials((0, 1), 1)
        assert monomials == [(0, (1, 0, 0)), (0, (0, 1, 0)), (0, (0, 0, 1)), (1, (0, 0, 0))]


class TestRowReduction:
    """Test row_reduce_mod_p, rank_mod_p and kernel_mod_p."""

    def test_rank(self):
        """Test ranks depending on the characteristic."""
        assert rank_mod_p([[1, 2], [2, 4]], 7) == 1
        assert rank_mod_p([[1, 1], [1, 3]], 2) == 1
        assert rank_mod_p([[1, 1], [1, 3]], 7) == 2
        assert rank_mod_p(np.zeros((0, 3)), 7) == 0

    def test_sparse(self):
        """Test sparse input."""
        A = scipy.sparse.csr_matrix(np.array([[0, 1, 0], [0, 2, 0], [3, 0, 0]]))
        assert rank_mod_p(A, 7) == 2
        assert rank_mod_p(scipy.sparse.csr_matrix((0, 4)), 7) == 0

    def test_reduced_form(self):
        """Test the reduced row echelon form."""
        reduced, pivots = row_reduce_mod_p([[2, 4, 1], [1, 2, 3]], 7)
        assert pivots == [0, 2]
        assert reduced.tolist() == [[1, 2, 0], [0, 0, 1]]

    def test_invalid(self):
        """Test that non-matrices are rejected."""
        with pytest.raises(ValueError):
            row_reduce_mod_p([1, 2, 3], 7)

    def test_kernel(self):
        """Test a kernel basis."""
        A = np.array([[1, 1, 0], [0, 1, 1]])
        K = kernel_mod_p(A, 7)
        assert K.shape == (1, 3)
        assert not ((A @ K.T) % 7).any()

    def test_kernel_of_empty(self):
        """Test the kernel of a matrix with no rows."""
        assert kernel_mod_p(np.zeros((0, 2), dtype=np.int64), 7).tolist() == [[1, 0], [0, 1]]

    @settings(max_examples=30)
    @given(matrices)
    def test_rank_nullity(self, rows):
        """Test that rank and kernel dimension add up to the column count."""
        A = np.array(rows, dtype=np.int64)
        K = kernel_mod_p(A, P)
        assert rank_mod_p(A, P) + K.shape[0] == 4
        assert not ((A @ K.T) % P).any()


class TestSparseEchelon:
    """Test the SparseEchelon class and add_scaled."""

    def test_add_scaled(self):
        """Test in-place linear combinations of sparse vectors."""
        target = {"a": 1, "b": 2}
        add_scaled(target, {"a": 6, "c": 1}, 1, 7)
        assert target == {"b": 2, "c": 1}

    def test_insert(self):
        """Test that dependent vectors are not inserted."""
        echelon = SparseEchelon(7)
        assert echelon.insert({2: 1, 1: 1})
        assert echelon.insert({1: 1})
        assert not echelon.insert({2: 3, 1: 5})
        assert len(echelon) == 2
        assert echelon.reduce({2: 1}) == {}

    def test_reduced_rows(self):
        """Test the reduced echelon basis."""
        echelon = SparseEchelon(7)
        echelon.insert({2: 2, 1: 2, 0: 1})
        echelon.insert({1: 1})
        assert echelon.reduced_rows() == [{2: 1, 0: 4}, {1: 1}]

    def test_key(self):
        """Test a custom pivot order."""
        echelon = SparseEchelon(7, key=lambda c: -c)
        echelon.insert({2: 1, 1: 3})
        assert list(echelon.rows) == [1]
