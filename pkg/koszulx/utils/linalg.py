"""Linear algebra over GF(p) and monomial enumeration helpers."""

from collections.abc import Sequence
from functools import lru_cache

import numpy as np
import scipy.sparse

__all__ = [
    "monomials_of_degree",
    "module_monomials",
    "row_reduce_mod_p",
    "rank_mod_p",
    "kernel_mod_p",
    "SparseEchelon",
    "add_scaled",
]


@lru_cache(maxsize=256)
def monomials_of_degree(n: int) -> tuple[tuple[int, int, int], ...]:
    """Return the exponent tuples of degree `n` in x, y, z.

    The tuples are listed in decreasing grevlex order; there are none for
    negative `n`.

    Examples
    --------
    >>> monomials_of_degree(1)
    ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    """
    if n < 0:
        return ()
    return tuple(
        (a, b, n - a - b) for a in range(n, -1, -1) for b in range(n - a, -1, -1)
    )


def module_monomials(twists: Sequence[int], n: int) -> list[tuple[int, tuple[int, int, int]]]:
    """Return the module monomials ``(position, exponents)`` of degree `n`."""
    return [(pos, m) for pos, d in enumerate(twists) for m in monomials_of_degree(n - d)]


def _dtype_for(p: int):
    # products of two residues must fit in a signed 64-bit integer
    return np.int64 if p < 2**31 else object


def row_reduce_mod_p(matrix, p: int) -> tuple[np.ndarray, list[int]]:
    """Return the reduced row echelon form of a matrix over GF(p).

    Parameters
    ----------
    matrix : array_like or scipy.sparse matrix
        Integer matrix.
    p : int
        Prime modulus.

    Returns
    -------
    reduced : numpy.ndarray
        The nonzero rows of the reduced row echelon form.
    pivots : list of int
        Pivot column of each row.
    """
    if scipy.sparse.issparse(matrix):
        matrix = matrix.toarray()
    A = np.array(matrix, dtype=_dtype_for(p)) % p
    if A.ndim != 2:
        raise ValueError("expected a two-dimensional matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(A[r:, c])[0]
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(matrix, p: int) -> int:
    """Return the rank of an integer matrix over GF(p).

    Examples
    --------
    >>> rank_mod_p([[1, 2], [2, 4]], 7)
    1
    >>> rank_mod_p([[1, 2], [2, 4]], 2)
    1
    """
    if scipy.sparse.issparse(matrix):
        if matrix.shape[0] == 0 or matrix.shape[1] == 0:
            return 0
    elif np.size(matrix) == 0:
        return 0
    _, pivots = row_reduce_mod_p(matrix, p)
    return len(pivots)


def kernel_mod_p(matrix, p: int) -> np.ndarray:
    """Return a basis of the right kernel of a matrix over GF(p).

    Returns
    -------
    numpy.ndarray
        One kernel vector per row; the shape is ``(dim ker, columns)``.
    """
    if scipy.sparse.issparse(matrix):
        matrix = matrix.toarray()
    A = np.atleast_2d(np.array(matrix, dtype=_dtype_for(p)))
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=A.dtype)
    reduced, pivots = row_reduce_mod_p(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=A.dtype)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(pivots):
            basis[k, c] = (-reduced[row, f]) % p
    return basis


def add_scaled(target: dict, source: dict, scalar: int, p: int) -> None:
    """Add ``scalar * source`` to the sparse vector ``target`` in place."""
    for key, value in source.items():
        new = (target.get(key, 0) + scalar * value) % p
        if new:
            target[key] = new
        else:
            target.pop(key, None)


class SparseEchelon:
    """Incremental echelon form of sparse vectors over GF(p).

    Vectors are dictionaries from hashable coordinates to residues. Every
    stored row is monic at a pivot coordinate that no other row uses as a
    pivot, the pivot being the largest coordinate under `key`.

    Parameters
    ----------
    p : int
        Prime modulus.
    key : callable, optional
        Sort key on coordinates.
    """

    def __init__(self, p: int, key=None) -> None:
        self.p = p
        self.key = key
        self.rows: dict = {}

    def reduce(self, vector: dict) -> dict:
        """Return `vector` reduced against the stored rows."""
        vec = dict(vector)
        remainder: dict = {}
        while vec:
            lead = max(vec, key=self.key) if self.key else max(vec)
            coeff = vec[lead]
            row = self.rows.get(lead)
            if row is None:
                remainder[lead] = coeff
                del vec[lead]
            else:
                add_scaled(vec, row, -coeff, self.p)
        return remainder

    def insert(self, vector: dict) -> bool:
        """Insert a vector; return False if it was already in the span."""
        rem = self.reduce(vector)
        if not rem:
            return False
        lead = max(rem, key=self.key) if self.key else max(rem)
        inv = pow(rem[lead], -1, self.p)
        self.rows[lead] = {k: (v * inv) % self.p for k, v in rem.items()}
        return True

    def __len__(self) -> int:
        """Return the dimension of the span."""
        return len(self.rows)

    def reduced_rows(self) -> list[dict]:
        """Return the reduced echelon basis, by decreasing pivot.

        Every returned row is monic at its pivot and vanishes at the pivots
        of the other rows.
        """
        order = sorted(self.rows, key=self.key) if self.key else sorted(self.rows)
        reduced: dict = {}
        for pivot in order:
            row = dict(self.rows[pivot])
            for coord in [c for c in row if c != pivot and c in reduced]:
                coeff = row.get(coord)
                if coeff:
                    add_scaled(row, reduced[coord], -coeff, self.p)
            reduced[pivot] = row
        return [reduced[pivot] for pivot in reversed(order)]
