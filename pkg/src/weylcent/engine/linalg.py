"""Dense Gaussian elimination over F_p.

Matrices are numpy arrays of residues in [0, p). Small primes use int64
(products of two residues stay below 2**62); larger ones fall back to
Python ints in object arrays.
"""

import numpy as np

INT64_SAFE_MODULUS = 2**31


def _dtype(p: int) -> type:
    return np.int64 if p < INT64_SAFE_MODULUS else object


def zeros(rows: int, cols: int, p: int) -> np.ndarray:
    """An all-zero rows x cols matrix suited to modulus p."""
    if _dtype(p) is object:
        return np.zeros((rows, cols), dtype=object)
    return np.zeros((rows, cols), dtype=np.int64)


def rref_mod_p(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a matrix over F_p.

    Pivots are taken left to right, the first nonzero entry in a column is
    used as pivot row, and every pivot is scaled to 1.

    Returns:
        (R, pivot_cols): R has the same shape as matrix; pivot_cols lists
        the pivot column of row i at position i.
    """
    R = np.array(matrix, dtype=_dtype(p)) % p
    rows, cols = R.shape
    pivot_cols: list[int] = []
    pivot_row = 0

    for col in range(cols):
        if pivot_row == rows:
            break
        nonzero = np.nonzero(R[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]

        inverse = pow(int(R[pivot_row, col]), -1, p)
        R[pivot_row] = (R[pivot_row] * inverse) % p

        # Clear the column above and below the pivot in one step.
        factors = R[:, col].copy()
        factors[pivot_row] = 0
        if np.any(factors):
            R = (R - np.outer(factors, R[pivot_row])) % p

        pivot_cols.append(col)
        pivot_row += 1

    return R, pivot_cols


def nullspace_mod_p(matrix: np.ndarray, p: int) -> list[list[int]]:
    """Basis of the right kernel {v : M v = 0} over F_p.

    One vector per free column f: it has a 1 at f, zeros at the other free
    columns, and is supported on f and pivot columns left of f.
    """
    R, pivot_cols = rref_mod_p(matrix, p)
    cols = R.shape[1]
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [0] * cols
        vector[free] = 1
        for row, pc in enumerate(pivot_cols):
            vector[pc] = int(-R[row, free]) % p
        basis.append(vector)
    return basis


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of a matrix over F_p."""
    _, pivot_cols = rref_mod_p(matrix, p)
    return len(pivot_cols)
