"""Dense linear algebra over a prime field F_q.

Matrices are numpy ``int64`` arrays with entries in ``range(q)``.  All
routines are plain Gaussian elimination; sizes here are at most a few
dozen rows, so nothing cleverer is needed.
"""

import numpy as np

from .errors import ShapeMismatch, SingularBasis


def _as_matrix(a, q):
    return np.array(a, dtype=np.int64).reshape(np.shape(a)) % q


def rref(a, q):
    """Reduced row echelon form of ``a`` over F_q.

    Returns ``(R, pivots)`` where ``pivots`` lists the pivot column of each
    nonzero row of ``R``.
    """
    r = _as_matrix(a, q).copy()
    if r.ndim != 2:
        raise ShapeMismatch("expected a 2-d matrix")
    rows, cols = r.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        p = row + nz[0]
        if p != row:
            r[[row, p]] = r[[p, row]]
        inv = pow(int(r[row, col]), q - 2, q)
        r[row] = (r[row] * inv) % q
        factors = r[:, col].copy()
        factors[row] = 0
        r = (r - np.outer(factors, r[row])) % q
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a, q):
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, q)[1])


def inverse(a, q):
    a = _as_matrix(a, q)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ShapeMismatch(f"cannot invert a {a.shape} matrix")
    r, pivots = rref(np.hstack([a, np.eye(n, dtype=np.int64)]), q)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularBasis("matrix is singular over F_%d" % q)
    return r[:, n:].copy()


def solve(a, b, q):
    """Solve ``a @ x = b`` for square nonsingular ``a``; ``b`` may be a matrix."""
    b = _as_matrix(b, q)
    return (inverse(a, q) @ b) % q


def matmul(a, b, q):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % q
