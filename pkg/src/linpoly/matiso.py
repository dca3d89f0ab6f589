"""Linearized polynomials of q-degree < m as m x m matrices over F_q.

Evaluation turns ``a`` into an F_q-linear map of F_{q^m}; composition
modulo x^{[m]} - x becomes a matrix product.  A LinMap is a plain numpy
int64 array whose column j holds the coordinates of the image of basis
element j.
"""

import numpy as np

from . import fq_linalg
from .errors import DegreeTooLarge, RequiresNormalBasis, ShapeMismatch, SingularBasis
from .qtransform import QTContext, qt_forward, qt_inverse
from .skewpoly import SkewPoly, frobenius_modulus, mod_right


class MatrixIso:
    """Conversion context between L^{<m} and m x m matrices for one basis.

    With no basis the normal basis of the q-transform context is used.  Any
    other basis is handled by conjugating with the change-of-basis matrix,
    computed once here.
    """

    def __init__(self, field, basis=None, qtctx=None):
        self.field = field
        self.qt = qtctx or QTContext(field)
        if self.qt.s != field.m:
            raise RequiresNormalBasis("need a q-transform over the whole field")
        normal = self.qt.basis()
        # normal-basis coordinates: inverse of the matrix whose columns are the basis
        self._n_inv = fq_linalg.inverse(field.basis_matrix(normal), field.q)
        self._n_mat = field.basis_matrix(normal)
        if basis is None:
            basis = normal
        basis = [int(b) for b in basis]
        if len(basis) != field.m:
            raise SingularBasis(f"a basis needs {field.m} elements, got {len(basis)}")
        self.basis = basis
        self.is_normal = basis == normal
        if self.is_normal:
            self.T = self.T_inv = None
        else:
            # columns: normal-basis coordinates of the new basis elements
            self.T = self._normal_coords(field.coordinate_matrix(basis).T)
            self.T_inv = fq_linalg.inverse(self.T, field.q)

    def _normal_coords(self, poly_cols):
        return (self._n_inv @ poly_cols) % self.field.q

    def phi(self, a):
        """Matrix of x -> a(x) in this context's basis."""
        F = self.field
        if not a.linearized:
            raise ValueError("phi needs a linearized polynomial")
        if a.deg >= F.m:
            raise DegreeTooLarge(f"phi needs deg < {F.m}, got {a.deg}")
        qa = qt_forward(a, self.qt)
        images = [qa[j] for j in range(F.m)]
        M = self._normal_coords(F.coordinate_matrix(images).T)
        if self.T is not None:
            M = fq_linalg.matmul(fq_linalg.matmul(self.T_inv, M, F.q), self.T, F.q)
        return M

    def phi_inv(self, M):
        """The unique a of q-degree < m with phi(a) = M."""
        F = self.field
        M = np.asarray(M, dtype=np.int64) % F.q
        if M.shape != (F.m, F.m):
            raise ShapeMismatch(f"expected a {F.m}x{F.m} matrix, got {M.shape}")
        if self.T is not None:
            M = fq_linalg.matmul(fq_linalg.matmul(self.T, M, F.q), self.T_inv, F.q)
        poly_cols = (self._n_mat @ M) % F.q
        images = [F.from_coords(poly_cols[:, j].tolist()) for j in range(F.m)]
        return qt_inverse(SkewPoly(F, images), self.qt)

    def mulmod(self, a, b):
        """a * b mod (x^{[m]} - x) through one matrix product."""
        M = fq_linalg.matmul(self.phi(a), self.phi(b), self.field.q)
        return self.phi_inv(M)


def phi(a, iso):
    return iso.phi(a)


def phi_inv(M, iso):
    return iso.phi_inv(M)


def mulmod_matrix(a, b, iso=None):
    iso = iso or MatrixIso(a.field)
    a._check(b)
    return iso.mulmod(a, b)


def mulmod_fragmented(a, b, iso=None, reduce=True):
    """Product of arbitrary-degree a, b from mulmod_matrix calls on short fragments.

    Fragments have length L = ceil(m/2), so every fragment product has
    q-degree < m and the matrix route returns it unreduced.  With
    ``reduce=False`` the exact product a * b comes back.
    """
    a._check(b)
    F = a.field
    iso = iso or MatrixIso(F)
    L = -(-F.m // 2)
    fa = [a.slice(i, i + L) for i in range(0, len(a), L)]
    fb = [b.slice(k, k + L) for k in range(0, len(b), L)]
    out = a._new(())
    for i, ai in enumerate(fa):
        if not ai:
            continue
        for k, bk in enumerate(fb):
            if not bk:
                continue
            # a_i x^{iL} b_k x^{kL} = a_i sigma^{iL}(b_k) x^{(i+k)L}
            twisted = SkewPoly(F, [F.frob(c, i * L) for c in bk.coeffs])
            out = out + iso.mulmod(ai, twisted).shift_right((i + k) * L)
    if reduce:
        out = mod_right(out, frobenius_modulus(F))
    return out


def linmap_to_json(M):
    return np.asarray(M).tolist()


def linmap_from_json(rows, m=None):
    M = np.array(rows, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or (m is not None and M.shape[0] != m):
        raise ShapeMismatch(f"not an m x m matrix: shape {M.shape}")
    return M
