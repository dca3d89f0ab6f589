"""q-transform with respect to a normal basis of F_{q^s} inside F_{q^m}.

Both directions are Hankel products with a ladder of conjugates, which after
reversing the input vector are Toeplitz products, which in turn are one
ordinary product in F_{q^m}[x].
"""

import numpy as np

from .errors import DegreeTooLarge, MissingNormalBasis, NotNormal, ShapeMismatch
from .skewpoly import SkewPoly

KARATSUBA_THRESHOLD = 32


def _schoolbook(F, f, g):
    out = F.zeros(len(f) + len(g) - 1)
    lg = len(g)
    for i, fi in enumerate(f):
        if fi:
            out[i:i + lg] = F.vadd(out[i:i + lg], F.vscale_frob(fi, g, 0))
    return out


def poly_mul_ordinary(F, f, g, threshold=KARATSUBA_THRESHOLD):
    """Product in the commutative ring F_{q^m}[x]; coefficient arrays low to high."""
    f = np.asarray(f, dtype=F.vdtype)
    g = np.asarray(g, dtype=F.vdtype)
    if len(f) == 0 or len(g) == 0:
        return F.zeros(0)
    if min(len(f), len(g)) <= threshold:
        return _schoolbook(F, f, g)
    n = max(len(f), len(g))
    h = (n + 1) // 2
    f0, f1 = f[:h], f[h:]
    g0, g1 = g[:h], g[h:]
    low = poly_mul_ordinary(F, f0, g0, threshold)
    high = poly_mul_ordinary(F, f1, g1, threshold)
    fs = _padd(F, f0, f1)
    gs = _padd(F, g0, g1)
    mid = poly_mul_ordinary(F, fs, gs, threshold)
    mid = _psub(F, _psub(F, mid, low), high)
    out = F.zeros(len(f) + len(g) - 1)
    out[:len(low)] = low
    out[2 * h:2 * h + len(high)] = F.vadd(out[2 * h:2 * h + len(high)], high)
    end = min(h + len(mid), len(out))
    out[h:end] = F.vadd(out[h:end], mid[:end - h])
    return out


def _padd(F, x, y):
    if len(x) < len(y):
        x, y = y, x
    out = x.copy()
    out[:len(y)] = F.vadd(out[:len(y)], y)
    return out


def _psub(F, x, y):
    n = max(len(x), len(y))
    out = F.zeros(n)
    out[:len(x)] = x
    out[:len(y)] = F.vsub(out[:len(y)], y)
    return out


def toeplitz_matvec(F, diagonals, v):
    """y = T v for the s x s Toeplitz matrix T_ij = diagonals[i - j + s - 1]."""
    v = np.asarray(v, dtype=F.vdtype)
    d = np.asarray(diagonals, dtype=F.vdtype)
    s = len(v)
    if len(d) != 2 * s - 1:
        raise ShapeMismatch(f"need {2 * s - 1} diagonals for a {s}x{s} Toeplitz matrix, got {len(d)}")
    if s == 0:
        return F.zeros(0)
    prod = poly_mul_ordinary(F, d, v)
    return prod[s - 1:2 * s - 1]


class QTContext:
    """Normal element beta of F_{q^s}, its dual, and both conjugate ladders."""

    def __init__(self, field, s=None, beta=None, rng=None):
        s = field.m if s is None else s
        if s < 1 or field.m % s:
            raise ValueError(f"block length {s} must divide m = {field.m}")
        if beta is None:
            beta = field.find_normal_element(s, rng=rng) if s != field.m else field.normal_element
        elif not field.is_normal(beta, s):
            raise NotNormal(f"{beta} is not a normal element of F_(q^{s})")
        self.field = field
        self.s = s
        self.beta = beta
        self.beta_dual = field.dual_basis(beta, s)
        self.ladder = field.asarray(field.frob(beta, i) for i in range(2 * s - 1))
        self.dual_ladder = field.asarray(field.frob(self.beta_dual, i) for i in range(2 * s - 1))

    def basis(self):
        return [int(x) for x in self.ladder[:self.s]]

    def dual(self):
        return [int(x) for x in self.dual_ladder[:self.s]]


def _hankel_apply(F, ladder, coeffs, s):
    # y_j = sum_k coeffs_k ladder[k + j]; reversing coeffs makes it Toeplitz
    v = F.zeros(s)
    v[:len(coeffs)] = coeffs
    return toeplitz_matvec(F, ladder, v[::-1])


def _check_input(a, ctx):
    if ctx is None:
        raise MissingNormalBasis("a QTContext is required")
    if not a.linearized:
        raise ValueError("q-transform needs a linearized polynomial")
    if a.deg >= ctx.s:
        raise DegreeTooLarge(f"q-transform needs deg < {ctx.s}, got {a.deg}")


def qt_forward(a, ctx):
    """Transform coefficients: qt_j = a(beta^{[j]}), j < s."""
    _check_input(a, ctx)
    F = a.field
    y = _hankel_apply(F, ctx.ladder, list(a.coeffs), ctx.s)
    return SkewPoly(F, y.tolist(), a.ell)


def qt_inverse(qa, ctx):
    """a_i = sum_j qa_j (beta_dual)^{[i+j]}."""
    _check_input(qa, ctx)
    F = qa.field
    y = _hankel_apply(F, ctx.dual_ladder, list(qa.coeffs), ctx.s)
    return SkewPoly(F, y.tolist(), qa.ell)
