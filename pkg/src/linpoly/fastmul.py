"""Fragmentation-based skew polynomial multiplication.

``a`` is cut into s* = ceil(sqrt(s+1)) fragments of s* coefficients.  After
untwisting fragment i by sigma^{-i s*}, every fragment product becomes a row
of a single matrix product ``C = A @ B`` over F_{q^m}, where ``B`` is a
banded matrix built from the conjugates of ``b``.  The rectangular product is
done as ~s*+1 square block products through a pluggable backend.
"""

import contextlib
import contextvars
import math
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .counting import OpCounter
from .errors import ShapeMismatch
from .skewpoly import SkewPoly, mul_naive

STRATEGIES = ("naive", "strassen")


@dataclass
class MatBackend:
    strategy: str = "naive"
    threshold: int = 64
    counter: OpCounter = None

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.threshold < 2:
            raise ValueError("strassen threshold must be >= 2")


@dataclass
class FragMatrices:
    A: np.ndarray
    B: np.ndarray
    s_star: int
    s: int
    C: np.ndarray = dc_field(default=None)


_default_backend = contextvars.ContextVar("default_backend", default=None)


@contextlib.contextmanager
def use_backend(backend):
    """Make ``backend`` the default for every sp_mul_fast call in this context."""
    token = _default_backend.set(backend)
    try:
        yield backend
    finally:
        _default_backend.reset(token)


def current_backend():
    return _default_backend.get() or MatBackend()


def fragment_size(s):
    r = math.isqrt(s + 1)
    return r if r * r == s + 1 else r + 1


# -- matrix products over F_{q^m} ----------------------------------------------


def _matmul_naive(F, A, B, counter):
    n, p = A.shape
    r = B.shape[1]
    if counter is not None:
        counter.muls += n * p * r
        counter.adds += n * max(p - 1, 0) * r
    if p == 0:
        return F.zeros((n, r))
    prod = F.vmul(A[:, :, None], B[None, :, :])
    return F.vsum(prod, axis=1)


def _strassen(F, A, B, threshold, counter):
    n = A.shape[0]
    if n <= threshold or n % 2:
        return _matmul_naive(F, A, B, counter)
    h = n // 2
    a11, a12, a21, a22 = A[:h, :h], A[:h, h:], A[h:, :h], A[h:, h:]
    b11, b12, b21, b22 = B[:h, :h], B[:h, h:], B[h:, :h], B[h:, h:]
    add, sub = F.vadd, F.vsub
    if counter is not None:
        counter.adds += 18 * h * h

    def rec(x, y):
        return _strassen(F, x, y, threshold, counter)

    m1 = rec(add(a11, a22), add(b11, b22))
    m2 = rec(add(a21, a22), b11)
    m3 = rec(a11, sub(b12, b22))
    m4 = rec(a22, sub(b21, b11))
    m5 = rec(add(a11, a12), b22)
    m6 = rec(sub(a21, a11), add(b11, b12))
    m7 = rec(sub(a12, a22), add(b21, b22))
    c11 = add(sub(add(m1, m4), m5), m7)
    c12 = add(m3, m5)
    c21 = add(m2, m4)
    c22 = add(add(sub(m1, m2), m3), m6)
    return np.block([[c11, c12], [c21, c22]])


def matmul(F, A, B, backend=None):
    """Exact product of matrices over F_{q^m}."""
    backend = backend or MatBackend()
    A = np.asarray(A, dtype=F.vdtype)
    B = np.asarray(B, dtype=F.vdtype)
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if backend.strategy == "naive":
        return _matmul_naive(F, A, B, backend.counter)
    n, p = A.shape
    r = B.shape[1]
    size = max(n, p, r, 1)
    if size <= backend.threshold:
        return _matmul_naive(F, A, B, backend.counter)
    dim = 1 << (size - 1).bit_length()
    Ap = F.zeros((dim, dim))
    Bp = F.zeros((dim, dim))
    Ap[:n, :p] = A
    Bp[:p, :r] = B
    return _strassen(F, Ap, Bp, backend.threshold, backend.counter)[:n, :r]


# -- fragmentation ------------------------------------------------------------------


def fragment_matrices(a, b):
    """Build A (s* x s*) and the banded B (s* x (s+s*)) for the product a * b."""
    a._check(b)
    F, ell = a.field, a.ell
    s = max(len(a), len(b)) - 1
    k = fragment_size(s)
    ac = np.zeros(k * k, dtype=F.vdtype)
    ac[:len(a)] = a.coeffs
    A = F.zeros((k, k))
    for i in range(k):
        A[i] = F.vfrob(ac[i * k:(i + 1) * k], -i * k * ell)
    bc = np.zeros(s + 1, dtype=F.vdtype)
    bc[:len(b)] = b.coeffs
    B = F.zeros((k, s + k))
    for r in range(k):
        B[r, r:r + s + 1] = F.vfrob(bc, r * ell)
    return FragMatrices(A=A, B=B, s_star=k, s=s)


def block_product(F, A, B, backend):
    """A (k x k) times B (k x w) as ceil(w/k) square block products, left to right."""
    k, w = B.shape
    nblocks = -(-w // k)
    C = F.zeros((k, nblocks * k))
    for j in range(nblocks):
        blk = F.zeros((k, k))
        part = B[:, j * k:(j + 1) * k]
        blk[:, :part.shape[1]] = part
        C[:, j * k:(j + 1) * k] = matmul(F, A, blk, backend)
    return C[:, :w]


def sp_mul_fast(a, b, backend=None, stats=None):
    """a * b through the fragment matrix product; equals :func:`mul_naive` exactly.

    ``stats`` (a dict) receives the fragment matrices and the per-fragment
    overlap sizes seen while summing the partial products.
    """
    backend = backend or current_backend()
    a._check(b)
    F, ell = a.field, a.ell
    if not a.coeffs or not b.coeffs:
        return a._new(())
    fm = fragment_matrices(a, b)
    k, s = fm.s_star, fm.s
    counter = backend.counter
    if counter is not None:
        counter.frobs += k * k + k * (s + 1)
    C = block_product(F, fm.A, fm.B, backend)
    fm.C = C
    width = s + k
    out = np.zeros((k - 1) * k + width, dtype=F.vdtype)
    overlaps = []
    covered = 0  # out[:covered] holds the running partial sum
    for i in range(k):
        frag = F.vfrob(C[i], i * k * ell)
        lo = i * k
        ov = max(0, min(covered, lo + width) - lo)
        if ov:
            out[lo:lo + ov] = F.vadd(out[lo:lo + ov], frag[:ov])
        out[lo + ov:lo + width] = frag[ov:]
        covered = max(covered, lo + width)
        overlaps.append(ov)
        if counter is not None:
            counter.adds += ov
            counter.frobs += width
    if stats is not None:
        stats["fragments"] = fm
        stats["overlaps"] = overlaps
    return a._new(out.tolist())


def count_field_ops(s, backend=None, field=None, rng=None, ell=1, run_naive=True):
    """Run both multiplication paths on random degree-s inputs with counters on."""
    from .field import GF

    field = field or GF(2, 8)
    rng = rng or random.Random(0)
    backend = backend or MatBackend()
    a = SkewPoly.random(field, s, rng, ell)
    b = SkewPoly.random(field, s, rng, ell)
    fast_counter = OpCounter()
    fast_backend = MatBackend(backend.strategy, backend.threshold, fast_counter)
    c_fast = sp_mul_fast(a, b, fast_backend)
    result = {"fast": {"muls": fast_counter.muls, "adds": fast_counter.adds}}
    if run_naive:
        naive_counter = OpCounter()
        c_naive = mul_naive(a, b, naive_counter)
        result["naive"] = {"muls": naive_counter.muls, "adds": naive_counter.adds}
        result["agree"] = c_naive == c_fast
    return result
