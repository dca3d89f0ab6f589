"""Gabidulin codes: encoding, error and error-erasure decoding, rank metric tools."""

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import fq_linalg
from .errors import (
    DegreeTooLarge,
    DependentAbscissae,
    RadiusInfeasible,
    RequiresNormalBasis,
    ShapeMismatch,
)
from .fastmul import sp_mul_fast
from .interp import interpolate
from .leea import right_leea
from .qtransform import QTContext, qt_forward
from .skewpoly import SkewPoly, frobenius_modulus, ldiv, mod_right, q_reverse, rdiv
from .subspace import mpe_general, msp


@dataclass
class ErasureInfo:
    a_R: list = dc_field(default_factory=list)
    B_C: np.ndarray = None

    def __post_init__(self):
        self.a_R = [int(a) for a in self.a_R]

    @property
    def rho(self):
        return len(self.a_R)

    @property
    def gamma(self):
        return 0 if self.B_C is None else len(self.B_C)

    def to_json(self):
        rows = [] if self.B_C is None else np.asarray(self.B_C).tolist()
        return {"a_R": list(self.a_R), "B_C": rows}

    @classmethod
    def from_json(cls, d):
        rows = d.get("B_C") or []
        return cls(d.get("a_R", []), np.array(rows, dtype=np.int64) if rows else None)


@dataclass
class DecodeResult:
    decoded: bool
    f: SkewPoly = None
    error_span: SkewPoly = None
    reason: str = ""

    @classmethod
    def failure(cls, reason):
        return cls(False, reason=reason)


class GabidulinCode:
    """Gab[n, k] over ``field`` evaluated at the independent points ``g``.

    Without ``g`` the first n conjugates of the field's normal element are
    used, which is the layout the error-erasure decoder needs.
    """

    def __init__(self, field, n, k, g=None):
        if not 1 <= k <= n <= field.m:
            raise ValueError(f"need 1 <= k <= n <= m, got k={k} n={n} m={field.m}")
        self.field = field
        self.n, self.k = n, k
        self.beta = None
        if g is None:
            self.beta = field.normal_element
            g = field.conjugates(self.beta, n)
        g = [int(x) for x in g]
        if len(g) != n:
            raise ShapeMismatch(f"expected {n} evaluation points, got {len(g)}")
        if field.rank(g) != n:
            raise DependentAbscissae("evaluation points are dependent over F_q")
        self.g = g
        if self.beta is None and field.is_normal(g[0]) and g == field.conjugates(g[0], n):
            self.beta = g[0]
        self._msp = None
        self._qt = None

    @property
    def d(self):
        return self.n - self.k + 1

    @property
    def normal_flag(self):
        return self.beta is not None

    @property
    def radius(self):
        return (self.d - 1) // 2

    def msp(self):
        if self._msp is None:
            self._msp = msp(self.field, self.g)
        return self._msp

    def qt_context(self):
        if self._qt is None:
            self._qt = QTContext(self.field, beta=self.beta)
        return self._qt

    def to_json(self):
        return {"n": self.n, "k": self.k, "g": list(self.g)}

    @classmethod
    def from_json(cls, field, d):
        return cls(field, int(d["n"]), int(d["k"]), d.get("g"))


def encode(code, f, use_qt=None):
    """Codeword [f(g_1), ..., f(g_n)].

    ``use_qt`` picks the q-transform route, which needs a normal layout with
    n = m; by default it is taken whenever it applies.
    """
    if f.deg >= code.k:
        raise DegreeTooLarge(f"message needs deg_q < {code.k}, got {f.deg}")
    can_qt = code.normal_flag and code.n == code.field.m
    if use_qt is None:
        use_qt = can_qt
    if use_qt:
        if not can_qt:
            raise RequiresNormalBasis("q-transform encoding needs normal points and n = m")
        qa = qt_forward(f, code.qt_context())
        return [qa[j] for j in range(code.n)]
    if f.is_zero():
        return [0] * code.n
    return mpe_general(f, code.g)


def _check_word(code, r):
    r = [int(x) for x in r]
    if len(r) != code.n:
        raise ShapeMismatch(f"received word has length {len(r)}, expected {code.n}")
    return r


def _leea(a, b, stop):
    if b.is_zero():
        # the all-zero remainder: r = 0 * a + 1 * b
        return b, a._new((1,)), a._new(())
    return right_leea(a, b, stop)


def decode_errors(code, r):
    """Error-only decoding up to rank floor((d-1)/2)."""
    F = code.field
    r = _check_word(code, r)
    r_hat = interpolate(F, code.g, r, checked=False)
    M = code.msp()
    r_out, u_out, _ = _leea(M, r_hat, (code.n + code.k) // 2)
    if u_out.is_zero():
        return DecodeResult.failure("zero error span polynomial")
    f, rem = ldiv(r_out, u_out)
    if not rem.is_zero():
        return DecodeResult.failure("nonzero remainder")
    if f.deg >= code.k:
        return DecodeResult.failure("estimate has too large a degree")
    if u_out.deg > code.radius:
        return DecodeResult.failure("error span exceeds the decoding radius")
    return DecodeResult(True, f, u_out)


def column_erasure_points(code, B_C):
    """d_i = sum_j B_ij (beta_dual)^{[j]}, so that Tr(d_i g_j) = B_ij."""
    F = code.field
    dual = F.conjugates(F.dual_basis(code.beta), code.n)
    out = []
    for row in np.asarray(B_C, dtype=np.int64) % F.q:
        acc = 0
        for bij, dj in zip(row.tolist(), dual):
            if bij:
                acc = F.add(acc, F.mul(bij, dj))
        out.append(acc)
    return out


def decode_error_erasure(code, r, erasures=None):
    """Decoding of t errors, rho row and gamma column erasures with 2t + rho + gamma <= d - 1."""
    F = code.field
    if not code.normal_flag or code.n != F.m:
        raise RequiresNormalBasis("error-erasure decoding needs g_i = beta^[i-1] and n = m")
    r = _check_word(code, r)
    erasures = erasures or ErasureInfo()
    rho, gamma = erasures.rho, erasures.gamma
    if gamma and np.asarray(erasures.B_C).shape != (gamma, code.n):
        raise ShapeMismatch(f"B_C must be gamma x {code.n}, got {np.asarray(erasures.B_C).shape}")
    mod = frobenius_modulus(F)
    d_c = column_erasure_points(code, erasures.B_C) if gamma else []
    Gamma = msp(F, d_c) if gamma else SkewPoly.one(F)
    Lam_R = msp(F, erasures.a_R) if rho else SkewPoly.one(F)
    Gamma_rev = q_reverse(Gamma)
    r_hat = interpolate(F, code.g, r, checked=False)
    right = mod_right(Gamma_rev.shift_right(gamma), mod)
    y_hat = mod_right(sp_mul_fast(sp_mul_fast(Lam_R, r_hat), right), mod)
    stop = (code.n + code.k + rho + gamma) // 2
    r_out, u_out, _ = _leea(mod, y_hat, stop)
    if u_out.is_zero():
        return DecodeResult.failure("zero error span polynomial")
    quo_l, rem_l = ldiv(r_out, sp_mul_fast(u_out, Lam_R))
    if not rem_l.is_zero():
        return DecodeResult.failure("nonzero left remainder")
    if right.is_zero():
        return DecodeResult.failure("degenerate column erasure polynomial")
    quo_r, rem_r = rdiv(quo_l, right)
    if not rem_r.is_zero():
        return DecodeResult.failure("nonzero right remainder")
    if quo_r.deg >= code.k:
        return DecodeResult.failure("estimate has too large a degree")
    return DecodeResult(True, quo_r, u_out)


# -- rank metric ---------------------------------------------------------------


def expand(field, e):
    """m x n matrix over F_q; column j is the coordinate vector of e_j."""
    return field.coordinate_matrix([int(x) for x in e]).T


def rank_of_word(field, e):
    return fq_linalg.rank(expand(field, e), field.q)


def rank_distance(field, x, y):
    return rank_of_word(field, [field.sub(a, b) for a, b in zip(x, y)])


def _independent_elements(field, count, rng):
    while True:
        xs = [field.random(rng) for _ in range(count)]
        if field.rank(xs) == count:
            return xs


def _independent_vectors(q, count, n, rng):
    while True:
        B = np.array([[rng.randrange(q) for _ in range(n)] for _ in range(count)], dtype=np.int64)
        B = B.reshape(count, n)
        if fq_linalg.rank(B, q) == count:
            return B


def channel(code, codeword, t, rho=0, gamma=0, seed=0):
    """Add e = sum of t + rho + gamma rank-one terms a_i b_i.

    All a_i in F_{q^m} are jointly independent, as are all b_i in F_q^n, so
    rank(e) = t + rho + gamma.  The receiver learns the a_i of the row
    erasures and the b_i of the column erasures.  Returns (r, erasures, e).
    """
    F = code.field
    total = t + rho + gamma
    if min(t, rho, gamma) < 0:
        raise ValueError("counts must be non-negative")
    if total > code.n:
        raise RadiusInfeasible(f"t + rho + gamma = {total} exceeds n = {code.n}")
    rng = random.Random(seed)
    A = _independent_elements(F, total, rng)
    B = _independent_vectors(F.q, total, code.n, rng)
    e = [0] * code.n
    for a, b in zip(A, B):
        for j, bj in enumerate(b.tolist()):
            if bj:
                e[j] = F.add(e[j], F.mul(a, bj))
    r = [F.add(c, x) for c, x in zip(codeword, e)]
    erasures = ErasureInfo(A[:rho], B[rho:rho + gamma] if gamma else None)
    return r, erasures, e
