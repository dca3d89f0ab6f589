"""Skew polynomials over F_{q^m} with automorphism sigma = Frobenius^ell.

A :class:`SkewPoly` with ``ell == 1`` is a linearized polynomial
``sum a_i x^{[i]}``; multiplication is then composition and the ring is
isomorphic to F_{q^m}[x; Frobenius].  Coefficients are stored low-to-high
and always normalized, so equality is structural.
"""

import numpy as np

from .errors import AutomorphismMismatch, ContextMismatch, DegreeTooLarge, DivisionByZeroPoly

NEG_INF = float("-inf")

# above this many coefficient pairs the numpy row kernels take over
_VECTOR_CUTOFF = 2048


def _normalize(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


class SkewPoly:
    __slots__ = ("field", "coeffs", "ell")

    def __init__(self, field, coeffs=(), ell=1):
        self.field = field
        self.coeffs = _normalize(list(coeffs))
        self.ell = ell

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field, ell=1):
        return cls(field, (), ell)

    @classmethod
    def one(cls, field, ell=1):
        return cls(field, (1,), ell)

    @classmethod
    def monomial(cls, field, k, c=1, ell=1):
        """c * x^k (that is, c x^{[k]} in the linearized view)."""
        return cls(field, [0] * k + [c], ell)

    @classmethod
    def random(cls, field, deg, rng, ell=1, monic=False):
        if deg < 0:
            return cls.zero(field, ell)
        cs = [field.random(rng) for _ in range(deg)]
        lead = 1 if monic else field.random(rng, nonzero=True)
        return cls(field, cs + [lead], ell)

    # -- basic properties ------------------------------------------------------

    @property
    def deg(self):
        """q-degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self):
        return self.lead() == 1

    @property
    def linearized(self):
        return self.ell % self.field.m == 1 % self.field.m

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.coeffs == other.coeffs
            and (self.ell - other.ell) % self.field.m == 0
        )

    def __hash__(self):
        return hash((self.field, self.coeffs, self.ell % self.field.m))

    def __repr__(self):
        if not self.coeffs:
            return "SkewPoly(0)"
        terms = [f"{c}*x^[{i}]" for i, c in enumerate(self.coeffs) if c]
        return f"SkewPoly({' + '.join(terms)}, ell={self.ell})"

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise ContextMismatch("polynomials live over different fields")
        if (self.ell - other.ell) % self.field.m:
            raise AutomorphismMismatch(f"ell = {self.ell} vs {other.ell}")

    def _new(self, coeffs):
        return SkewPoly(self.field, coeffs, self.ell)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {"ell": self.ell, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, field, d):
        if isinstance(d, list):
            d = {"coeffs": d}
        coeffs = [int(c) for c in d.get("coeffs", [])]
        for c in coeffs:
            if not field.contains(c):
                raise ValueError(f"{c} is not an element of {field!r}")
        return cls(field, coeffs, int(d.get("ell", 1)))

    # -- additive structure ------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = F.add(out[i], bi)
        return self._new(out)

    def __neg__(self):
        F = self.field
        return self._new([F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """c * self (constant on the left)."""
        F = self.field
        return self._new([F.mul(c, a) for a in self.coeffs])

    def scale_right(self, c):
        """self * c, i.e. coefficient i becomes a_i * sigma^i(c)."""
        F = self.field
        return self._new([F.mul(a, F.frob(c, i * self.ell)) for i, a in enumerate(self.coeffs)])

    def shift_left(self, k):
        """x^k * self."""
        F = self.field
        return self._new([0] * k + [F.frob(c, k * self.ell) for c in self.coeffs])

    def shift_right(self, k):
        """self * x^k."""
        return self._new([0] * k + list(self.coeffs))

    def truncate(self, n):
        """Terms of degree < n."""
        return self._new(self.coeffs[:n])

    def slice(self, lo, hi):
        """Terms lo..hi-1, shifted down to start at degree 0 (no automorphism applied)."""
        return self._new(self.coeffs[lo:hi])

    # -- multiplication -------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, SkewPoly):
            return mul_naive(self, other)
        return NotImplemented

    def __call__(self, alpha):
        return evaluate(self, alpha)

    def rdiv(self, other):
        return rdiv(self, other)

    def ldiv(self, other):
        return ldiv(self, other)

    def __mod__(self, other):
        return mod_right(self, other)


# -- free functions ----------------------------------------------------------------


def mul_naive(a, b, counter=None):
    """Schoolbook product: c_i = sum_j a_j * sigma^{j}(b_{i-j})."""
    a._check(b)
    F = a.field
    if not a.coeffs or not b.coeffs:
        return a._new(())
    la, lb = len(a.coeffs), len(b.coeffs)
    if counter is not None:
        counter.muls += la * lb
        counter.adds += la * lb - (la + lb - 1)
        counter.frobs += la * lb
    if F.tabled and la * lb > _VECTOR_CUTOFF:
        out = _mul_rows_numpy(F, a.coeffs, b.coeffs, a.ell)
    elif F.tabled and F.q == 2:
        out = _mul_table_char2(F, a.coeffs, b.coeffs, a.ell)
    else:
        out = _mul_generic(F, a.coeffs, b.coeffs, a.ell)
    return a._new(out)


def _mul_table_char2(F, a, b, ell):
    exp, log, N, m, qpm = F._exp, F._log, F.N, F.m, F._qpow_mod
    lbs = [(k, log[x]) for k, x in enumerate(b) if x]
    out = [0] * (len(a) + len(b) - 1)
    for j, aj in enumerate(a):
        if not aj:
            continue
        laj = log[aj]
        t = qpm[(j * ell) % m]
        for k, lbk in lbs:
            out[j + k] ^= exp[laj + lbk * t % N]
    return out


def _mul_generic(F, a, b, ell):
    out = [0] * (len(a) + len(b) - 1)
    mul, add, frob = F.mul, F.add, F.frob
    for j, aj in enumerate(a):
        if not aj:
            continue
        for k, bk in enumerate(b):
            if bk:
                out[j + k] = add(out[j + k], mul(aj, frob(bk, j * ell)))
    return out


def _mul_rows_numpy(F, a, b, ell):
    bv = np.array(b, dtype=np.int64)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    lb = len(b)
    for j, aj in enumerate(a):
        if aj:
            row = F.vscale_frob(aj, bv, j * ell)
            out[j:j + lb] = F.vadd(out[j:j + lb], row)
    return out.tolist()


def evaluate(a, alpha):
    """Operator evaluation a(alpha) = sum_i a_i alpha^{[i]} (linearized polynomials only)."""
    if not a.linearized:
        raise AutomorphismMismatch("evaluation is defined for linearized polynomials (ell = 1)")
    F = a.field
    acc = 0
    conj = alpha
    for c in a.coeffs:
        if c and conj:
            acc = F.add(acc, F.mul(c, conj))
        conj = F.frob(conj, 1)
    return acc


def rdiv(a, b):
    """Right division a = quo * b + rem with deg rem < deg b."""
    a._check(b)
    if not b.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    F, ell = a.field, a.ell
    t = len(b.coeffs) - 1
    rem = list(a.coeffs)
    if len(rem) - 1 < t:
        return a._new(()), a
    quo = [0] * (len(rem) - t)
    bt = b.coeffs[t]
    use_np = F.tabled and len(b.coeffs) > 48
    bv = np.array(b.coeffs, dtype=np.int64) if use_np else None
    for s in range(len(rem) - 1, t - 1, -1):
        lead = rem[s]
        if not lead:
            continue
        k = s - t
        c = F.div(lead, F.frob(bt, k * ell))
        quo[k] = c
        # subtract c x^k b
        if use_np:
            seg = np.array(rem[k:s + 1], dtype=np.int64)
            rem[k:s + 1] = F.vsub(seg, F.vscale_frob(c, bv, k * ell)).tolist()
        else:
            for i, bi in enumerate(b.coeffs):
                if bi:
                    rem[k + i] = F.sub(rem[k + i], F.mul(c, F.frob(bi, k * ell)))
        rem[s] = 0
    return a._new(quo), a._new(rem[:t])


def ldiv(a, b):
    """Left division a = b * quo + rem with deg rem < deg b."""
    a._check(b)
    if not b.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    F, ell = a.field, a.ell
    t = len(b.coeffs) - 1
    rem = list(a.coeffs)
    if len(rem) - 1 < t:
        return a._new(()), a
    quo = [0] * (len(rem) - t)
    bt = b.coeffs[t]
    conj_b = None
    for s in range(len(rem) - 1, t - 1, -1):
        lead = rem[s]
        if not lead:
            continue
        k = s - t
        c = F.frob(F.div(lead, bt), -t * ell)
        quo[k] = c
        # subtract b * c x^k: coefficient i+k gets b_i sigma^i(c)
        if F.tabled and len(b.coeffs) > 48:
            if conj_b is None:
                conj_b = np.array(b.coeffs, dtype=np.int64)
            cs = np.array([F.frob(c, i * ell) for i in range(t + 1)], dtype=np.int64)
            seg = np.array(rem[k:s + 1], dtype=np.int64)
            rem[k:s + 1] = F.vsub(seg, F.vmul(conj_b, cs)).tolist()
        else:
            for i, bi in enumerate(b.coeffs):
                if bi:
                    rem[k + i] = F.sub(rem[k + i], F.mul(bi, F.frob(c, i * ell)))
        rem[s] = 0
    return a._new(quo), a._new(rem[:t])


def mod_right(a, c):
    """a mod c in the right-division sense: a = d * c + (a mod c)."""
    return rdiv(a, c)[1]


def frobenius_modulus(field):
    """x^{[m]} - x, whose evaluation map vanishes on all of F_{q^m}."""
    m = field.m
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    coeffs[0] = field.neg(1)
    return SkewPoly(field, coeffs, 1)


def q_reverse(gamma, m=None):
    """q-reverse: coefficient i is gamma_{-i mod m}^{[i]}, i = 0..m-1."""
    F = gamma.field
    m = F.m if m is None else m
    if gamma.deg >= m:
        raise DegreeTooLarge(f"q-reverse needs deg < {m}, got {gamma.deg}")
    out = [F.frob(gamma[(-i) % m], i) for i in range(m)]
    return SkewPoly(F, out, gamma.ell)
