"""Arithmetic in F_q (q prime) and its extensions F_{q^m}.

Elements of F_{q^m} are plain Python ints: the element with polynomial-basis
coordinates ``c_0 + c_1 z + ... + c_{m-1} z^{m-1}`` is stored as
``sum(c_i * q**i)``.  This is also the serialized form.

Small fields (``q**m <= table_limit``) are backed by exp/log tables (plus Zech
logarithms for odd q) and get vectorized numpy kernels.  Larger fields fall
back to direct polynomial arithmetic and per-power Frobenius coordinate maps.
"""

import random

import numpy as np

from . import fq_linalg
from .errors import (
    ContextMismatch,
    DivisionByZero,
    FieldTooLarge,
    NoIrreducibleFound,
    NonPrimeQ,
    NotNormal,
    ReducibleModulus,
    SingularBasis,
)

DEFAULT_MAX_M = 64
DEFAULT_TABLE_LIMIT = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_q as coefficient lists (low degree first) -----------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, q):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], q - 2, q)
    while len(_trim(a)) - 1 >= df:
        shift = len(a) - 1 - df
        c = a[-1] * inv_lead % q
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % q
    return a


def _pmulmod(a, b, f, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _pmod(out, f, q)


def _ppowmod(a, e, f, q):
    result = [1]
    base = _pmod(a, f, q)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, q)
        e >>= 1
        if e:
            base = _pmulmod(base, base, f, q)
    return result


def _pgcd(a, b, q):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, q)
    return a


def is_irreducible(f, q):
    """Rabin's test for a monic polynomial ``f`` (coefficients low to high)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    # a root in F_q means a linear factor
    for z in range(q):
        if sum(c * pow(z, i, q) for i, c in enumerate(f)) % q == 0:
            return False
    if m <= 3:
        return True
    x = [0, 1]
    if _pmod(_ppowmod(x, q**m, f, q), f, q) != _pmod(x, f, q):
        return False
    for p in prime_factors(m):
        h = _ppowmod(x, q ** (m // p), f, q)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % q
        g = _pgcd(f, h, q)
        if len(g) > 1:
            return False
    return True


def find_irreducible(q, m):
    """First monic irreducible of degree m, scanning lower coefficients as base-q integers."""
    if m == 1:
        return [0, 1]
    for v in range(q**m):
        low = [(v // q**i) % q for i in range(m)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_irreducible(f, q):
            return f
    raise NoIrreducibleFound(f"no irreducible polynomial of degree {m} over F_{q}")


class GF:
    """The finite field F_{q^m} with a fixed polynomial basis.

    ``modulus`` is the list ``[c_0, ..., c_m]`` of a monic irreducible
    polynomial over F_q; when omitted the first one in lexicographic scan
    order is used.
    """

    def __init__(self, q, m, modulus=None, *, max_m=DEFAULT_MAX_M, table_limit=DEFAULT_TABLE_LIMIT):
        if not is_prime(q):
            raise NonPrimeQ(f"q = {q} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if max_m is not None and m > max_m:
            raise FieldTooLarge(f"m = {m} exceeds the bound {max_m}")
        if modulus is None:
            modulus = find_irreducible(q, m)
        else:
            modulus = [int(c) for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus("modulus must be monic of degree m")
            if any(not 0 <= c < q for c in modulus):
                raise ReducibleModulus("modulus coefficients must lie in F_q")
            if not is_irreducible(modulus, q):
                raise ReducibleModulus(f"{modulus} is reducible over F_{q}")
        self.q = q
        self.m = m
        self.modulus = tuple(modulus)
        self.order = q**m
        self.N = self.order - 1
        self._weights = [q**i for i in range(m)]
        self._mod_int = sum(c * w for c, w in zip(modulus, self._weights + [q**m]))
        self._frob_maps = {}
        self._basis_inv = {}
        self._normal = None
        self._dual = None
        self.tabled = self.order <= table_limit
        if self.tabled:
            self._build_tables()
            self.vdtype = np.int64
        else:
            self.vdtype = object
            self._vmul = np.frompyfunc(self.mul, 2, 1)
            self._vadd = np.frompyfunc(self.add, 2, 1)
            self._vneg = np.frompyfunc(self.neg, 1, 1)

    # -- identity --------------------------------------------------------

    def __repr__(self):
        return f"GF({self.q}^{self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.q, self.m, self.modulus) == (other.q, other.m, other.modulus)

    def __hash__(self):
        return hash((self.q, self.m, self.modulus))

    def check_same(self, other):
        if other is not self and other != self:
            raise ContextMismatch(f"{self!r} vs {other!r}")

    def to_json(self):
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, d, **kw):
        return cls(int(d["q"]), int(d["m"]), d.get("modulus"), **kw)

    # -- coordinates -----------------------------------------------------

    def coords(self, x):
        q = self.q
        out = []
        for _ in range(self.m):
            x, r = divmod(x, q)
            out.append(r)
        return out

    def from_coords(self, c):
        return sum((int(ci) % self.q) * w for ci, w in zip(c, self._weights))

    def contains(self, x):
        return isinstance(x, (int, np.integer)) and 0 <= x < self.order

    def gen(self):
        """The class of ``z`` (equal to 0 when m = 1 and the modulus is ``z``)."""
        if self.m == 1:
            return (-self.modulus[0]) % self.q
        return self.q

    def random(self, rng=None, nonzero=False):
        rng = rng or random
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.order)

    def elements(self):
        return range(self.order)

    # -- slow reference arithmetic (also used to build tables) ------------

    def _add_digits(self, a, b, sign=1):
        q = self.q
        out, w = 0, 1
        for _ in range(self.m):
            a, ra = divmod(a, q)
            b, rb = divmod(b, q)
            out += ((ra + sign * rb) % q) * w
            w *= q
        return out

    def _mul_poly(self, a, b):
        if self.q == 2:
            m, red = self.m, self._mod_int
            top = 1 << m
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= red
            return r
        return self.from_coords(_pmulmod(self.coords(a), self.coords(b), list(self.modulus), self.q))

    def _build_tables(self):
        N = self.N
        self._exp = [0] * (2 * N + 2)
        self._log = [0] * self.order
        if N == 0:
            return
        g = self._find_primitive()
        x = 1
        for i in range(N):
            self._exp[i] = x
            self._log[x] = i
            x = self._mul_poly(x, g)
        for i in range(N, 2 * N + 2):
            self._exp[i] = self._exp[i - N]
        self.primitive = g
        self._exp_np = np.array(self._exp, dtype=np.int64)
        self._log_np = np.array(self._log, dtype=np.int64)
        self._qpow_mod = [pow(self.q, i, N) for i in range(self.m)]
        if self.q != 2:
            # Zech logs: 1 + g^n = g^zech[n], -1 when the sum vanishes
            self._zech = [-1] * N
            for n in range(N):
                s = self._add_digits(1, self._exp[n])
                self._zech[n] = self._log[s] if s else -1
            self._zech_np = np.array(self._zech, dtype=np.int64)
            self._half = N // 2

    def _find_primitive(self):
        N = self.N
        if N == 1:
            return 1
        fac = prime_factors(N)
        for g in range(2, self.order):
            if all(self._pow_poly(g, N // p) != 1 for p in fac):
                return g
        raise RuntimeError("no primitive element found")

    def _pow_poly(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_poly(r, a)
            e >>= 1
            if e:
                a = self._mul_poly(a, a)
        return r

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a, b):
        if self.q == 2:
            return a ^ b
        if not self.tabled:
            return self._add_digits(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self.N]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a):
        if self.q == 2 or a == 0:
            return a
        if self.tabled:
            return self._exp[self._log[a] + self._half]
        return self._add_digits(0, a, -1)

    def sub(self, a, b):
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.tabled:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_poly(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.tabled:
            return self._exp[(self.N - self._log[a]) % self.N]
        return self._inv_euclid(a)

    def _inv_euclid(self, a):
        # extended Euclid in F_q[z] against the modulus
        q = self.q
        r0, r1 = list(self.modulus), _trim(self.coords(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = self._pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self._psub(s0, self._pmul(quo, s1))
        c = pow(r1[0], q - 2, q)
        return self.from_coords(_pmod([x * c % q for x in s1], list(self.modulus), q))

    def _pmul(self, a, b):
        q = self.q
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
        return _trim(out)

    def _psub(self, a, b):
        q = self.q
        n = max(len(a), len(b))
        a = a + [0] * (n - len(a))
        b = b + [0] * (n - len(b))
        return _trim([(x - y) % q for x, y in zip(a, b)])

    def _pdivmod(self, a, b):
        q = self.q
        a = list(a)
        quo = [0] * max(len(a) - len(b) + 1, 1)
        inv_lead = pow(b[-1], q - 2, q)
        while len(_trim(a)) >= len(b):
            shift = len(a) - len(b)
            c = a[-1] * inv_lead % q
            quo[shift] = c
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % q
        return _trim(quo), a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        if self.tabled:
            return self._exp[(self._log[a] * e) % self.N]
        return self._pow_poly(a, e)

    def from_int(self, c):
        """Embed an integer of the prime field F_q."""
        return c % self.q

    def frob(self, x, ell=1):
        """x^(q^ell) for any integer ell (taken modulo m)."""
        ell %= self.m
        if ell == 0 or x == 0:
            return x
        if self.tabled:
            return self._exp[(self._log[x] * self._qpow_mod[ell]) % self.N]
        cols = self._frob_columns(ell)
        if self.q == 2:
            r, i = 0, 0
            while x:
                if x & 1:
                    r ^= cols[i]
                x >>= 1
                i += 1
            return r
        c = np.array(self.coords(x), dtype=np.int64)
        return self.from_coords((self.frobenius_matrix(ell) @ c) % self.q)

    def _frob_columns(self, ell):
        ell %= self.m
        cols = self._frob_maps.get(ell)
        if cols is None:
            # image of z under sigma^ell by repeated q-th powering
            img = self.gen()
            for _ in range(ell):
                img = self._pow_poly(img, self.q)
            cols, x = [], 1
            for _ in range(self.m):
                cols.append(x)
                x = self._mul_poly(x, img)
            self._frob_maps[ell] = cols
        return cols

    def frobenius_matrix(self, ell):
        """m x m matrix over F_q whose column i holds the coordinates of sigma^ell(z^i)."""
        cols = self._frob_columns(ell)
        return np.array([self.coords(c) for c in cols], dtype=np.int64).T

    def trace(self, x, s=None):
        """Sum of the conjugates x^{[i]}, i < s (s = m gives the absolute trace)."""
        s = self.m if s is None else s
        t = 0
        for i in range(s):
            t = self.add(t, self.frob(x, i))
        return t

    # -- vectorized arithmetic on numpy arrays ------------------------------

    def asarray(self, xs):
        return np.array(list(xs) if not isinstance(xs, np.ndarray) else xs, dtype=self.vdtype)

    def zeros(self, shape):
        return np.zeros(shape, dtype=self.vdtype)

    def vadd(self, x, y):
        if self.q == 2:
            return np.bitwise_xor(x, y)
        if not self.tabled:
            return self._vadd(x, y)
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        lx = self._log_np[x]
        z = self._zech_np[(self._log_np[y] - lx) % self.N]
        out = np.where(z < 0, 0, self._exp_np[lx + np.maximum(z, 0)])
        out = np.where(x == 0, y, out)
        return np.where(y == 0, x, out)

    def vneg(self, x):
        if self.q == 2:
            return x
        if not self.tabled:
            return self._vneg(x)
        x = np.asarray(x)
        return np.where(x == 0, 0, self._exp_np[self._log_np[x] + self._half])

    def vsub(self, x, y):
        if self.q == 2:
            return np.bitwise_xor(x, y)
        return self.vadd(x, self.vneg(y))

    def vmul(self, x, y):
        if not self.tabled:
            return self._vmul(x, y)
        x, y = np.asarray(x), np.asarray(y)
        out = self._exp_np[self._log_np[x] + self._log_np[y]]
        return np.where((x == 0) | (y == 0), 0, out)

    def vfrob(self, x, ell):
        ell %= self.m
        x = np.asarray(x)
        if ell == 0:
            return x
        if not self.tabled:
            return np.frompyfunc(lambda v: self.frob(v, ell), 1, 1)(x)
        out = self._exp_np[(self._log_np[x] * self._qpow_mod[ell]) % self.N]
        return np.where(x == 0, 0, out)

    def vscale_frob(self, c, x, ell):
        """c * sigma^ell(x) elementwise, for a scalar c."""
        ell %= self.m
        x = np.asarray(x)
        if c == 0:
            return np.zeros(x.shape, dtype=self.vdtype)
        if not self.tabled:
            return self._vmul(c, self.vfrob(x, ell))
        lx = self._log_np[x]
        if ell:
            lx = (lx * self._qpow_mod[ell]) % self.N
        out = self._exp_np[lx + self._log[c]]
        return np.where(x == 0, 0, out)

    def vsum(self, x, axis=0):
        x = np.asarray(x)
        if x.shape[axis] == 0:
            shape = x.shape[:axis] + x.shape[axis + 1:]
            return np.zeros(shape, dtype=self.vdtype)
        if self.q == 2:
            return np.bitwise_xor.reduce(x, axis=axis)
        if not self.tabled:
            return self._vadd.reduce(x, axis=axis)
        # odd q: add coordinate digits modulo q
        w = np.array(self._weights, dtype=np.int64)
        digits = (x[..., None] // w) % self.q
        return ((digits.sum(axis=axis) % self.q) * w).sum(axis=-1)

    # -- bases -------------------------------------------------------------

    def conjugates(self, x, count=None):
        count = self.m if count is None else count
        return [self.frob(x, i) for i in range(count)]

    def coordinate_matrix(self, xs):
        """Rows are the polynomial-basis coordinate vectors of ``xs``."""
        return np.array([self.coords(x) for x in xs], dtype=np.int64).reshape(len(xs), self.m)

    def rank(self, xs):
        """Dimension over F_q of the span of ``xs``."""
        xs = list(xs)
        if not xs:
            return 0
        return fq_linalg.rank(self.coordinate_matrix(xs), self.q)

    def _basis_inverse(self, basis):
        key = tuple(int(b) for b in basis)
        inv = self._basis_inv.get(key)
        if inv is None:
            if len(key) != self.m:
                raise SingularBasis(f"a basis needs {self.m} elements, got {len(key)}")
            # columns of M are the basis vectors
            mat = self.coordinate_matrix(key).T
            try:
                inv = fq_linalg.inverse(mat, self.q)
            except SingularBasis:
                raise SingularBasis("elements are linearly dependent over F_q") from None
            self._basis_inv[key] = inv
        return inv

    def coords_in_basis(self, x, basis):
        inv = self._basis_inverse(basis)
        return [int(v) for v in (inv @ np.array(self.coords(x), dtype=np.int64)) % self.q]

    def from_basis_coords(self, c, basis):
        self._basis_inverse(basis)
        acc = 0
        for ci, b in zip(c, basis):
            ci = int(ci) % self.q
            if ci:
                acc = self.add(acc, self.mul(ci, b))
        return acc

    def basis_matrix(self, basis):
        """Change of basis: columns are polynomial coordinates of the basis elements."""
        return self.coordinate_matrix(list(basis)).T

    def in_subfield(self, x, s):
        return self.frob(x, s) == x

    def is_normal(self, beta, s=None):
        s = self.m if s is None else s
        if self.m % s or not self.in_subfield(beta, s):
            return False
        return self.rank(self.conjugates(beta, s)) == s

    def find_normal_element(self, s=None, rng=None, tries=64):
        """A normal element of F_{q^s} over F_q (s must divide m).

        Random sampling first, then an exhaustive scan in increasing integer
        order.  The result is deterministic for a fixed ``rng`` seed.
        """
        s = self.m if s is None else s
        if self.m % s:
            raise ValueError(f"s = {s} does not divide m = {self.m}")
        rng = rng or random.Random(0)

        def project(x):
            # relative trace F_{q^m} -> F_{q^s}
            acc = 0
            for i in range(self.m // s):
                acc = self.add(acc, self.frob(x, i * s))
            return acc

        for _ in range(tries):
            cand = project(self.random(rng, nonzero=True))
            if cand and self.is_normal(cand, s):
                return cand
        for x in range(1, self.order):
            cand = project(x)
            if cand and self.is_normal(cand, s):
                return cand
        raise NotNormal("no normal element found")  # unreachable for valid fields

    def dual_basis(self, beta, s=None):
        """The dual normal element of ``beta`` w.r.t. the trace of F_{q^s} over F_q.

        Solves the Gram system T_ij = Tr(beta^[i] beta^[j]) over F_q; the dual
        basis element j is sum_i (T^-1)_ji beta^[i].
        """
        s = self.m if s is None else s
        conj = self.conjugates(beta, s)
        gram = np.zeros((s, s), dtype=np.int64)
        for i in range(s):
            for j in range(i, s):
                t = self.trace(self.mul(conj[i], conj[j]), s)
                if t >= self.q:
                    raise NotNormal("trace left the prime field")
                gram[i, j] = gram[j, i] = t
        try:
            tinv = fq_linalg.inverse(gram, self.q)
        except SingularBasis:
            raise NotNormal("Gram matrix is singular; element is not normal") from None
        acc = 0
        for i in range(s):
            acc = self.add(acc, self.mul(int(tinv[0, i]), conj[i]))
        return acc

    @property
    def normal_element(self):
        if self._normal is None:
            self._normal = self.find_normal_element()
        return self._normal

    @property
    def dual_element(self):
        if self._dual is None:
            self._dual = self.dual_basis(self.normal_element)
        return self._dual

    def normal_basis(self):
        return self.conjugates(self.normal_element)


def make_field(q, m, modulus=None, **kw):
    return GF(q, m, modulus, **kw)

