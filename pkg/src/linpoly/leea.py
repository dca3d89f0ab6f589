"""Right linearized extended Euclidean algorithm with a degree stop."""

from dataclasses import dataclass

from .errors import InvalidStop, NoSolution
from .skewpoly import SkewPoly, mul_naive, rdiv


@dataclass
class LeeaState:
    r_prev: SkewPoly
    r_cur: SkewPoly
    u_prev: SkewPoly
    u_cur: SkewPoly
    v_prev: SkewPoly
    v_cur: SkewPoly

    def step(self):
        q, r = rdiv(self.r_prev, self.r_cur)
        u = self.u_prev - mul_naive(q, self.u_cur)
        v = self.v_prev - mul_naive(q, self.v_cur)
        return LeeaState(self.r_cur, r, self.u_cur, u, self.v_cur, v)


def right_leea(a, b, d_stop, debug=False):
    """First (r, u, v) of the remainder sequence of (a, b) with deg_q r < d_stop.

    Every triple satisfies r = v * a + u * b with the cofactors on the left.
    ``debug`` re-checks that identity after each step.
    """
    a._check(b)
    if d_stop < 0:
        raise InvalidStop(f"stopping degree must be >= 0, got {d_stop}")
    if a.is_zero() and b.is_zero():
        raise ValueError("a and b are both zero")
    if a.coeffs:
        d_stop = min(d_stop, a.deg + 1)
    zero, one = a._new(()), a._new((1,))
    if a.deg < d_stop:
        return a, zero, one
    if b.is_zero():
        raise NoSolution("b = 0 and deg_q a is not below the stopping degree")
    st = LeeaState(a, b, zero, one, one, zero)
    while st.r_cur.deg >= d_stop:
        st = st.step()
        if debug:
            assert st.r_cur == mul_naive(st.v_cur, a) + mul_naive(st.u_cur, b)
    return st.r_cur, st.u_cur, st.v_cur
