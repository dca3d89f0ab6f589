"""Divide-and-conquer linearized interpolation."""

from .errors import DependentAbscissae, EmptyInput
from .fastmul import sp_mul_fast
from .skewpoly import SkewPoly, evaluate, mod_right
from .subspace import msp, mpe


def _twist(F, m_other, m_self, points):
    # evaluating M_other on the points of this half; reducing mod M_self keeps mpe in range
    if m_other.deg > len(points):
        m_other = mod_right(m_other, m_self)
    return mpe(m_other, points)


def _interp(F, xs, ys, check_ranks):
    s = len(xs)
    if s == 1:
        return SkewPoly(F, [F.div(ys[0], xs[0])])
    h = s // 2
    xa, xb = xs[:h], xs[h:]
    m_a = msp(F, xa)
    m_b = msp(F, xb)
    ta = _twist(F, m_b, m_a, xa)
    tb = _twist(F, m_a, m_b, xb)
    if check_ranks and (F.rank(ta) != len(ta) or F.rank(tb) != len(tb)):
        raise AssertionError("twisted abscissae lost rank")
    i1 = _interp(F, ta, ys[:h], check_ranks)
    i2 = _interp(F, tb, ys[h:], check_ranks)
    return sp_mul_fast(i1, m_b) + sp_mul_fast(i2, m_a)


def interpolate(field, xs, ys, checked=True, check_ranks=False):
    """Unique I with deg_q I < s and I(x_i) = y_i.

    ``checked=False`` skips the independence test for callers that already
    know the abscissae are independent.  ``check_ranks`` asserts that the
    twisted abscissae stay independent at every node.
    """
    xs = [int(x) for x in xs]
    ys = [int(y) for y in ys]
    if len(xs) != len(ys):
        raise ValueError(f"{len(xs)} abscissae but {len(ys)} values")
    if not xs:
        raise EmptyInput("nothing to interpolate")
    if checked and (0 in xs or msp(field, xs).deg != len(xs)):
        raise DependentAbscissae("abscissae are linearly dependent over F_q")
    return _interp(field, xs, ys, check_ranks)


def check_interpolation(I, xs, ys):
    if not I.linearized or len(I) > len(xs):
        return False
    return all(evaluate(I, x) == int(y) for x, y in zip(xs, ys))
