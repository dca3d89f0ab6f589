"""Minimal subspace polynomials and multi-point evaluation.

The two routines recurse into each other: the MSP of ``A + B`` is
``MSP(M_A(B)) * M_A``, which needs an evaluation of ``M_A`` on ``B``; the
evaluation of ``a`` on ``A + B`` reduces ``a`` modulo ``M_A`` and ``M_B``,
which needs both MSPs.  An MSP node also hands back the MSP of its left half
so an evaluation further down can reuse it instead of recomputing it.
"""

from .errors import DegreeTooLarge, EmptyInput
from .fastmul import sp_mul_fast
from .skewpoly import SkewPoly, mod_right, rdiv


def _base_msp(F, u):
    if u == 0:
        return SkewPoly.one(F)
    # x^{[1]} - u^{q-1} x^{[0]}
    return SkewPoly(F, [F.neg(F.pow(u, F.q - 1)), 1])


def _msp_node(F, points, stats, mul):
    """Node ``(M_U, node of the left half)``; the left node is None at a leaf.

    Chaining left nodes lets an evaluation on the left half reuse every MSP
    already built down the left spine.
    """
    if stats is not None:
        stats[tuple(points)] += 1
    s = len(points)
    if s == 1:
        return _base_msp(F, points[0]), None
    h = s // 2
    A, B = points[:h], points[h:]
    node_a = _msp_node(F, A, stats, mul)
    images = _mpe(node_a[0], B, None, stats, mul, True)
    m_img = _msp_node(F, images, stats, mul)[0]
    return mul(m_img, node_a[0]), node_a


def msp(field, points, stats=None, mul=sp_mul_fast):
    """Monic MSP of the F_q-span of ``points`` (a generating set, not necessarily independent).

    ``stats``, if given, is a ``collections.Counter`` keyed by the point
    tuples for which an MSP node was computed.
    """
    points = [int(u) for u in points]
    if not points:
        raise EmptyInput("msp needs at least one point")
    return _msp_node(field, points, stats, mul)[0]


def _mpe(a, points, hint, stats, mul, memoize):
    F = a.field
    s = len(points)
    if s == 1:
        if a.deg > 1:
            raise DegreeTooLarge(f"base case needs deg <= 1, got {a.deg}")
        u = points[0]
        return [F.add(F.mul(a[1], F.frob(u, 1)), F.mul(a[0], u))]
    h = s // 2
    A, B = points[:h], points[h:]
    # hint is the node of A: (M_A, node of A's left half)
    node_a = hint if hint is not None and memoize else _msp_node(F, A, stats, mul)
    node_b = _msp_node(F, B, stats, mul)
    rho_a = rdiv(a, node_a[0])[1]
    rho_b = rdiv(a, node_b[0])[1]
    left_a = node_a[1] if memoize else None
    left_b = node_b[1] if memoize else None
    return _mpe(rho_a, A, left_a, stats, mul, memoize) + _mpe(rho_b, B, left_b, stats, mul, memoize)


def mpe(a, points, msp_a_hint=None, stats=None, mul=sp_mul_fast, memoize=True):
    """Evaluate ``a`` (deg_q a <= len(points)) at every point, in input order.

    ``msp_a_hint`` is the MSP of the first ``len(points) // 2`` points when the
    caller already holds it.  ``memoize=False`` disables passing MSPs of left
    halves down the recursion (for comparison only).
    """
    if not a.linearized:
        raise ValueError("multi-point evaluation needs a linearized polynomial")
    points = [int(u) for u in points]
    if not points:
        raise EmptyInput("no evaluation points")
    if a.deg > len(points):
        raise DegreeTooLarge(f"deg_q a = {a.deg} exceeds the number of points {len(points)}")
    hint = None
    if msp_a_hint is not None and len(points) > 1:
        hint = (msp_a_hint, None)
    return _mpe(a, points, hint, stats, mul, memoize)


def mpe_general(a, points, mul=sp_mul_fast):
    """Multi-point evaluation without a degree restriction."""
    points = [int(u) for u in points]
    if not points:
        raise EmptyInput("no evaluation points")
    if a.deg >= len(points):
        a = mod_right(a, msp(a.field, points, mul=mul))
    return mpe(a, points, mul=mul)
