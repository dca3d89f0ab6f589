import random

import pytest
from hypothesis import given, settings, strategies as st

from linpoly.counting import OpCounter
from linpoly.errors import AutomorphismMismatch, ContextMismatch, DegreeTooLarge, DivisionByZeroPoly
from linpoly.field import GF
from linpoly.skewpoly import (
    NEG_INF,
    SkewPoly,
    evaluate,
    frobenius_modulus,
    ldiv,
    mod_right,
    mul_naive,
    q_reverse,
    rdiv,
)

F4 = GF(2, 2)
F8 = GF(2, 3)
F9 = GF(3, 2)
F256 = GF(2, 8)


def rand_poly(F, rng, max_deg, ell=1):
    return SkewPoly.random(F, rng.randrange(-1, max_deg + 1), rng, ell)


def test_zero_degree_is_negative_infinity():
    assert SkewPoly.zero(F4).deg == NEG_INF
    assert SkewPoly(F4, [0, 0]).is_zero()
    assert SkewPoly(F4, [1, 2, 0, 0]).deg == 1


def test_worked_pair_over_f4():
    z = 2
    a = SkewPoly(F4, [0, z])
    b = SkewPoly(F4, [z])
    assert a * b == SkewPoly(F4, [0, 1])
    assert b * a == SkewPoly(F4, [0, 3])
    assert a * b != b * a


def test_identity_and_additive_laws():
    rng = random.Random(0)
    one = SkewPoly.one(F256)
    for _ in range(30):
        a = rand_poly(F256, rng, 10)
        assert one * a == a and a * one == a
        assert a + SkewPoly.zero(F256) == a
        assert (a + (-a)).is_zero()
        assert (a + a).is_zero()


@pytest.mark.parametrize("F", [F8, F9, F256, GF(2, 20)], ids=repr)
@pytest.mark.parametrize("ell", [1, 2, 3])
def test_associative_and_distributive(F, ell):
    rng = random.Random(ell)
    for _ in range(15):
        a, b, c = (rand_poly(F, rng, 8, ell) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_composition_matches_evaluation():
    rng = random.Random(1)
    for _ in range(30):
        a, b = rand_poly(F256, rng, 6), rand_poly(F256, rng, 6)
        x = F256.random(rng)
        assert evaluate(a * b, x) == evaluate(a, evaluate(b, x))


def test_large_product_uses_vector_kernel_consistently():
    rng = random.Random(2)
    a, b = rand_poly(F256, rng, 200), rand_poly(F256, rng, 200)
    x = F256.random(rng)
    assert evaluate(mul_naive(a, b), x) == evaluate(a, evaluate(b, x))


def test_naive_counts():
    c = OpCounter()
    mul_naive(SkewPoly.random(F256, 9, random.Random(0)), SkewPoly.random(F256, 4, random.Random(1)), c)
    assert c.muls == 50 and c.adds == 50 - 14


def test_evaluation_examples():
    rng = random.Random(3)
    alpha = F256.random(rng)
    assert evaluate(SkewPoly.one(F256), alpha) == alpha
    assert evaluate(rand_poly(F256, rng, 5), 0) == 0
    for u in range(1, 256, 17):
        M = SkewPoly(F256, [F256.neg(F256.pow(u, 1)), 1])
        assert evaluate(M, u) == 0


def test_evaluation_needs_linearized():
    with pytest.raises(AutomorphismMismatch):
        evaluate(SkewPoly(F256, [1, 1], ell=2), 3)


def test_context_checks():
    with pytest.raises(ContextMismatch):
        SkewPoly.one(F4) + SkewPoly.one(F8)
    with pytest.raises(AutomorphismMismatch):
        SkewPoly.one(F256, 1) * SkewPoly.one(F256, 2)
    # ell is compared modulo m
    assert SkewPoly(F8, [1, 2], ell=1) == SkewPoly(F8, [1, 2], ell=4)


@pytest.mark.parametrize("F", [F4, F9, F256], ids=repr)
@pytest.mark.parametrize("ell", [1, 2])
def test_division_uniqueness(F, ell):
    rng = random.Random(10 + ell)
    for _ in range(40):
        b = SkewPoly.random(F, rng.randrange(0, 6), rng, ell)
        q = rand_poly(F, rng, 6, ell)
        r = rand_poly(F, rng, b.deg - 1, ell) if b.deg > 0 else SkewPoly.zero(F, ell)
        assert rdiv(q * b + r, b) == (q, r)
        assert ldiv(b * q + r, b) == (q, r)


def test_division_examples():
    rng = random.Random(4)
    b = SkewPoly.random(F256, 5, rng)
    assert rdiv(b, b) == (SkewPoly.one(F256), SkewPoly.zero(F256))
    assert mod_right(b, b).is_zero()
    a = SkewPoly.random(F256, 3, rng)
    assert mod_right(a, b) == a
    with pytest.raises(DivisionByZeroPoly):
        rdiv(a, SkewPoly.zero(F256))
    with pytest.raises(DivisionByZeroPoly):
        ldiv(a, SkewPoly.zero(F256))


def test_left_and_right_division_differ_over_f4():
    a = SkewPoly(F4, [0, 2])
    b = SkewPoly(F4, [2])
    c = a * b  # = x^[1]
    assert rdiv(c, b)[0] != ldiv(c, b)[0]
    assert rdiv(c, b)[0] * b == c
    assert b * ldiv(c, b)[0] == c


def test_long_division_vector_path():
    rng = random.Random(5)
    for _ in range(5):
        a, b = SkewPoly.random(F256, 150, rng), SkewPoly.random(F256, 60, rng)
        q, r = rdiv(a, b)
        assert q * b + r == a and r.deg < b.deg
        q, r = ldiv(a, b)
        assert b * q + r == a and r.deg < b.deg


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(0, 8), max_size=12),
    st.lists(st.integers(0, 8), min_size=1, max_size=8).filter(lambda c: c[-1] != 0),
    st.integers(1, 2),
)
def test_division_identity_property(ac, bc, ell):
    a, b = SkewPoly(F9, ac, ell), SkewPoly(F9, bc, ell)
    q, r = rdiv(a, b)
    assert q * b + r == a and r.deg < b.deg
    q, r = ldiv(a, b)
    assert b * q + r == a and r.deg < b.deg


def test_frobenius_modulus_reduction_keeps_evaluations():
    rng = random.Random(6)
    mod = frobenius_modulus(F16 := GF(2, 4))
    for _ in range(10):
        a = SkewPoly.random(F16, 11, rng)
        red = mod_right(a, mod)
        assert red.deg < 4
        assert all(evaluate(a, x) == evaluate(red, x) for x in range(16))


def test_q_reverse_examples():
    assert q_reverse(SkewPoly.one(F256)) == SkewPoly.one(F256)
    c = 77
    for j in range(1, 8):
        mono = SkewPoly.monomial(F256, j, c)
        assert q_reverse(mono) == SkewPoly.monomial(F256, 8 - j, F256.frob(c, 8 - j))
    rng = random.Random(7)
    for _ in range(20):
        g = rand_poly(F4, rng, 1)
        assert q_reverse(q_reverse(g)) == g
    with pytest.raises(DegreeTooLarge):
        q_reverse(SkewPoly.monomial(F4, 2))


def test_json_round_trip():
    p = SkewPoly(F256, [1, 0, 9], ell=3)
    assert SkewPoly.from_json(F256, p.to_json()) == p
    with pytest.raises(ValueError):
        SkewPoly.from_json(F4, [7])
