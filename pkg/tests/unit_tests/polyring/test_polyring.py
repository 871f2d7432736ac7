"""
Testcases for Laurent polynomials over Q(I) and over the complex quaternions:
- ring arithmetic and the quaternion product order
- exact and numeric evaluation, poles at 0
- antiderivatives with and without logarithmic terms
- gcd, Bezout cofactors, fraction reduction, square-free decomposition
- affine substitution
"""

import numpy as np
from pytest import raises

from mincq.cq_core import ComplexScalar, ComplexQuaternion, IMAG, ONE, QI, QJ, QK
from mincq.polyring import (
    CLaurent,
    QLaurent,
    Z,
    qsnorm,
    residue,
    antiderivative,
    poly_divmod,
    exact_div,
    gcd,
    gcd_many,
    bezout,
    reduce_fraction,
    squarefree_decomposition,
    compose_affine,
)
from mincq.util.sampling import random_claurent, random_qlaurent, random_points
from mincq.errors import PoleEvaluation, InexactDivision, BothZero, NotPolynomial, UnsupportedPoleStructure

TRIALS = 30


def test_sparse_storage():
    p = CLaurent({-2: 1, 0: 0, 3: ComplexScalar(0, 2)})
    assert p.valuation == -2 and p.degree == 3
    assert p.coeff(0) == 0
    assert not p.is_polynomial
    assert (p - p).is_zero


def test_quaternion_product_order():
    a, b = QLaurent({1: QI}), QLaurent({0: QJ})
    assert a * b == QLaurent({1: QK})
    assert b * a == QLaurent({1: -QK})


def test_qsnorm_is_multiplicative(rng):
    for _ in range(TRIALS):
        a, b = random_qlaurent(rng, 2, -1, 3), random_qlaurent(rng, 1, 0, 3)
        assert qsnorm(a * b) == qsnorm(a) * qsnorm(b)


def test_evaluate(rng):
    z = ComplexScalar(2, -1)
    p = Z**2 + 3 * CLaurent.monomial(-1)
    assert p.evaluate(z) == z * z + 3 * z.inverse()
    with raises(PoleEvaluation):
        p.evaluate(0)
    with raises(PoleEvaluation):
        p.evaluate_numeric(np.array([0j, 1.0]))
    q = random_qlaurent(rng, 3, -2, 3)
    points = random_points(rng, 10) + 2
    values = q.evaluate_numeric(points)
    assert values.shape == (10, 4)
    for w, value in zip(points, values):
        direct = sum(np.power(w, e) * c.to_numpy() for e, c in q.items())
        assert np.allclose(value, direct)


def test_antiderivative_polynomial(rng):
    for _ in range(TRIALS):
        p = random_qlaurent(rng, 3, 0, 3)
        form = antiderivative(p)
        assert form.is_rational
        assert form.principal.derivative() == p


def test_antiderivative_log_terms(rng):
    for _ in range(TRIALS):
        p = random_qlaurent(rng, 2, -3, 3)
        form = antiderivative(p)
        assert form.derivative() == p
        assert form.is_rational == p.coeff(-1).is_zero
    catenoid_k = -CLaurent.monomial(-1)
    form = antiderivative(catenoid_k)
    assert form.log_terms == ((ComplexScalar(0), ComplexScalar(-1)),)
    assert residue(catenoid_k) == -1
    assert residue(catenoid_k, pole=1) == 0


def test_antiderivative_rejects_other_poles():
    with raises(UnsupportedPoleStructure):
        antiderivative(Z, poles=[1])


def test_division(rng):
    for _ in range(TRIALS):
        a = random_claurent(rng, 4, 0, 3)
        b = random_claurent(rng, 2, 0, 3)
        if b.is_zero or b.degree < 1:
            continue
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree
        assert exact_div(a * b, b) == a
    with raises(InexactDivision):
        exact_div(Z**2 + 1, Z + 2)
    with raises(NotPolynomial):
        poly_divmod(CLaurent.monomial(-1), Z)


def test_gcd_and_bezout(rng):
    for _ in range(TRIALS):
        a, b, c = (random_claurent(rng, 2, 0, 3) for _ in range(3))
        if a.is_zero or b.is_zero or c.is_zero or c.degree < 1:
            continue
        g = gcd(a * c, b * c)
        assert g.leading() == 1
        assert exact_div(a * c, g) * g == a * c
        assert exact_div(g, c) * c == g
        h, alpha, beta = bezout(a, b)
        assert alpha * a + beta * b == h
    with raises(BothZero):
        gcd(CLaurent(), CLaurent())
    assert gcd_many(Z**2 - 1, Z**2 + 2 * Z + 1, CLaurent()) == Z + 1


def test_reduce_fraction():
    num, den = reduce_fraction((Z - 1) * (Z + IMAG) * Z, 2 * (Z - 1) * Z**3)
    assert den == Z**2
    assert num == (Z + IMAG) / 2


def test_squarefree_decomposition():
    p = (Z - 1) * (Z + IMAG) ** 2 * (Z - 3) ** 3
    factors = dict((m, f) for f, m in squarefree_decomposition(p))
    assert factors == {1: Z - 1, 2: Z + IMAG, 3: Z - 3}
    assert squarefree_decomposition(CLaurent.constant(5)) == []


def test_compose_affine(rng):
    p = random_qlaurent(rng, 3, 0, 3)
    a, b = ComplexScalar(2, 1), ComplexScalar(-1, 3)
    q = compose_affine(p, a, b)
    w = ComplexScalar(1, -2)
    assert q.evaluate(w) == p.evaluate(a * w + b)
    laurent = Z + CLaurent.monomial(-2)
    assert compose_affine(laurent, 2, 0) == 2 * Z + CLaurent.monomial(-2, ComplexScalar(1) / 4)
    with raises(UnsupportedPoleStructure):
        compose_affine(laurent, 1, 1)


def test_components_round_trip():
    q = QLaurent({0: ComplexQuaternion(1, 2, 3, 4), 2: ONE + QK})
    assert QLaurent.from_components(*q.components()) == q
    assert q.vector_part() + QLaurent({e: ComplexQuaternion(c.scalar) for e, c in q.items()}) == q
    assert QLaurent({1: QJ}).is_vector
