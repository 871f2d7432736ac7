"""
Testcases for exact complex quaternion arithmetic:
- multiplication table of the quaternion units
- null quaternions and the inverse
- multiplicativity of the complex squared norm
- exact square roots in Q(I)
- parsing of scalars and quaternions
- floating mirror against the exact product
"""

from fractions import Fraction

import numpy as np
from pytest import raises

from mincq.cq_core import (
    ComplexScalar,
    ComplexQuaternion,
    FloatComplexQuaternion,
    IMAG,
    L,
    ONE,
    QI,
    QJ,
    QK,
    parse_scalar,
    parse_quaternion,
)
from mincq.util.sampling import random_quaternion, random_invertible_quaternion
from mincq.errors import ZeroComplexNorm, ParseError

TRIALS = 50


def test_unit_products():
    assert QI * QJ == QK
    assert QJ * QK == QI
    assert QK * QI == QJ
    assert QJ * QI == -QK
    for e in (QI, QJ, QK):
        assert e * e == -ONE


def test_complex_unit_commutes():
    q = ComplexQuaternion(1, 2, IMAG, ComplexScalar(3, -1))
    assert IMAG * q == q * IMAG


def test_null_quaternion():
    assert L.snorm() == 0
    assert L.is_vector
    with raises(ZeroComplexNorm):
        L.inverse()


def test_inverse(rng):
    for _ in range(TRIALS):
        q = random_invertible_quaternion(rng)
        assert q * q.inverse() == ONE
        assert q.inverse() * q == ONE


def test_snorm_multiplicative(rng):
    for _ in range(TRIALS):
        a, b = random_quaternion(rng), random_quaternion(rng)
        assert (a * b).snorm() == a.snorm() * b.snorm()
        assert (a * b).conj_quat() == b.conj_quat() * a.conj_quat()


def test_dot_cross(rng):
    for _ in range(TRIALS):
        a, b = random_quaternion(rng).vector_part(), random_quaternion(rng).vector_part()
        assert a * b == ComplexQuaternion(-a.dot(b)) + a.cross(b)


def test_real_imag_split(rng):
    for _ in range(TRIALS):
        q = random_quaternion(rng)
        assert q == q.real_part() + IMAG * q.imag_part()
        assert q.real_part().is_real and q.imag_part().is_real


def test_sqrt_exact():
    assert ComplexScalar(-3, 4).sqrt_exact() == ComplexScalar(1, 2)
    assert ComplexScalar(-1).sqrt_exact() == IMAG
    assert ComplexScalar(Fraction(9, 4)).sqrt_exact() == ComplexScalar(Fraction(3, 2))
    assert ComplexScalar(2).sqrt_exact() is None
    assert ComplexScalar(0, 1).sqrt_exact() is None


def test_float_rejected_on_exact_path():
    with raises(TypeError):
        ComplexScalar.coerce(0.5)


def test_parse_scalar():
    assert parse_scalar("5 - 2*I") == ComplexScalar(5, -2)
    assert parse_scalar(["1/2", "-3"]) == ComplexScalar(Fraction(1, 2), -3)
    assert parse_scalar(7) == ComplexScalar(7)
    with raises(ParseError):
        parse_scalar("sqrt(2)/2")
    assert abs(parse_scalar("sqrt(2)/2", exact=False) - np.sqrt(2) / 2) < 1e-15
    with raises(ParseError):
        parse_scalar("x + 1")


def test_parse_quaternion():
    assert parse_quaternion("0,0,I,1") == ComplexQuaternion(0, 0, IMAG, 1)
    values = parse_quaternion(["I", 0, "sqrt(2)/2", "sqrt(2)/2"], exact=False)
    assert values.shape == (4,)
    with raises(ParseError) as err:
        parse_quaternion("1,2,3")
    assert err.value.location == "$"


def test_float_mirror(rng):
    for _ in range(TRIALS):
        a, b = random_quaternion(rng), random_quaternion(rng)
        product = FloatComplexQuaternion.from_exact(a) * FloatComplexQuaternion.from_exact(b)
        assert product.allclose(a * b)
        assert np.isclose(FloatComplexQuaternion.from_exact(a).snorm(), complex(a.snorm()))
