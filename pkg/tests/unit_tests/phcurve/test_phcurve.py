"""
Testcases for Pythagorean hodograph curves:
- the PH identity for random real preimages and scales
- constant slope curves from A = t + (sin i + cos j)
- rational curves and the residue obstruction
- rotation, reparametrization and left multiplication of preimages
- sampling of the integrated curve
"""

from fractions import Fraction

import numpy as np
from pytest import raises

from mincq.cq_core import ComplexQuaternion, IMAG, ONE, QI, QJ, QK
from mincq.polyring import CLaurent, QLaurent, Z, compose_affine
from mincq.phcurve import (
    PHSpec,
    hodograph,
    speed,
    ph_defect,
    constant_slope_defect,
    integrate_curve,
    rotate_preimage,
    reparametrize,
    left_multiply,
)
from mincq.util.sampling import random_claurent, random_qlaurent, random_rational, random_quaternion
from mincq.errors import NotRealPreimage, NonzeroResidue, NotVectorial

TRIALS = 100


def random_spec(rng, degree=2, valuation=0):
    while True:
        A = random_qlaurent(rng, degree, valuation, 4, real=True)
        lam = random_claurent(rng, 1, valuation, 4, real=True)
        if not A.is_zero and not lam.is_zero:
            return PHSpec(A, lam)


def circle_point(m):
    """Rational point (sin, cos) on the unit circle."""
    m = Fraction(m)
    return 2 * m / (1 + m * m), (1 - m * m) / (1 + m * m)


def test_real_coefficients():
    with raises(NotRealPreimage):
        PHSpec(QLaurent.constant(ComplexQuaternion(IMAG)))
    with raises(NotRealPreimage):
        PHSpec(QLaurent.constant(ONE), CLaurent.constant(IMAG))
    with raises(ValueError):
        PHSpec(QLaurent.constant(ONE), CLaurent())


def test_ph_identity(rng):
    for _ in range(TRIALS):
        spec = random_spec(rng, degree=int(rng.integers(0, 4)), valuation=int(rng.integers(-2, 1)))
        h = hodograph(spec)
        assert h.is_vector
        assert ph_defect(spec).is_zero


def test_constant_slope(rng):
    for _ in range(20):
        s, c = circle_point(random_rational(rng, 5, 4))
        axis = ComplexQuaternion(0, s, c, 0)
        spec = PHSpec(QLaurent({1: ONE, 0: axis}))
        expected = QLaurent({2: QI, 1: -2 * c * QK, 0: ComplexQuaternion(0, 2 * s * s - 1, 2 * s * c, 0)})
        assert hodograph(spec) == expected
        assert speed(spec) == Z**2 + 1
        assert constant_slope_defect(spec, axis, s).is_zero
        if s * s != 1:
            assert not constant_slope_defect(spec, axis, 1).is_zero
    with raises(NotVectorial):
        constant_slope_defect(PHSpec(QLaurent.constant(ONE)), ONE + QI, 0)


def test_polynomial_curve():
    spec = PHSpec(QLaurent({1: ONE, 0: ComplexQuaternion(0, "4/5", "3/5", 0)}))
    curve = integrate_curve(spec, base_point=(1, 2, 3))
    assert curve.is_polynomial
    assert curve.hodograph() == hodograph(spec)
    assert np.allclose(curve.evaluate(0.0), [1, 2, 3])
    assert np.allclose(curve.evaluate(np.array([0.0, 1.0]))[1], [1 + 1 / 3 + 0.28, 2 + 0.96, 3 - 0.6])


def test_rational_curve():
    spec = PHSpec(QLaurent({2: ONE, 0: QJ}), CLaurent({2: 1, -2: 1}))
    assert hodograph(spec) == QLaurent({6: QI, -2: -QI, 4: -2 * QK, 0: -2 * QK})
    curve = integrate_curve(spec)
    assert not curve.is_polynomial
    assert curve.gamma == QLaurent({7: QI / 7, -1: QI, 5: -2 * QK / 5, 1: -2 * QK})
    assert np.allclose(curve.evaluate(1.0), [1 / 7 + 1, 0, -2 / 5 - 2])


def test_nonzero_residue():
    with raises(NonzeroResidue) as info:
        integrate_curve(PHSpec(QLaurent.constant(ONE), CLaurent.monomial(-1)))
    assert info.value.residue == QI
    assert info.value.pole == 0


def test_rotate_preimage(rng):
    for _ in range(TRIALS // 5):
        spec = random_spec(rng)
        rotated = rotate_preimage(spec, "3/5", "4/5")
        assert rotated.A != spec.A
        assert hodograph(rotated) == hodograph(spec)
    with raises(ValueError):
        rotate_preimage(spec, 1, 1)


def test_reparametrize(rng):
    for _ in range(TRIALS // 5):
        spec = random_spec(rng)
        moved = reparametrize(spec, 2, -1)
        assert hodograph(moved) == compose_affine(hodograph(spec), 2, -1)
        assert ph_defect(moved).is_zero


def test_left_multiply(rng):
    for _ in range(TRIALS // 5):
        spec = random_spec(rng)
        R = random_quaternion(rng, 3, real=True)
        turned = left_multiply(spec, R)
        assert hodograph(turned) == QLaurent.constant(R) * hodograph(spec) * QLaurent.constant(R.conj_quat())
        assert speed(turned) == speed(spec) * R.snorm()
    with raises(NotRealPreimage):
        left_multiply(spec, ComplexQuaternion(IMAG))


def test_sample():
    spec = PHSpec(QLaurent({1: ONE, 0: ComplexQuaternion(0, "4/5", "3/5", 0)}))
    table = integrate_curve(spec).sample(11, (-1, 1))
    assert table.dtype.names == ("t", "x", "y", "z", "speed")
    assert len(table) == 11
    assert np.allclose(table["speed"], table["t"] ** 2 + 1)
    points = np.column_stack([table["x"], table["y"], table["z"]])
    chords = np.linalg.norm(np.diff(points, axis=0), axis=1)
    # chords never exceed the arc length t^3 / 3 + t
    assert np.sum(chords) <= (1 / 3 + 1) * 2 + 1e-12
    with raises(ValueError):
        integrate_curve(spec).sample(1)
