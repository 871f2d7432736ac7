"""
Testcases for the representations of isotropic curves:
- isotropy and scalar checks
- Weierstrass data f, g in both directions
- (p, q, w) data and its preimage pair
- preimage pairs of the catenoid and of Richmond's surface
- polynomial and rational preimage constructions on random curves
- real preimages and the sign normalization
- conversion dispatch
"""

import numpy as np
from pytest import raises

from mincq.cq_core import IMAG, L, QI, ONE
from mincq.polyring import CLaurent, QLaurent, Z, qsnorm
from mincq.weierstrass import (
    IsotropicCurve,
    WEData,
    PQWData,
    RationalScale,
    PreimagePair,
    isotropy_defect,
    phi_from_fg,
    fg_from_phi,
    phi_from_pqw,
    pair_from_pqw,
    pqw_from_pair,
    pair_from_phi,
    canonical_sign,
    real_preimage,
    random_isotropic_curve,
    convert,
    representation_name,
)
from mincq.examples import catenoid_phi, catenoid_preimage, richmond_phi, richmond_preimage
from mincq.util.sampling import random_qlaurent, random_points
from mincq.errors import (
    NotIsotropic,
    DegenerateWE,
    IncompatibleWE,
    NonPolynomialScale,
    UnsupportedPoleStructure,
)

TRIALS = 100


def test_isotropy_checks():
    with raises(NotIsotropic):
        IsotropicCurve(QLaurent.constant(QI))
    with raises(NotIsotropic):
        IsotropicCurve(QLaurent.constant(ONE + L))
    assert isotropy_defect(QLaurent.constant(QI)) == CLaurent.constant(1)
    assert isotropy_defect(QLaurent.constant(L)).is_zero
    IsotropicCurve(QLaurent({0: L, 2: L}))


def test_fg_round_trip():
    d = WEData(CLaurent.constant(1), Z)
    curve = phi_from_fg(d)
    assert curve.phi == QLaurent.from_components(None, (1 - Z**2) / 2, IMAG * (1 + Z**2) / 2, Z)
    back = fg_from_phi(curve)
    assert back.f == d.f
    assert back.g_num * d.g_den == d.g_num * back.g_den


def test_fg_rational_g():
    d = WEData(Z**2, CLaurent.constant(1), Z)
    back = fg_from_phi(phi_from_fg(d))
    assert back.f == Z**2
    assert back.g_num * Z == back.g_den


def test_fg_errors():
    with raises(DegenerateWE):
        fg_from_phi(QLaurent.from_components(None, 1, -IMAG, None))
    with raises(IncompatibleWE):
        phi_from_fg(WEData(CLaurent.constant(1), CLaurent.constant(1), Z - 1))
    with raises(ZeroDivisionError):
        WEData(CLaurent.constant(1), Z, CLaurent())


def test_pqw():
    d = PQWData(Z, CLaurent.constant(1), CLaurent.constant(1))
    curve = phi_from_pqw(d)
    pair = pair_from_pqw(d)
    assert pair.certifies(curve)
    assert pqw_from_pair(pair) == d
    with raises(NonPolynomialScale):
        PQWData(CLaurent.monomial(-1), Z, CLaurent.constant(1))
    with raises(NonPolynomialScale):
        pqw_from_pair(catenoid_preimage())


def test_catenoid_pair():
    pair = catenoid_preimage()
    assert pair.certifies(catenoid_phi())
    assert pair.phi() == catenoid_phi()
    assert pair.lam == CLaurent.monomial(-4, 1) / 8
    found = pair_from_phi(catenoid_phi())
    assert found.certifies(catenoid_phi())


def test_richmond_pair():
    pair = richmond_preimage()
    assert pair.certifies(richmond_phi())
    assert qsnorm(pair.A) == -4 * Z**2
    assert pair_from_phi(richmond_phi()).certifies(richmond_phi())


def test_rational_scale():
    scale = RationalScale(Z, Z**3)
    assert scale.is_laurent
    assert scale.reduced().as_laurent() == CLaurent.monomial(-2)
    off_origin = RationalScale(CLaurent.constant(1), Z - 1)
    assert not off_origin.is_laurent
    with raises(UnsupportedPoleStructure):
        off_origin.as_laurent()
    pair = PreimagePair(QLaurent.constant(QI) + QLaurent.monomial(1, ONE), off_origin)
    with raises(UnsupportedPoleStructure):
        pair.phi()
    z = random_points(np.random.default_rng(3), 7) + 3
    assert pair.phi_numeric(z).shape == (7, 4)


def test_polynomial_preimage(rng):
    for _ in range(TRIALS):
        phi, _ = random_isotropic_curve(rng, degree=2, valuation=0, scale_degree=1, bound=3)
        pair = pair_from_phi(phi)
        assert pair.certifies(phi)
        assert pair.A.is_polynomial
        assert pair.scale.is_polynomial
        assert qsnorm(pair.A) == CLaurent.constant(1)
        assert pair.scale.num.degree + 2 * pair.A.degree >= phi.phi.degree


def test_rational_preimage(rng):
    for _ in range(TRIALS // 5):
        phi, _ = random_isotropic_curve(rng, degree=1, valuation=-1, scale_degree=0, bound=3)
        assert pair_from_phi(phi).certifies(phi)


def test_real_preimage(rng):
    for _ in range(200):
        A = random_qlaurent(rng, 2, -1, 4)
        B = real_preimage(A)
        assert B.is_real
        assert B * L * B.conj_quat() == A * L * A.conj_quat()


def test_canonical_sign(rng):
    for _ in range(TRIALS):
        A = random_qlaurent(rng, 2, 0, 4)
        if A.is_zero:
            continue
        assert canonical_sign(-A) == canonical_sign(A)
        assert canonical_sign(A) in (A, -A)


def test_convert():
    curve = catenoid_phi()
    fg = convert(curve, "fg")
    assert representation_name(fg) == "fg"
    assert convert(fg, "phi") == curve
    assert convert(curve, "phi") is curve
    pair = convert(richmond_phi(), "pair")
    assert convert(pair, "phi") == richmond_phi()
    with raises(ValueError):
        convert(curve, "spinor")
    with raises(TypeError):
        representation_name(42)


def test_convert_pqw(rng):
    phi, _ = random_isotropic_curve(rng, degree=2, valuation=0, scale_degree=1, bound=2)
    d = convert(phi, "pqw")
    assert representation_name(d) == "pqw"
    assert convert(d, "phi") == phi
