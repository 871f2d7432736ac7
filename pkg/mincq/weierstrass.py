"""Representations of isotropic curves and the conversions among them.

An isotropic curve Phi = Phi1 i + Phi2 j + Phi3 k satisfies Phi1^2 + Phi2^2 + Phi3^2 = 0.
It can be given as

- the curve itself (``IsotropicCurve``),
- Weierstrass data f, g with Phi = (f (1 - g^2) i + I f (1 + g^2) j + 2 f g k) / 2 (``WEData``),
- polynomials p, q, w with Phi = w (p^2 - q^2, 2 p q, I (p^2 + q^2)) (``PQWData``),
- a preimage pair with Phi = lambda A L Ac, L = i + I j (``PreimagePair``).

Preimages are never unique (A may be multiplied from the right by the
stabilizer of L), so conversions promise the certificate lambda A L Ac = Phi,
not a particular representative.

Class structure:
- IsotropicCurve
- WEData
- PQWData
- RationalScale: lambda as numerator / denominator
- PreimagePair
"""

import logging
from dataclasses import dataclass, field

from mincq import defaults
from mincq.cq_core import ComplexQuaternion, L, IMAG
from mincq.polyring import (
    CLaurent,
    QLaurent,
    qsnorm,
    exact_div,
    gcd,
    gcd_many,
    bezout,
    reduce_fraction,
)
from mincq.sylvester import find_conjugator, solve_conjugator
from mincq.errors import (
    NotIsotropic,
    DegenerateWE,
    IncompatibleWE,
    NonPolynomialScale,
    NotPolynomial,
    InexactDivision,
    UnsupportedPoleStructure,
)

logger = logging.getLogger(__name__)

REPRESENTATIONS = ("phi", "fg", "pqw", "pair")


def isotropy_defect(phi):
    """Phi1^2 + Phi2^2 + Phi3^2 as a CLaurent."""
    _, c1, c2, c3 = QLaurent.coerce(phi).components()
    return c1 * c1 + c2 * c2 + c3 * c3


@dataclass(frozen=True)
class IsotropicCurve:
    """A quaternion Laurent polynomial checked to be scalar free and isotropic.

    Raises:
        NotIsotropic: On construction, if either check fails.
    """

    phi: QLaurent

    def __post_init__(self):
        phi = QLaurent.coerce(self.phi)
        object.__setattr__(self, "phi", phi)
        if not phi.scalar_part().is_zero:
            raise NotIsotropic(f"Phi has the scalar part {phi.scalar_part()}")
        defect = isotropy_defect(phi)
        if not defect.is_zero:
            raise NotIsotropic(f"isotropy defect {defect} does not vanish")

    def components(self):
        return self.phi.components()[1:]

    @property
    def is_polynomial(self):
        return self.phi.is_polynomial

    def __eq__(self, other):
        if isinstance(other, IsotropicCurve):
            return self.phi == other.phi
        return NotImplemented

    def __hash__(self):
        return hash(self.phi)

    def __str__(self):
        return str(self.phi)


@dataclass(frozen=True)
class WEData:
    """Weierstrass data f and g = g_num / g_den."""

    f: CLaurent
    g_num: CLaurent
    g_den: CLaurent = field(default_factory=lambda: CLaurent.constant(1))

    def __post_init__(self):
        for name in ("f", "g_num", "g_den"):
            object.__setattr__(self, name, CLaurent.coerce(getattr(self, name)))
        if self.g_den.is_zero:
            raise ZeroDivisionError("g has a zero denominator")


@dataclass(frozen=True)
class PQWData:
    p: CLaurent
    q: CLaurent
    w: CLaurent

    def __post_init__(self):
        for name in ("p", "q", "w"):
            value = CLaurent.coerce(getattr(self, name))
            if not value.is_polynomial:
                raise NonPolynomialScale(f"{name} = {value} is not a polynomial")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class RationalScale:
    """Scale factor lambda = num / den."""

    num: CLaurent
    den: CLaurent = field(default_factory=lambda: CLaurent.constant(1))

    def __post_init__(self):
        object.__setattr__(self, "num", CLaurent.coerce(self.num))
        object.__setattr__(self, "den", CLaurent.coerce(self.den))
        if self.den.is_zero:
            raise ZeroDivisionError("scale with a zero denominator")

    @classmethod
    def of(cls, value):
        if isinstance(value, cls):
            return value
        return cls(CLaurent.coerce(value))

    def reduced(self):
        return RationalScale(*reduce_fraction(self.num, self.den))

    @property
    def is_laurent(self):
        return self.den.is_monomial

    def as_laurent(self):
        if not self.is_laurent:
            raise UnsupportedPoleStructure(f"scale {self} has poles away from 0")
        return (self.num / self.den.leading()).shift(-self.den.degree)

    @property
    def is_polynomial(self):
        return self.is_laurent and self.as_laurent().is_polynomial

    def evaluate_numeric(self, z):
        return self.num.evaluate_numeric(z) / self.den.evaluate_numeric(z)

    def to_text(self):
        return {"num": self.num.to_text(), "den": self.den.to_text()}

    def __str__(self):
        if self.is_laurent:
            return str(self.as_laurent())
        return f"({self.num}) / ({self.den})"


@dataclass(frozen=True)
class PreimagePair:
    """Preimage A and scale lambda with Phi = lambda A L Ac."""

    A: QLaurent
    scale: RationalScale = field(default_factory=lambda: RationalScale(CLaurent.constant(1)))

    def __post_init__(self):
        object.__setattr__(self, "A", QLaurent.coerce(self.A))
        object.__setattr__(self, "scale", RationalScale.of(self.scale).reduced())

    @property
    def lam(self):
        """lambda as a CLaurent when possible, else the RationalScale."""
        return self.scale.as_laurent() if self.scale.is_laurent else self.scale

    def core(self):
        """A L Ac."""
        return self.A * L * self.A.conj_quat()

    def phi(self):
        """The isotropic curve lambda A L Ac; it must be a Laurent polynomial."""
        try:
            phi = exact_div(self.scale.num * self.core(), self.scale.den)
        except InexactDivision:
            raise UnsupportedPoleStructure(
                "lambda A L Ac has poles away from 0, use phi_numeric"
            ) from None
        return IsotropicCurve(phi)

    def phi_numeric(self, z):
        """Floating Phi(z), shape z.shape + (4,)."""
        lam = self.scale.evaluate_numeric(z)
        return lam[..., None] * self.core().evaluate_numeric(z)

    def certifies(self, phi):
        """Exact check lambda A L Ac = Phi."""
        phi = phi.phi if isinstance(phi, IsotropicCurve) else QLaurent.coerce(phi)
        return self.scale.den * phi == self.scale.num * self.core()


# --- Weierstrass data ---


def phi_from_fg(d):
    """Phi = (f (1 - g^2), I f (1 + g^2), 2 f g) / 2 with g = n / m.

    Raises:
        IncompatibleWE: The result is not a Laurent polynomial.
    """
    f, n, m = d.f, d.g_num, d.g_den
    m2 = m * m
    try:
        c1 = exact_div(f * (m2 - n * n), m2) / 2
        c2 = exact_div(f * (m2 + n * n), m2) * IMAG / 2
        c3 = exact_div(f * n * m, m2)
    except InexactDivision as err:
        raise IncompatibleWE(f"f = {f}, g = ({n})/({m}) do not give a Laurent curve") from err
    return IsotropicCurve(QLaurent.from_components(None, c1, c2, c3))


def fg_from_phi(phi):
    """f = Phi1 - I Phi2, g = Phi3 / f (reduced).

    Raises:
        DegenerateWE: Phi1 - I Phi2 vanishes identically.
    """
    c1, c2, c3 = _curve(phi).components()
    f = c1 - IMAG * c2
    if f.is_zero:
        raise DegenerateWE("Phi1 - I Phi2 vanishes identically, g is undefined")
    n, m = reduce_fraction(c3, f)
    return WEData(f, n, m)


# --- (p, q, w) data ---


def phi_from_pqw(d):
    p, q, w = d.p, d.q, d.w
    p2, q2 = p * p, q * q
    return IsotropicCurve(QLaurent.from_components(None, w * (p2 - q2), w * 2 * p * q, w * IMAG * (p2 + q2)))


def pair_from_pqw(d):
    """A = p + p i + q j + q k with lambda = w / 2 (A L Ac = 2 (p^2 - q^2, 2 p q, I (p^2 + q^2)))."""
    A = QLaurent.from_components(d.p, d.p, d.q, d.q)
    return PreimagePair(A, RationalScale(d.w / 2))


def pqw_from_pair(pair):
    """p = (a0 + a1 + I a2 - I a3) / 2, q = (I a0 - I a1 + a2 + a3) / 2, w = 2 lambda.

    Raises:
        NonPolynomialScale: lambda or A is not polynomial.
    """
    if not pair.scale.is_polynomial:
        raise NonPolynomialScale(f"lambda = {pair.scale} is not a polynomial")
    if not pair.A.is_polynomial:
        raise NonPolynomialScale(f"A = {pair.A} is not a polynomial")
    a0, a1, a2, a3 = pair.A.components()
    p = (a0 + a1 + IMAG * a2 - IMAG * a3) / 2
    q = (IMAG * a0 - IMAG * a1 + a2 + a3) / 2
    return PQWData(p, q, pair.scale.as_laurent() * 2)


# --- preimage pairs from the curve ---


def canonical_sign(A):
    """Fixes the sign of A: the first nonzero rational part (real, then imaginary,
    over z0..z3) of the lowest coefficient is made positive."""
    A = QLaurent.coerce(A)
    if A.is_zero:
        return A
    for c in A.coeff(A.valuation).coeffs:
        for part in (c.re, c.im):
            if part:
                return -A if part < 0 else A
    return A


def pair_from_phi_rational(phi, budget=defaults.conjugator["budget"]):
    """A = chi from the conjugator ladder with g = L, lambda = 1 / As.

    If As is a constant with an exact square root, the root is divided out of
    A so that lambda = 1.
    """
    curve = _curve(phi)
    h, A = find_conjugator(curve.phi, L, budget)
    norm = qsnorm(A)
    scale = RationalScale(CLaurent.constant(1), norm)
    if norm.is_constant:
        root = norm.coeff(0).sqrt_exact()
        if root is not None:
            A = canonical_sign(A / root)
            scale = RationalScale(CLaurent.constant(1))
    pair = PreimagePair(A, scale)
    logger.debug(f"rational preimage with seed h = {h}: A = {pair.A}, lambda = {pair.scale}")
    assert pair.certifies(curve), "preimage certificate failed"
    return pair


def pair_from_phi_polynomial(phi, budget=defaults.conjugator["budget"]):
    """Polynomial preimage pair with As = 1.

    Steps: g = gcd(Phi1, Phi2, Phi3) and Phi' = Phi / g; a rational preimage C
    of Phi'; C12 = C1 + I C2, C03 = I C0 + C3, sigma = gcd(C12, C03) and the
    constant kappa = Cs / sigma^2; Bezout cofactors alpha, beta of
    (C12 / sigma, C03 / sigma); h = (alpha - beta j) / 2 and
    A = kappa Phi' h + h L. Then As = (alpha C12 / sigma + beta C03 / sigma)^2 = 1,
    A L Ac = kappa Phi' and lambda = g / kappa.

    Raises:
        NotPolynomial: Phi has negative exponents.
    """
    curve = _curve(phi)
    if not curve.is_polynomial:
        raise NotPolynomial(f"Phi = {curve.phi} is not a polynomial")
    lam = gcd_many(*curve.components())
    reduced = exact_div(curve.phi, lam)
    _, C = find_conjugator(reduced, L, budget)
    c0, c1, c2, c3 = C.components()
    c12, c03 = c1 + IMAG * c2, IMAG * c0 + c3
    sigma = gcd(c12, c03)
    _, alpha, beta = bezout(exact_div(c12, sigma), exact_div(c03, sigma))
    kappa = exact_div(qsnorm(C), sigma * sigma)
    if not kappa.is_constant:
        raise InexactDivision(f"Cs / sigma^2 = {kappa} is not constant")
    kappa = kappa.coeff(0)
    h = QLaurent.from_components(alpha / 2, None, -beta / 2, None)
    A = canonical_sign(solve_conjugator(reduced * kappa, L, h))
    norm = qsnorm(A)
    if norm != CLaurent.constant(1):
        raise InexactDivision(f"As = {norm} is not 1")
    lam = lam / kappa
    logger.debug(f"polynomial preimage: deg lambda = {lam.degree}, sigma = {sigma}, kappa = {kappa}, A = {A}")
    pair = PreimagePair(A, RationalScale(lam))
    assert pair.certifies(curve), "preimage certificate failed"
    return pair


def pair_from_phi(phi, budget=defaults.conjugator["budget"]):
    """Polynomial construction for polynomial Phi, rational construction otherwise."""
    curve = _curve(phi)
    if curve.is_polynomial and not curve.phi.is_zero:
        return pair_from_phi_polynomial(curve, budget)
    return pair_from_phi_rational(curve, budget)


def real_preimage(A):
    """Real preimage B with B L Bc = A L Ac.

    Coefficient-wise B = (Re a0 + Im a3) + (Re a1 - Im a2) i + (Im a1 + Re a2) j + (Re a3 - Im a0) k.
    """
    A = QLaurent.coerce(A)
    terms = {}
    for e, a in A.terms.items():
        a0, a1, a2, a3 = a.coeffs
        terms[e] = (
            a0.re + a3.im,
            a1.re - a2.im,
            a1.im + a2.re,
            a3.re - a0.im,
        )
    return QLaurent({e: ComplexQuaternion(*c) for e, c in terms.items()})


def random_isotropic_curve(rng, degree=2, valuation=0, scale_degree=0, bound=3):
    """lambda A L Ac for random exact A (degree ``degree``) and lambda, as a property test input."""
    from mincq.util.sampling import random_qlaurent, random_claurent

    while True:
        A = random_qlaurent(rng, degree, valuation, bound)
        lam = random_claurent(rng, scale_degree, 0, bound)
        if not lam.is_zero and not qsnorm(A).is_zero:
            pair = PreimagePair(A, RationalScale(lam))
            return pair.phi(), pair


# --- dispatch ---


def _curve(value):
    if isinstance(value, IsotropicCurve):
        return value
    return IsotropicCurve(value)


def to_phi(rep):
    """The isotropic curve of any representation."""
    if isinstance(rep, IsotropicCurve):
        return rep
    if isinstance(rep, WEData):
        return phi_from_fg(rep)
    if isinstance(rep, PQWData):
        return phi_from_pqw(rep)
    if isinstance(rep, PreimagePair):
        return rep.phi()
    return IsotropicCurve(rep)


def representation_name(rep):
    for name, cls in (("phi", IsotropicCurve), ("fg", WEData), ("pqw", PQWData), ("pair", PreimagePair)):
        if isinstance(rep, cls):
            return name
    raise TypeError(f"{type(rep).__name__} is not a representation")


def convert(rep, target, budget=defaults.conjugator["budget"]):
    """Converts a representation into ``target`` (one of phi, fg, pqw, pair)."""
    if target not in REPRESENTATIONS:
        raise ValueError(f"unknown representation '{target}', valid: {REPRESENTATIONS}")
    if representation_name(rep) == target:
        return rep
    if target == "pqw" and isinstance(rep, PreimagePair) and rep.scale.is_polynomial:
        return pqw_from_pair(rep)
    curve = to_phi(rep)
    if target == "phi":
        return curve
    if target == "fg":
        return fg_from_phi(curve)
    if target == "pair":
        return pair_from_phi(curve, budget)
    return pqw_from_pair(pair_from_phi_polynomial(curve, budget))
