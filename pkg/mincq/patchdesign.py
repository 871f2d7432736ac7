"""Enneper patches from corner data.

A rectangle P0, P1, P2, P3 (anticlockwise) and four vectorial null
quaternions phi_0..phi_3 are the corner values Phi(P_l) of a minimal surface
with a degree one preimage iff

1. every phi_l is vectorial and null,
2. |R|^2 phi_0 + R^2 phi_1 - |R|^2 phi_2 - R^2 phi_3 = 0 with R = r1 + I r2,
3. the cross ratio of the corners equals the cross ratio of the null cone
   parameters [s_l : t_l] of the phi_l.

The preimage is then A(z) = t(z) i + s(z) for the projective map
z -> [s(z) : t(z)] through the corner parameters, scaled to match the
magnitudes, and replaced by its real form.

Cross ratios use CR(a, b, c, d) = ((a - c)(b - d)) / ((b - c)(a - d)) on
homogeneous points, so CR(x, 1, 0, inf) = x.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import atan2, tan

import sympy

from mincq import defaults
from mincq.cq_core import ComplexQuaternion, ComplexScalar, IMAG, fraction_sqrt
from mincq.polyring import CLaurent, QLaurent, compose_affine
from mincq.weierstrass import PreimagePair, RationalScale, real_preimage
from mincq.surface import Domain, SurfaceSpec, integrate_surface
from mincq.errors import (
    ZeroParameter,
    NotNull,
    NotVectorial,
    DegenerateTuple,
    NoSolution,
    NonUniqueBeyondScale,
    CrossRatioMismatch,
    ConditionsViolated,
    InvalidRectangle,
)

logger = logging.getLogger(__name__)

INFINITY = (ComplexScalar(1), ComplexScalar(0))


def _scalar(value):
    return ComplexScalar.from_sympy(sympy.expand_complex(value))


def _nullspace(rows):
    """Exact null space of a matrix of ComplexScalar entries."""
    matrix = sympy.Matrix([[ComplexScalar.coerce(x).to_sympy() for x in row] for row in rows])
    return [[_scalar(x) for x in vector] for vector in matrix.nullspace()]


# --- rectangles ---


@Domain.register("rectangle")
class RectangleDomain(Domain):
    """Rectangle with vertex P0, side lengths r1, r2 and rotation e = cos + I sin.

    P1 = P0 + r1 e, P2 = P0 + R e, P3 = P0 + I r2 e with R = r1 + I r2. All
    values are exact; (cos, sin) must be a rational point on the unit circle.

    Raises:
        InvalidRectangle: Nonpositive sides or a rotation that is not a unit.
    """

    def __init__(self, P0, r1, r2, cos=1, sin=0):
        self.P0 = ComplexScalar.coerce(P0)
        self.r1, self.r2 = Fraction(r1), Fraction(r2)
        if self.r1 <= 0 or self.r2 <= 0:
            raise InvalidRectangle(f"side lengths must be positive, got {self.r1}, {self.r2}")
        self.rotation = ComplexScalar(cos, sin)
        if self.rotation.abs2() != 1:
            raise InvalidRectangle(f"rotation {self.rotation} is not a unit complex number")

    @classmethod
    def from_angle(cls, P0, r1, r2, theta):
        """Rotation by the angle theta, rounded to a rational point of the unit circle."""
        m = Fraction(tan(theta / 2)).limit_denominator(10**9)
        cos, sin = (1 - m * m) / (1 + m * m), 2 * m / (1 + m * m)
        logger.debug(f"angle {theta} rounded to the rational rotation ({cos}, {sin})")
        return cls(P0, r1, r2, cos, sin)

    @classmethod
    def from_vertices(cls, P0, P1, P2, P3):
        """Rectangle through four exact anticlockwise vertices."""
        P0, P1, P2, P3 = (ComplexScalar.coerce(p) for p in (P0, P1, P2, P3))
        r1, r2 = fraction_sqrt((P1 - P0).abs2()), fraction_sqrt((P3 - P0).abs2())
        if not r1 or not r2:
            raise InvalidRectangle("side lengths must be nonzero rationals")
        e = (P1 - P0) / r1
        rect = cls(P0, r1, r2, e.re, e.im)
        if rect.vertices_exact() != [P0, P1, P2, P3]:
            raise InvalidRectangle(f"{[str(p) for p in (P0, P1, P2, P3)]} is not an anticlockwise rectangle")
        return rect

    @property
    def R(self):
        return ComplexScalar(self.r1, self.r2)

    @property
    def theta(self):
        return atan2(float(self.rotation.im), float(self.rotation.re))

    def vertices_exact(self):
        e = self.rotation
        return [self.P0, self.P0 + e * self.r1, self.P0 + e * self.R, self.P0 + e * IMAG * self.r2]

    def corners(self):
        return [complex(p) for p in self.vertices_exact()]

    def to_local(self, z):
        """w = (z - P0) / e, the rectangle becomes [0, r1] x [0, r2]."""
        return (ComplexScalar.coerce(z) - self.P0) / self.rotation

    def from_local(self, w):
        return self.P0 + self.rotation * ComplexScalar.coerce(w)

    def recenter(self, A):
        """A(P0 + e w) as a polynomial in the local coordinate w."""
        return compose_affine(A, self.rotation, self.P0)

    def uncenter(self, A):
        """Inverse of ``recenter``."""
        inv = self.rotation.inverse()
        return compose_affine(A, inv, -self.P0 * inv)

    def __repr__(self):
        return f"RectangleDomain({self.P0}, {self.r1}, {self.r2}, {self.rotation.re}, {self.rotation.im})"


# --- null cone ---


def null_point(s, t):
    """N(s, t) = (s^2 + t^2) i + I (s^2 - t^2) j + 2 I s t k.

    Raises:
        ZeroParameter: s = t = 0.
    """
    s, t = ComplexScalar.coerce(s), ComplexScalar.coerce(t)
    if not s and not t:
        raise ZeroParameter("(s, t) = (0, 0)")
    s2, t2 = s * s, t * t
    return ComplexQuaternion(0, s2 + t2, IMAG * (s2 - t2), IMAG * 2 * s * t)


@dataclass(frozen=True)
class NullParam:
    """Projective point [s : t] with phi = nu N(s, t); s = 1, or t = 1 when s = 0."""

    s: ComplexScalar
    t: ComplexScalar
    nu: ComplexScalar = field(default_factory=lambda: ComplexScalar(1))

    def point(self):
        return null_point(self.s, self.t)

    def homogeneous(self):
        return (self.s, self.t)

    def same_point(self, other):
        return self.s * other.t == self.t * other.s


def _check_null(phi, location="phi"):
    phi = ComplexQuaternion.coerce(phi)
    if not phi.is_vector:
        raise NotVectorial(f"{location} = {phi} has the scalar part {phi.scalar}")
    if phi.snorm():
        raise NotNull(f"{location} = {phi} has the squared norm {phi.snorm()}")
    if phi.is_zero:
        raise ZeroParameter(f"{location} vanishes")
    return phi


def null_param(phi):
    """[s : t] = [phi3 : I (phi1 + I phi2)] (or [1 : 0]) and the factor nu.

    Raises:
        NotVectorial, NotNull: phi is not on the null cone.
    """
    phi = _check_null(phi)
    _, p1, p2, p3 = phi.coeffs
    t_part = IMAG * (p1 + IMAG * p2)
    s, t = (p3, t_part) if t_part else (ComplexScalar(1), ComplexScalar(0))
    s, t = (ComplexScalar(1), t / s) if s else (ComplexScalar(0), ComplexScalar(1))
    base = null_point(s, t)
    n = next(n for n in range(1, 4) if base.coeffs[n])
    nu = phi.coeffs[n] / base.coeffs[n]
    assert base * nu == phi, "null cone parameters do not reproduce phi"
    return NullParam(s, t, nu)


def _homogeneous(point):
    if isinstance(point, NullParam):
        return point.homogeneous()
    if isinstance(point, tuple):
        s, t = point
        return ComplexScalar.coerce(s), ComplexScalar.coerce(t)
    return ComplexScalar.coerce(point), ComplexScalar(1)


def _det(a, b):
    return a[0] * b[1] - a[1] * b[0]


def cross_ratio(a, b, c, d):
    """CR(a, b, c, d) = det(a, c) det(b, d) / (det(b, c) det(a, d)).

    Points are exact numbers, homogeneous pairs (s, t) (``INFINITY`` = (1, 0))
    or NullParam.

    Raises:
        DegenerateTuple: Fewer than three distinct points, or an infinite value.
    """
    a, b, c, d = (_homogeneous(x) for x in (a, b, c, d))
    points = [a, b, c, d]
    distinct = []
    for p in points:
        if not (p[0] or p[1]):
            raise ZeroParameter("(s, t) = (0, 0)")
        if all(_det(p, q) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise DegenerateTuple("the cross ratio needs at least three distinct points")
    denominator = _det(b, c) * _det(a, d)
    if not denominator:
        raise DegenerateTuple("the cross ratio is infinite")
    return _det(a, c) * _det(b, d) / denominator


# --- conditions ---


@dataclass(frozen=True)
class CornerData:
    """Corner values phi_0..phi_3 of Phi; validated by ``check_conditions``."""

    phis: tuple

    def __post_init__(self):
        if len(self.phis) != 4:
            raise ValueError(f"four corner values are required, got {len(self.phis)}")
        object.__setattr__(self, "phis", tuple(ComplexQuaternion.coerce(p) for p in self.phis))

    @classmethod
    def from_directions(cls, scales, directions):
        return cls(tuple(ComplexQuaternion.coerce(d) * ComplexScalar.coerce(nu) for nu, d in zip(scales, directions)))

    def scaled(self, factor):
        return CornerData(tuple(p * ComplexScalar.coerce(factor) for p in self.phis))

    def to_text(self):
        return [p.to_text() for p in self.phis]


def linear_relation_weights(rect):
    """(|R|^2, R^2, -|R|^2, -R^2), annihilating 1, z and z^2 at the corners."""
    R = rect.R
    n, r2 = ComplexScalar(R.abs2()), R * R
    return (n, r2, -n, -r2)


@dataclass
class ConditionReport:
    """Defects of the three corner conditions.

    Attributes:
        null_defects (list): (scalar part, squared norm) per corner.
        linear_defect (ComplexQuaternion): Weighted sum of the corner values.
        cross_ratio_corners (ComplexScalar): CR(P0, P1, P2, P3).
        cross_ratio_params (ComplexScalar): CR of the null cone parameters, None if undefined.
        params (list): NullParam per corner, None if some corner is not null.
        constant (bool): All parameters are the same projective point.
    """

    null_defects: list
    linear_defect: ComplexQuaternion
    cross_ratio_corners: ComplexScalar
    cross_ratio_params: object = None
    params: object = None
    constant: bool = False

    @property
    def null_ok(self):
        return all(not a and not b for a, b in self.null_defects)

    @property
    def linear_ok(self):
        return self.linear_defect.is_zero

    @property
    def cross_ratio_ok(self):
        if self.params is None:
            return False
        return self.constant or self.cross_ratio_params == self.cross_ratio_corners

    @property
    def passed(self):
        return self.null_ok and self.linear_ok and self.cross_ratio_ok

    def failures(self):
        names = []
        if not self.null_ok:
            names.append("nullity")
        if not self.linear_ok:
            names.append("linear relation")
        if self.null_ok and not self.cross_ratio_ok:
            names.append("cross ratio")
        return names

    def to_text(self):
        lines = ["# corner conditions"]
        for n, (scalar, norm) in enumerate(self.null_defects):
            lines.append(f"nullity[{n}]: scalar = {scalar}, norm = {norm}")
        lines.append(f"linear relation: {self.linear_defect}")
        params = "undefined" if self.cross_ratio_params is None else str(self.cross_ratio_params)
        if self.constant:
            params = "constant"
        lines.append(f"cross ratio: corners = {self.cross_ratio_corners}, parameters = {params}")
        lines.append(f"passed: {self.passed}")
        if not self.passed:
            lines.append(f"failures: {', '.join(self.failures())}")
        return "\n".join(lines) + "\n"


def check_conditions(rect, data):
    """Evaluates the three corner conditions; reports instead of raising."""
    null_defects = [(p.scalar, p.snorm()) for p in data.phis]
    linear = sum(
        (p * w for p, w in zip(data.phis, linear_relation_weights(rect))), ComplexQuaternion()
    )
    report = ConditionReport(null_defects, linear, cross_ratio(*rect.vertices_exact()))
    if report.null_ok and not any(p.is_zero for p in data.phis):
        params = [null_param(p) for p in data.phis]
        report.params = params
        report.constant = all(params[0].same_point(p) for p in params[1:])
        if not report.constant:
            try:
                report.cross_ratio_params = cross_ratio(*params)
            except DegenerateTuple:
                logger.debug("cross ratio of the corner parameters is degenerate")
    logger.debug(f"corner conditions: passed = {report.passed}, failures = {report.failures()}")
    return report


# --- scales and the projective map ---


def solve_scales(rect, directions):
    """Factors nu_l with sum_l w_l nu_l d_l = 0, normalized to nu_3 = 1.

    Raises:
        NoSolution: Only the trivial solution, or a vanishing factor.
        NonUniqueBeyondScale: More than a one dimensional family.
    """
    directions = [_check_null(d, f"directions[{n}]") for n, d in enumerate(directions)]
    weights = linear_relation_weights(rect)
    rows = [[w * d.coeffs[n] for w, d in zip(weights, directions)] for n in range(1, 4)]
    space = _nullspace(rows)
    if not space:
        raise NoSolution("the linear relation only has the trivial solution")
    if len(space) > 1:
        raise NonUniqueBeyondScale(f"{len(space)} dimensional family of scales")
    nu = space[0]
    pivot = nu[3] if nu[3] else next(x for x in nu if x)
    nu = [x / pivot for x in nu]
    if not all(nu):
        raise NoSolution(f"scales {[str(x) for x in nu]} contain a zero")
    return tuple(nu)


@dataclass(frozen=True)
class MobiusMap:
    """z -> [a z + b : c z + d]."""

    a: ComplexScalar
    b: ComplexScalar
    c: ComplexScalar
    d: ComplexScalar

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, ComplexScalar.coerce(getattr(self, name)))

    def __call__(self, z):
        z = ComplexScalar.coerce(z)
        return self.a * z + self.b, self.c * z + self.d

    @property
    def is_constant(self):
        return not (self.a * self.d - self.b * self.c)

    def s(self):
        return CLaurent({1: self.a, 0: self.b})

    def t(self):
        return CLaurent({1: self.c, 0: self.d})

    def projectively_equal(self, other):
        mine, theirs = (self.a, self.b, self.c, self.d), (other.a, other.b, other.c, other.d)
        n = next(n for n, x in enumerate(mine) if x)
        if not theirs[n]:
            return False
        ratio = theirs[n] / mine[n]
        return all(x * ratio == y for x, y in zip(mine, theirs))

    def __str__(self):
        return f"s = {self.s()}, t = {self.t()}"


def mobius_from_corners(rect, params):
    """Projective map with f(P_l) = [s_l : t_l], fitted through l = 0, 1, 2.

    Scaled so that f(P0) = (s_0, t_0) exactly. For four equal parameters the
    map is constant.

    Raises:
        CrossRatioMismatch: The fourth corner is not mapped to [s_3 : t_3].
    """
    params = [p if isinstance(p, NullParam) else NullParam(*_homogeneous(p)) for p in params]
    if all(params[0].same_point(p) for p in params[1:]):
        return MobiusMap(0, params[0].s, 0, params[0].t)
    P = rect.vertices_exact()
    # unknowns a, b, c, d, k0, k1, k2 with (a P + b, c P + d) = k (s, t)
    rows = []
    for n in range(3):
        k = [0, 0, 0]
        k[n] = -params[n].s
        rows.append([P[n], 1, 0, 0] + k)
        k = [0, 0, 0]
        k[n] = -params[n].t
        rows.append([0, 0, P[n], 1] + k)
    space = _nullspace(rows)
    if len(space) != 1:
        raise DegenerateTuple("the first three corner parameters do not determine a projective map")
    a, b, c, d, k0, _, _ = space[0]
    if not k0:
        raise DegenerateTuple("the projective map is singular at P0")
    f = MobiusMap(a / k0, b / k0, c / k0, d / k0)
    if _det(f(P[3]), params[3].homogeneous()):
        raise CrossRatioMismatch(f"the fitted map sends P3 to {[str(x) for x in f(P[3])]}, not [{params[3].s} : {params[3].t}]")
    logger.debug(f"projective map {f}")
    return f


def linear_preimage(rect, data):
    """Degree one preimage pair with A(P_l) L Ac(P_l) = phi_l at all four corners.

    A = sqrt(mu) (t(z) i + s(z)) in real form, where mu matches the magnitudes.
    When mu has no square root in Q(I) it is returned as lambda instead.

    Raises:
        ConditionsViolated: A corner condition fails.
    """
    report = check_conditions(rect, data)
    if not report.passed:
        raise ConditionsViolated(report)
    f = mobius_from_corners(rect, report.params)
    A = QLaurent.from_components(f.s(), f.t())
    phi0 = data.phis[0]
    n = next(n for n in range(1, 4) if phi0.coeffs[n])
    mu = phi0.coeffs[n] / null_point(*f(rect.P0)).coeffs[n]
    root = mu.sqrt_exact()
    if root is not None:
        pair = PreimagePair(real_preimage(A * root))
    else:
        logger.warning(f"corner scale {mu} has no square root in Q(I), it is kept as lambda")
        pair = PreimagePair(real_preimage(A), RationalScale(CLaurent.constant(mu)))
    core = pair.core()
    for n, (P, phi) in enumerate(zip(rect.vertices_exact(), data.phis)):
        value = core.evaluate(P) * pair.scale.num.coeff(0)
        assert value == phi, f"corner {n}: {value} != {phi}"
    logger.debug(f"linear preimage A = {pair.A}, lambda = {pair.scale}")
    return pair


def patch(
    rect,
    data,
    base_point=(0, 0, 0),
    part=defaults.surface["part"],
    convention=defaults.surface["convention"],
):
    """Enneper patch over ``rect`` interpolating the corner values.

    Returns:
        tuple: (SurfaceSpec, ClosedFormSurface, PreimagePair)
    """
    pair = linear_preimage(rect, data)
    spec = SurfaceSpec(pair.phi(), tuple(base_point), part, rect, convention)
    return spec, integrate_surface(spec), pair


def random_rectangle(rng, bound=3):
    """Random exact rectangle with a rational rotation, for property tests."""
    from mincq.util.sampling import random_rational, random_scalar

    while True:
        r1, r2 = abs(random_rational(rng, bound)), abs(random_rational(rng, bound))
        if r1 and r2:
            break
    m = random_rational(rng, bound)
    cos, sin = (1 - m * m) / (1 + m * m), 2 * m / (1 + m * m)
    return RectangleDomain(random_scalar(rng, bound), r1, r2, cos, sin)

