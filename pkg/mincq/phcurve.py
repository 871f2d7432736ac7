"""Spatial Pythagorean hodograph curves.

The hodograph gamma'(t) = lambda(t) A(t) i Ac(t) of a real quaternion
polynomial A and a real Laurent polynomial lambda satisfies
x'^2 + y'^2 + z'^2 = sigma^2 with sigma = lambda As. Integration is exact; a
rational lambda gives a rational curve only if every residue vanishes.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from mincq import defaults
from mincq.cq_core import ComplexQuaternion, ComplexScalar, QI
from mincq.polyring import CLaurent, QLaurent, qsnorm, antiderivative, compose_affine
from mincq.util import to_structured
from mincq.errors import NotRealPreimage, NonzeroResidue, NotVectorial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PHSpec:
    """Preimage A (real coefficients) and scale lambda (real coefficients).

    Raises:
        NotRealPreimage: A or lambda has a coefficient with a nonzero imaginary part.
    """

    A: QLaurent
    lam: CLaurent = field(default_factory=lambda: CLaurent.constant(1))

    def __post_init__(self):
        object.__setattr__(self, "A", QLaurent.coerce(self.A))
        object.__setattr__(self, "lam", CLaurent.coerce(self.lam))
        if not self.A.is_real:
            raise NotRealPreimage(f"A = {self.A} has complex coefficients")
        if not self.lam.is_real:
            raise NotRealPreimage(f"lambda = {self.lam} has complex coefficients")
        if self.lam.is_zero:
            raise ValueError("lambda vanishes identically")


def hodograph(spec):
    """lambda A i Ac, a vector valued Laurent polynomial."""
    h = spec.A * QI * spec.A.conj_quat() * spec.lam
    assert h.scalar_part().is_zero, "A i Ac has a scalar part"
    return h


def speed(spec):
    """sigma = lambda As."""
    return spec.lam * qsnorm(spec.A)


def ph_defect(spec):
    """x'^2 + y'^2 + z'^2 - sigma^2, identically zero for every PHSpec."""
    _, x, y, z = hodograph(spec).components()
    sigma = speed(spec)
    return x * x + y * y + z * z - sigma * sigma


def _dot(h, axis):
    _, x, y, z = h.components()
    return x * axis.z1 + y * axis.z2 + z * axis.z3


def constant_slope_defect(spec, axis, sin_phi):
    """<gamma', axis>^2 - sin^2(phi) |axis|^2 sigma^2 as an exact Laurent polynomial.

    Vanishes when the curve makes the constant angle pi/2 - phi with ``axis``.
    """
    axis = ComplexQuaternion.coerce(axis)
    if not axis.is_vector:
        raise NotVectorial(f"axis {axis} has a scalar part")
    sin_phi = ComplexScalar.coerce(sin_phi)
    dot = _dot(hodograph(spec), axis)
    sigma = speed(spec)
    return dot * dot - sigma * sigma * (sin_phi * sin_phi * axis.dot(axis))


@dataclass(frozen=True)
class ClosedFormCurve:
    """gamma(t) = base_point + the exact primitive of the hodograph."""

    gamma: QLaurent
    spec: PHSpec
    base_point: tuple = (0, 0, 0)

    @property
    def is_polynomial(self):
        return self.gamma.is_polynomial

    def hodograph(self):
        return self.gamma.derivative()

    def evaluate(self, t):
        """Real points, shape t.shape + (3,)."""
        values = self.gamma.evaluate_numeric(np.asarray(t, dtype=float))[..., 1:]
        return values.real + np.asarray(self.base_point, dtype=float)

    def sample(self, n=defaults.phcurve["samples"], interval=defaults.phcurve["interval"]):
        """Structured table with the columns t, x, y, z, speed."""
        if n < 2:
            raise ValueError(f"need at least 2 samples, got {n}")
        t = np.linspace(float(interval[0]), float(interval[1]), n)
        points = self.evaluate(t)
        sigma = speed(self.spec).evaluate_numeric(t).real
        return to_structured({"t": t, "x": points[:, 0], "y": points[:, 1], "z": points[:, 2], "speed": sigma})

    def to_text(self):
        lines = ["# gamma(t) = sum of [exponent, (x, y, z)] records"]
        for e, c in self.gamma.items():
            lines.append(f"{e}: {c.z1} {c.z2} {c.z3}")
        return "\n".join(lines) + "\n"


def integrate_curve(spec, base_point=(0, 0, 0)):
    """Exact integral of the hodograph.

    Raises:
        NonzeroResidue: The coefficient of t^-1 does not vanish, the curve would
            contain logarithms.
    """
    form = antiderivative(hodograph(spec))
    for pole, residue in form.log_terms:
        raise NonzeroResidue(pole, residue)
    logger.debug(f"PH curve of degree {form.principal.degree}, valuation {form.principal.valuation}")
    return ClosedFormCurve(form.principal, spec, tuple(base_point))


# --- preimage modifications ---


def rotate_preimage(spec, cos_alpha, sin_alpha):
    """A (cos a + i sin a): the same hodograph for a rational point on the unit circle."""
    c, s = ComplexScalar.coerce(cos_alpha), ComplexScalar.coerce(sin_alpha)
    if c * c + s * s != 1:
        raise ValueError(f"({c}, {s}) is not on the unit circle")
    return PHSpec(spec.A * ComplexQuaternion(c, s, 0, 0), spec.lam)


def reparametrize(spec, a1, a0=0):
    """A(a1 t + a0), lambda(a1 t + a0)."""
    return PHSpec(compose_affine(spec.A, a1, a0), compose_affine(spec.lam, a1, a0))


def left_multiply(spec, R):
    """R A: the hodograph becomes R gamma' Rc, a rotation scaled by Rs."""
    R = ComplexQuaternion.coerce(R)
    if not R.is_real:
        raise NotRealPreimage(f"R = {R} has complex coefficients")
    return PHSpec(QLaurent.constant(R) * spec.A, spec.lam)
