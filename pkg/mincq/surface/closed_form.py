"""Closed form integration of isotropic curves to surfaces.

X(u, v) = c + factor * part(F(z) - F(z0)), z = u + I v, where F is the exact
antiderivative of Phi. ``part`` is "re" (Phi = X_u - I X_v) or "im" (the
conjugate surface). ``factor`` is 1 for the "rder" convention and 2 for the
"corner" convention, where Phi = (X_u - I X_v) / 2.

Terms z^-m are written as conj(z)^m / (u^2 + v^2)^m; a log term r log(z)
with r = a + b I contributes a ln|z| - b arg(z) to the real part and
b ln|z| + a arg(z) to the imaginary part, with arg the principal argument.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import sympy

from mincq import defaults
from mincq.cq_core import ComplexScalar, to_fraction
from mincq.polyring import antiderivative
from mincq.weierstrass import IsotropicCurve, PreimagePair
from mincq.errors import PoleInDomain, PoleEvaluation, ParseError

logger = logging.getLogger(__name__)

U, V = sympy.symbols("u v", real=True)
RHO = U**2 + V**2
PARTS = ("re", "im")
CONVENTIONS = {"rder": 1, "corner": 2}
DERIVATIVES = ("Xu", "Xv", "Xuu", "Xuv", "Xvv")


def _exact(value):
    if isinstance(value, float):
        return sympy.nsimplify(value, rational=True)
    return sympy.Rational(str(to_fraction(value)))


def laurent_real_imag(p):
    """Real and imaginary parts of a CLaurent at z = u + I v as sympy expressions."""
    z, zbar = U + sympy.I * V, U - sympy.I * V
    re_total, im_total = sympy.Integer(0), sympy.Integer(0)
    for e, c in p.items():
        if e >= 0:
            term = sympy.expand(c.to_sympy() * z**e)
            denominator = 1
        else:
            term = sympy.expand(c.to_sympy() * zbar ** (-e))
            denominator = RHO ** (-e)
        re, im = term.as_real_imag()
        re_total += re / denominator
        im_total += im / denominator
    return re_total, im_total


def log_real_imag(residue):
    """Real and imaginary parts of residue * log(z)."""
    a, b = sympy.Rational(str(residue.re)), sympy.Rational(str(residue.im))
    ln_abs, arg = sympy.log(RHO) / 2, sympy.atan2(V, U)
    return a * ln_abs - b * arg, b * ln_abs + a * arg


def _check_part(part, convention):
    if part not in PARTS:
        raise ParseError(f"part must be one of {PARTS}, got '{part}'", "part")
    if convention not in CONVENTIONS:
        raise ParseError(f"convention must be one of {tuple(CONVENTIONS)}, got '{convention}'", "convention")


def _broadcast(func, u, v):
    shape = np.broadcast(u, v).shape
    return np.broadcast_to(np.asarray(func(u, v), dtype=float), shape)


@dataclass(frozen=True)
class SurfaceSpec:
    """What to integrate and where.

    Attributes:
        phi (IsotropicCurve): Derivative data.
        base_point (tuple): Translation c.
        part (str): "re" or "im".
        domain (Domain): Parameter domain, checked against poles and branch cuts.
        convention (str): "rder" or "corner".
        z0 (ComplexScalar): Lower integration limit; None integrates from the constant-free primitive.
    """

    phi: IsotropicCurve
    base_point: tuple = (0, 0, 0)
    part: str = defaults.surface["part"]
    domain: Optional[object] = None
    convention: str = defaults.surface["convention"]
    z0: Optional[ComplexScalar] = None


class ClosedFormSurface:
    """Surface X(u, v) from an exact antiderivative.

    Parameters:
        form (AntiderivativeForm): Primitive of Phi.
        base_point (tuple): Translation c (exact or float entries).
        part (str): "re" or "im".
        convention (str): "rder" or "corner".
        domain (Domain): Optional domain, checked against the pole at 0 and the branch cut.
        z0 (ComplexScalar): Optional lower integration limit.

    Attributes:
        expressions (tuple): Three sympy expressions in ``U``, ``V``.
    """

    def __init__(self, form, base_point=(0, 0, 0), part="re", convention="rder", domain=None, z0=None):
        _check_part(part, convention)
        self.form = form
        self.part = part
        self.convention = convention
        self.factor = CONVENTIONS[convention]
        self.domain = domain
        self.base_point = tuple(_exact(c) for c in base_point)
        self.z0 = None if z0 is None else ComplexScalar.coerce(z0)
        self._check_domain()

        index = 0 if part == "re" else 1
        comps = form.principal.components()[1:]
        expressions = []
        for n in range(3):
            expr = laurent_real_imag(comps[n])[index]
            for _, residue in form.log_terms:
                expr += log_real_imag(residue.coeffs[n + 1])[index]
            expressions.append(expr)
        if self.z0 is not None:
            u0, v0 = _exact(self.z0.re), _exact(self.z0.im)
            expressions = [e - e.subs({U: u0, V: v0}) for e in expressions]
        self.expressions = tuple(
            c + self.factor * e for c, e in zip(self.base_point, expressions)
        )
        self._compiled = None
        logger.debug(f"closed form surface ({part}, {convention}): {self.expressions}")

    @property
    def has_pole(self):
        return not self.form.principal.is_polynomial or bool(self.form.log_terms)

    @property
    def uses_argument(self):
        """Whether the chosen part contains arg(z) (sensitive to the branch cut)."""
        for _, residue in self.form.log_terms:
            for c in residue.coeffs[1:]:
                if (c.im if self.part == "re" else c.re) != 0:
                    return True
        return False

    @property
    def is_rational(self):
        return self.form.is_rational

    def _check_domain(self):
        if self.domain is None:
            return
        if self.has_pole and bool(self.domain.contains(0)):
            raise PoleInDomain("the domain contains the pole z = 0")
        if self.uses_argument and self.domain.crosses_negative_real_axis():
            raise PoleInDomain("the domain meets the branch cut of log(z) on the negative real axis")

    def _compile(self):
        if self._compiled is None:
            X = sympy.Matrix(self.expressions)
            Xu, Xv = X.diff(U), X.diff(V)
            exprs = {"X": X, "Xu": Xu, "Xv": Xv, "Xuu": Xu.diff(U), "Xuv": Xu.diff(V), "Xvv": Xv.diff(V)}
            self._compiled = {
                key: [sympy.lambdify((U, V), e, "numpy") for e in value]
                for key, value in exprs.items()
            }
        return self._compiled

    def _eval(self, key, u, v):
        u, v = np.asarray(u, dtype=float), np.asarray(v, dtype=float)
        if self.has_pole and np.any((u == 0) & (v == 0)):
            raise PoleEvaluation("evaluation at the pole z = 0")
        return np.stack([_broadcast(f, u, v) for f in self._compile()[key]], axis=-1)

    def evaluate(self, u, v):
        """X(u, v), shape broadcast(u, v) + (3,)."""
        return self._eval("X", u, v)

    def evaluate_exact(self, u, v):
        """Exact X at rational (u, v) as a tuple of sympy numbers."""
        subs = {U: _exact(u), V: _exact(v)}
        return tuple(sympy.simplify(e.subs(subs)) for e in self.expressions)

    def partials(self, u, v):
        return self._eval("Xu", u, v), self._eval("Xv", u, v)

    def derivatives(self, u, v):
        """First and second partials, each of shape broadcast(u, v) + (3,)."""
        return {key: self._eval(key, u, v) for key in DERIVATIVES}

    def to_text(self):
        lines = [f"# X(u, v), part = {self.part}, convention = {self.convention}"]
        for name, expr in zip("xyz", self.expressions):
            lines.append(f"{name}(u, v) = {expr}")
        return "\n".join(lines) + "\n"


def integrate_surface(spec):
    """Closed form surface of ``spec``.

    Raises:
        PoleInDomain: The domain contains the pole or meets the branch cut.
    """
    form = antiderivative(spec.phi.phi)
    return ClosedFormSurface(form, spec.base_point, spec.part, spec.convention, spec.domain, spec.z0)


def partials(X, u, v):
    """(X_u, X_v) at (u, v)."""
    return X.partials(u, v)


def associate(phi, unit):
    """Member of the associate family: unit * Phi for an exact unit complex number."""
    unit = ComplexScalar.coerce(unit)
    if unit.abs2() != 1:
        raise ValueError(f"{unit} is not a unit complex number")
    phi = phi.phi if isinstance(phi, IsotropicCurve) else phi
    return IsotropicCurve(phi * unit)


def surface_from_pair(
    pair,
    base_point=(0, 0, 0),
    part=defaults.surface["part"],
    convention=defaults.surface["convention"],
    domain=None,
    z0=None,
):
    """Closed form surface when lambda is a Laurent polynomial, numeric surface otherwise."""
    if not isinstance(pair, PreimagePair):
        phi = pair if isinstance(pair, IsotropicCurve) else IsotropicCurve(pair)
        return integrate_surface(SurfaceSpec(phi, base_point, part, domain, convention, z0))
    if pair.scale.is_laurent:
        return integrate_surface(SurfaceSpec(pair.phi(), base_point, part, domain, convention, z0))
    from mincq.surface.numeric import NumericSurface

    if domain is None:
        raise PoleInDomain("a domain is required for the numeric surface")
    logger.warning(f"lambda = {pair.scale} is not a Laurent polynomial, using numeric integration")
    return NumericSurface(
        pair.phi_numeric,
        domain,
        base_point=base_point,
        part=part,
        convention=convention,
        z0=None if z0 is None else complex(ComplexScalar.coerce(z0)),
        poles=pair.scale.den,
    )


__all__ = [
    "SurfaceSpec",
    "ClosedFormSurface",
    "integrate_surface",
    "partials",
    "associate",
    "surface_from_pair",
    "laurent_real_imag",
    "log_real_imag",
    "U",
    "V",
]

