"""Numeric surfaces for integrands without an exact primitive.

Used when lambda has poles away from 0. X(z) = c + factor * part of the
integral of Phi along the straight segment from z0 to z, so the domain must be
convex and free of poles (parallelogram domains are convex).
"""

import logging

import numpy as np
from scipy.integrate import quad_vec

from mincq import defaults
from mincq.surface.closed_form import CONVENTIONS, _check_part
from mincq.surface.geometry import lambda_singularities
from mincq.errors import PoleInDomain

logger = logging.getLogger(__name__)


class NumericSurface:
    """Surface from a floating integrand Phi(z) of shape z.shape + (4,).

    Parameters:
        integrand (callable): Phi evaluated on complex arrays.
        domain (Domain): Parameter domain.
        base_point (tuple): X(z0).
        part (str): "re" or "im".
        convention (str): "rder" or "corner".
        z0 (complex): Start of the integration paths, the domain center by default.
        poles (CLaurent): Denominator whose roots must lie outside the domain.
        fd_step (float): Step of the central difference for Phi'.
        epsabs (float): Absolute tolerance of the quadrature.
    """

    has_pole = False
    is_rational = False

    def __init__(
        self,
        integrand,
        domain,
        base_point=(0, 0, 0),
        part=defaults.surface["part"],
        convention=defaults.surface["convention"],
        z0=None,
        poles=None,
        fd_step=defaults.surface["fd_step"],
        epsabs=defaults.surface["numeric_epsabs"],
    ):
        _check_part(part, convention)
        self.integrand = integrand
        self.domain = domain
        self.base_point = np.asarray(base_point, dtype=float)
        self.part = part
        self.convention = convention
        self.factor = CONVENTIONS[convention]
        self.z0 = domain.center() if z0 is None else complex(z0)
        self.fd_step = fd_step
        self.epsabs = epsabs
        if poles is not None and not poles.is_constant:
            inside = lambda_singularities(poles, domain)
            if inside:
                raise PoleInDomain(f"poles {[r for r, _ in inside]} lie in the domain")
        if not bool(domain.contains(self.z0)):
            raise PoleInDomain(f"start point {self.z0} is outside the domain")

    def _part(self, w):
        return w.real if self.part == "re" else w.imag

    def primitive(self, z):
        """Integral of Phi from z0 to z (complex, shape z.shape + (3,))."""
        z = np.asarray(z, dtype=complex)
        flat = z.ravel()
        dz = flat - self.z0

        def integrand(t):
            w = self.integrand(self.z0 + t * dz)[..., 1:] * dz[:, None]
            return np.concatenate([w.real.ravel(), w.imag.ravel()])

        result, error = quad_vec(integrand, 0.0, 1.0, epsabs=self.epsabs)
        logger.debug(f"quadrature over {flat.size} paths, error estimate {error:.3e}")
        half = result.size // 2
        values = (result[:half] + 1j * result[half:]).reshape(flat.size, 3)
        return values.reshape(z.shape + (3,))

    def evaluate(self, u, v):
        z = np.asarray(u, dtype=float) + 1j * np.asarray(v, dtype=float)
        return self.base_point + self.factor * self._part(self.primitive(z))

    def _psi(self, z):
        return self.integrand(z)[..., 1:]

    def partials(self, u, v):
        z = np.asarray(u, dtype=float) + 1j * np.asarray(v, dtype=float)
        psi = self.factor * self._psi(z)
        if self.part == "re":
            return psi.real, -psi.imag
        return psi.imag, psi.real

    def derivatives(self, u, v):
        """Partials from Phi and a complex central difference of Phi."""
        z = np.asarray(u, dtype=float) + 1j * np.asarray(v, dtype=float)
        h = self.fd_step
        d = self.factor * (self._psi(z + h) - self._psi(z - h)) / (2 * h)
        Xu, Xv = self.partials(u, v)
        if self.part == "re":
            second = {"Xuu": d.real, "Xuv": -d.imag, "Xvv": -d.real}
        else:
            second = {"Xuu": d.imag, "Xuv": d.real, "Xvv": -d.imag}
        return {"Xu": Xu, "Xv": Xv, **second}

    def to_text(self):
        return f"# numeric surface, part = {self.part}, convention = {self.convention}, z0 = {self.z0}\n"
