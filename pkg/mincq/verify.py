"""Verification reports for representation files.

A report collects the exact isotropy defect of Phi, the certificate of a
preimage pair, the residue of Phi at 0, the corner conditions of patch data
and statistics of E, F, G, H sampled on a grid. A report with defects makes
``mincq verify`` exit with code 2.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from mincq import defaults
from mincq.polyring import QLaurent
from mincq.weierstrass import (
    IsotropicCurve,
    PreimagePair,
    isotropy_defect,
    to_phi,
    representation_name,
)
from mincq.surface import BoxDomain, surface_from_pair, geometry_grid
from mincq.patchdesign import check_conditions, patch
from mincq.util.file_handler import FileHandler
from mincq.util.serialization import load_document, parse_laurent
from mincq.errors import ParseError

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """Outcome of ``verify``.

    Attributes:
        representation (str): Document kind.
        isotropy_defect: Phi1^2 + Phi2^2 + Phi3^2 (a CLaurent), None if not applicable.
        scalar_part: Scalar part of Phi (a CLaurent), None if not applicable.
        certificate (bool): lambda A L Ac = Phi for pairs, None otherwise.
        residue: Coefficient of z^-1 in Phi, None if Phi is not a Laurent polynomial.
        statistics (dict): Grid statistics of the surface.
        conditions (ConditionReport): Corner conditions of patch data.
        notes (list): Remarks that are not defects.
    """

    representation: str
    isotropy_defect: object = None
    scalar_part: object = None
    certificate: Optional[bool] = None
    residue: object = None
    statistics: dict = field(default_factory=dict)
    conditions: object = None
    notes: list = field(default_factory=list)
    h_atol: float = defaults.verify["h_atol"]
    isothermal_rtol: float = defaults.verify["isothermal_rtol"]

    def defects(self):
        found = []
        if self.isotropy_defect is not None and not self.isotropy_defect.is_zero:
            found.append("isotropy")
        if self.scalar_part is not None and not self.scalar_part.is_zero:
            found.append("scalar part")
        if self.certificate is False:
            found.append("certificate")
        if self.conditions is not None and not self.conditions.passed:
            found.extend(self.conditions.failures())
        if self.statistics:
            scale = max(1.0, abs(self.statistics["max E"]))
            if not self.statistics["max|H|"] < self.h_atol:
                found.append("mean curvature")
            if not max(self.statistics["max|E-G|"], self.statistics["max|F|"]) <= self.isothermal_rtol * scale:
                found.append("isothermality")
        return found

    @property
    def passed(self):
        return not self.defects()

    def to_text(self):
        lines = [f"# verification of a '{self.representation}' representation"]
        if self.isotropy_defect is not None:
            lines.append(f"isotropy defect: {self.isotropy_defect}")
        if self.scalar_part is not None and not self.scalar_part.is_zero:
            lines.append(f"scalar part: {self.scalar_part}")
        if self.certificate is not None:
            lines.append(f"certificate lambda A L Ac = Phi: {self.certificate}")
        if self.residue is not None:
            lines.append(f"residue at z = 0: {self.residue}")
        if self.conditions is not None:
            lines.append(self.conditions.to_text().rstrip("\n"))
        for key, value in self.statistics.items():
            lines.append(f"{key}: {value:.6e}")
        lines.extend(f"# {note}" for note in self.notes)
        defects = self.defects()
        lines.append(f"defects: {', '.join(defects) if defects else 'none'}")
        return "\n".join(lines) + "\n"


def grid_statistics(X, domain, grid):
    q = geometry_grid(X, domain, *grid)
    return {
        "max|H|": float(np.nanmax(np.abs(q["H"]))),
        "max|E-G|": float(np.nanmax(np.abs(q["E"] - q["G"]))),
        "max|F|": float(np.nanmax(np.abs(q["F"]))),
        "min E": float(np.nanmin(q["E"])),
        "max E": float(np.nanmax(q["E"])),
    }


def _residue_note(residue):
    if residue.is_zero:
        return "no residue at 0, the surface is rational"
    return f"NonzeroResidue: residue {residue} at 0, the surface carries logarithmic terms"


def verify(
    rep,
    domain=None,
    grid=defaults.verify["grid"],
    h_atol=defaults.verify["h_atol"],
    isothermal_rtol=defaults.verify["isothermal_rtol"],
):
    """Verification report of a representation.

    Parameters:
        rep: IsotropicCurve, WEData, PQWData, PreimagePair, (RectangleDomain, CornerData),
            or a raw QLaurent Phi which need not be isotropic.
        domain (Domain): Sample domain; the patch rectangle for corner data, else ``defaults.verify["domain"]``.
        grid (tuple): Sample grid (nu, nv).

    Returns:
        VerificationReport
    """
    if isinstance(rep, tuple):
        rect, data = rep
        report = VerificationReport("corners", h_atol=h_atol, isothermal_rtol=isothermal_rtol)
        report.conditions = check_conditions(rect, data)
        if report.conditions.passed:
            _, X, pair = patch(rect, data)
            report.notes.append(f"preimage A = {pair.A}, lambda = {pair.scale}")
            report.statistics = grid_statistics(X, rect, grid)
        return report

    domain = domain if domain is not None else BoxDomain(*defaults.verify["domain"])
    if isinstance(rep, QLaurent):
        name, phi = "phi", rep
    else:
        name = representation_name(rep)
        phi = None
    report = VerificationReport(name, h_atol=h_atol, isothermal_rtol=isothermal_rtol)

    if isinstance(rep, PreimagePair) and not rep.scale.is_laurent:
        report.isotropy_defect = isotropy_defect(rep.core())
        report.notes.append(f"lambda = {rep.scale} has poles away from 0, sampled numerically")
        X = surface_from_pair(rep, domain=domain)
        report.statistics = grid_statistics(X, domain, grid)
        return report

    if phi is None:
        curve = to_phi(rep)
        phi = curve.phi
        if isinstance(rep, PreimagePair):
            report.certificate = rep.certifies(curve)
    report.isotropy_defect = isotropy_defect(phi)
    report.scalar_part = phi.scalar_part()
    report.residue = phi.coeff(-1)
    report.notes.append(_residue_note(report.residue))
    if not report.isotropy_defect.is_zero or not report.scalar_part.is_zero:
        report.notes.append("Phi is not isotropic, no surface is sampled")
        return report
    X = surface_from_pair(IsotropicCurve(phi), domain=domain)
    report.statistics = grid_statistics(X, domain, grid)
    logger.debug(f"verification statistics {report.statistics}")
    return report


def load_for_verification(doc, location="$"):
    """Like ``load_document``, but a phi document is returned as a raw QLaurent."""
    if isinstance(doc, dict) and doc.get("representation") == "phi":
        try:
            value = doc["phi"]
        except KeyError:
            raise ParseError("missing key 'phi'", location) from None
        return parse_laurent(value, QLaurent, location=f"{location}.phi")
    return load_document(doc, location)


def verify_file(filename, **kwargs):
    doc = FileHandler.load(filename, as_type="dict")
    return verify(load_for_verification(doc, location=filename), **kwargs)
