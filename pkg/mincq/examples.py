"""Registry of worked examples.

Every example builds its objects from exact data, runs a list of exact checks
and can write its artifacts (closed form, mesh, geometry table, report).

Usage:
    report = run_example("catenoid", out_dir="./out")
    WorkedExample["ex1"]().checks()
"""

import logging
from abc import abstractmethod
from dataclasses import dataclass, field
from os import path

import numpy as np
import sympy

from mincq import defaults
from mincq.cq_core import ComplexQuaternion, ComplexScalar, IMAG, L, ONE, QI, QJ, QK
from mincq.polyring import CLaurent, QLaurent, Z, qsnorm, antiderivative
from mincq.sylvester import RankClass, classify_rank, numeric_rank, solve_conjugator, operator_matrix, eigenvalues
from mincq.weierstrass import (
    IsotropicCurve,
    PreimagePair,
    RationalScale,
    isotropy_defect,
    pair_from_phi,
    real_preimage,
)
from mincq.surface import BoxDomain, SurfaceSpec, integrate_surface, geometry_grid, mesh
from mincq.surface.closed_form import U, V, RHO
from mincq.phcurve import PHSpec, integrate_curve, ph_defect, constant_slope_defect, hodograph
from mincq.patchdesign import (
    RectangleDomain,
    CornerData,
    MobiusMap,
    null_point,
    null_param,
    solve_scales,
    check_conditions,
    mobius_from_corners,
    patch,
)
from mincq.util import ensure_dir
from mincq.util.component import Component
from mincq.util.file_handler import FileHandler
from mincq.errors import NonzeroResidue, UnknownExample

logger = logging.getLogger(__name__)


def same_expression(expr, expected):
    """Exact symbolic equality of two expressions in u, v."""
    difference = sympy.expand_log(sympy.together(expr - expected), force=True)
    return sympy.simplify(difference) == 0


def same_surface(X, expected):
    return all(same_expression(e, x) for e, x in zip(X.expressions, expected))


# --- exact data ---


def catenoid_phi():
    """((z^2 - 1) / 2z^2) i - (I (z^2 + 1) / 2z^2) j - (1 / z) k."""
    zi2 = CLaurent.monomial(-2)
    return IsotropicCurve(
        QLaurent.from_components(None, (1 - zi2) / 2, -IMAG * (1 + zi2) / 2, -CLaurent.monomial(-1))
    )


def catenoid_preimage():
    """A = (1 - 3z^2) i + I (1 - z^2) j + 2z k with lambda = 1 / 8z^4."""
    A = QLaurent.from_components(None, 1 - 3 * Z**2, IMAG * (1 - Z**2), 2 * Z)
    return PreimagePair(A, RationalScale(CLaurent.constant(1), 8 * Z**4))


def catenoid_chi():
    """Conjugator with Phi chi = chi L, chi = A / 2z^2."""
    return catenoid_preimage().A * CLaurent.monomial(-2, ComplexScalar("1/2"))


def rational_phi():
    """(z^4 + 1) z^-2 Phi_cat, an integrand without residue."""
    return IsotropicCurve(catenoid_phi().phi * (Z**2 + CLaurent.monomial(-2)))


def rational_antiderivative():
    """(i + Ij) / 6z^3 + k / 2z^2 - (i - Ij) / 2z - (i + Ij) z / 2 + k z^2 / 2 + (i - Ij) z^3 / 6."""
    Lbar = QI - IMAG * QJ
    return QLaurent(
        {
            -3: L / 6,
            -2: QK / 2,
            -1: -Lbar / 2,
            1: -L / 2,
            2: QK / 2,
            3: Lbar / 6,
        }
    )


def richmond_phi():
    """((z^4 - 1) / z^2, I (z^4 + 1) / z^2, 2)."""
    zi2 = CLaurent.monomial(-2)
    return IsotropicCurve(QLaurent.from_components(None, Z**2 - zi2, IMAG * (Z**2 + zi2), CLaurent.constant(2)))


def richmond_preimage():
    A = QLaurent.from_components(None, Z**4 + Z**2 - 1, IMAG * (Z**4 + Z**2 + 1), 2 * Z**2)
    return PreimagePair(A, RationalScale(CLaurent.constant(-1), 4 * Z**2))


def enneper_preimage():
    return PreimagePair(QLaurent({1: ONE, 0: QJ}))


EX1_RECTANGLE = (0, 1, 2)  # P0, r1, r2
EX1_PARAMS = ((1, 0), (IMAG, 1), (1, 2), (ComplexScalar(5, -2), 8))
EX1_SCALES = (25, -16, ComplexScalar(12, -16), 1)


def ex1_rectangle():
    return RectangleDomain(*EX1_RECTANGLE)


def ex1_directions():
    return [null_point(ComplexScalar.coerce(s), ComplexScalar.coerce(t)) for s, t in EX1_PARAMS]


def ex1_corner_data():
    """Corner values 25 nu_l N(s_l, t_l)."""
    return CornerData.from_directions([ComplexScalar.coerce(nu) * 25 for nu in EX1_SCALES], ex1_directions())


def ex1_preimage():
    """A = -(5 + 20j) z + 25."""
    return QLaurent({1: -ComplexQuaternion(5, 0, 20), 0: ComplexQuaternion(25)})


def ex1_mobius():
    """s = 25 - 5z, t = -20 I z."""
    return MobiusMap(-5, 25, -20 * IMAG, 0)


# --- reports ---


@dataclass
class ExampleReport:
    """Named exact checks of one example and the files it wrote."""

    name: str
    checks: dict = field(default_factory=dict)
    files: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(self.checks.values())

    def failures(self):
        return [name for name, ok in self.checks.items() if not ok]

    def to_text(self):
        lines = [f"# example {self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for name, ok in self.checks.items():
            lines.append(f"{'ok  ' if ok else 'FAIL'} {name}")
        lines.extend(f"# {note}" for note in self.notes)
        for filename in self.files:
            lines.append(f"wrote {filename}")
        return "\n".join(lines) + "\n"


class WorkedExample(Component):
    """Base class of the worked examples.

    Parameters:
        grid (tuple): Mesh size (nu, nv) for the artifacts.
        fmt (str): Float format of the written files.
    """

    description = ""
    domain = None  # (u0, u1, v0, v1) of the mesh

    def __init__(self, grid=None, fmt=defaults.output["float_format"]):
        self.grid = tuple(grid or defaults.surface["grid"])
        self.fmt = fmt
        self.notes = []

    @abstractmethod
    def checks(self):
        """Exact checks as an ordered dict name -> bool."""
        pass

    def surface(self):
        """Closed form surface of the example, None for examples without one."""
        return None

    def mesh_domain(self):
        return BoxDomain(*self.domain)

    def geometry_checks(self, X, domain):
        q = geometry_grid(X, domain, *self.grid)
        scale = np.nanmax(np.abs(q["E"]))
        self.notes.append(f"max |H| = {np.nanmax(np.abs(q['H'])):.3e} on a {self.grid[0]}x{self.grid[1]} grid")
        return {
            "mean curvature vanishes on the grid": bool(np.nanmax(np.abs(q["H"])) < defaults.verify["h_atol"]),
            "isothermal on the grid": bool(
                np.nanmax(np.abs(q["E"] - q["G"])) <= defaults.verify["isothermal_rtol"] * scale
                and np.nanmax(np.abs(q["F"])) <= defaults.verify["isothermal_rtol"] * scale
            ),
        }

    def artifacts(self, out_dir):
        """Writes the closed form, mesh and geometry table; returns the file names."""
        X = self.surface()
        if X is None:
            return []
        stem = path.join(out_dir, self.label)
        m = mesh(X, self.mesh_domain(), *self.grid)
        files = [f"{stem}_surface.txt", f"{stem}.obj", f"{stem}.csv"]
        FileHandler.save(files[0], X.to_text())
        m.export_obj(files[1], self.fmt)
        m.export_csv(files[2], self.fmt)
        return files

    def run(self, out_dir=None):
        report = ExampleReport(self.label, self.checks(), notes=self.notes)
        logger.info(f"example {self.label}: {len(report.checks)} checks, passed = {report.passed}")
        if out_dir is not None:
            ensure_dir(out_dir)
            report.files = self.artifacts(out_dir)
            report_file = path.join(out_dir, f"{self.label}_report.txt")
            report.files.append(report_file)
            FileHandler.save(report_file, report.to_text())
        return report


class Catenoid(WorkedExample, label="catenoid"):
    description = "catenoid: conjugator, preimage pair with lambda = 1 / 8z^4, real preimage, closed form"
    domain = (0.25, 2.0, -1.0, 1.0)

    def surface(self):
        return integrate_surface(SurfaceSpec(catenoid_phi(), domain=self.mesh_domain()))

    def checks(self):
        phi, pair = catenoid_phi(), catenoid_preimage()
        chi = catenoid_chi()
        B = real_preimage(pair.A)
        X = self.surface()
        expected = (
            (U + U / RHO) / 2,
            (V + V / RHO) / 2,
            -sympy.log(RHO) / 2,
        )
        return {
            "Phi is isotropic": isotropy_defect(phi.phi).is_zero,
            "Phi chi = chi L": (phi.phi * chi - chi * L).is_zero,
            "chi = Phi h + h L with h = -1": solve_conjugator(phi.phi, L, -ONE) == chi,
            "lambda A L Ac = Phi": pair.certifies(phi),
            "qsnorm(A) = 8z^4": qsnorm(pair.A) == 8 * Z**4,
            "real preimage B = -2z^2 i + 2z k": B == QLaurent({2: -2 * QI, 1: 2 * QK}),
            "B L Bc = A L Ac": PreimagePair(B, pair.scale).certifies(phi),
            "constructed pair certifies Phi": pair_from_phi(phi).certifies(phi),
            "X = (u + u / rho, v + v / rho, -ln rho) / 2": same_surface(X, expected),
            **self.geometry_checks(X, self.mesh_domain()),
        }


class RationalSurface(WorkedExample, label="rational"):
    description = "rational minimal surface from (z^4 + 1) z^-2 Phi_cat"
    domain = (0.5, 1.5, 0.5, 1.5)

    def surface(self):
        return integrate_surface(SurfaceSpec(rational_phi(), domain=self.mesh_domain()))

    @staticmethod
    def expected():
        u, v, rho = U, V, RHO
        x = (rho + 1) * u * (u**6 - u**4 * v**2 - 5 * u**2 * v**4 - 3 * v**6 - 4 * u**4 - 4 * u**2 * v**2 + u**2 - 3 * v**2)
        y = (rho + 1) * (3 * u**6 + 5 * u**4 * v**2 + u**2 * v**4 - v**6 + 4 * u**2 * v**2 + 4 * v**4 + 3 * u**2 - v**2) * v
        z = -3 * rho * (u - v) * (u + v) * (rho - 1) * (rho + 1)
        return tuple(c / (6 * rho**3) for c in (x, y, z))

    def checks(self):
        phi = rational_phi()
        form = antiderivative(phi.phi)
        X = self.surface()
        expected = self.expected()
        points = [(sympy.Rational(p, q), sympy.Rational(r, s)) for p, q, r, s in SAMPLE_POINTS]
        pointwise = all(
            sympy.simplify(value - e.subs({U: u, V: v})) == 0
            for u, v in points
            for value, e in zip(X.evaluate_exact(u, v), expected)
        )
        return {
            "Phi is isotropic": isotropy_defect(phi.phi).is_zero,
            "residue at 0 vanishes": phi.phi.coeff(-1).is_zero and not form.log_terms,
            "antiderivative matches the six-term form": form.principal == rational_antiderivative(),
            "X matches at exact sample points": pointwise,
            **self.geometry_checks(X, self.mesh_domain()),
        }


SAMPLE_POINTS = (
    (1, 1, 0, 1),
    (1, 2, 1, 3),
    (2, 1, 1, 1),
    (-1, 1, 1, 2),
    (3, 4, -2, 5),
    (0, 1, 1, 1),
    (5, 3, 1, 7),
    (-2, 3, -1, 4),
    (1, 5, 2, 1),
    (7, 2, -3, 2),
)


class Richmond(WorkedExample, label="richmond"):
    description = "Richmond surface: h = z^2, lambda = -1 / 4z^2"
    domain = (0.5, 1.5, -0.5, 0.5)

    def surface(self):
        return integrate_surface(SurfaceSpec(richmond_phi(), domain=self.mesh_domain()))

    def checks(self):
        phi, pair = richmond_phi(), richmond_preimage()
        chi = solve_conjugator(phi.phi, L, QLaurent.monomial(2, ONE))
        X = self.surface()
        expected = (
            U**3 / 3 - U * V**2 + U / RHO,
            V**3 / 3 - U**2 * V - V / RHO,
            2 * U,
        )
        return {
            "Phi is isotropic": isotropy_defect(phi.phi).is_zero,
            "chi = Phi z^2 + z^2 L": chi == pair.A,
            "qsnorm(chi) = -4z^2": qsnorm(chi) == -4 * Z**2,
            "lambda chi L chic = Phi": pair.certifies(phi),
            "constructed pair certifies Phi": pair_from_phi(phi).certifies(phi),
            "X matches the closed form": same_surface(X, expected),
            **self.geometry_checks(X, self.mesh_domain()),
        }


class Enneper(WorkedExample, label="enneper"):
    description = "Enneper surface from A = z + j"
    domain = (-3.0, 3.0, -3.0, 3.0)

    def surface(self):
        return integrate_surface(SurfaceSpec(enneper_preimage().phi(), domain=self.mesh_domain()))

    def checks(self):
        pair = enneper_preimage()
        X = self.surface()
        expected = (
            U**3 / 3 - U * V**2 - U,
            V**3 / 3 - U**2 * V - V,
            V**2 - U**2,
        )
        Xu, Xv = X.partials(0.0, 0.0)
        return {
            "Phi is isotropic": isotropy_defect(pair.phi().phi).is_zero,
            "X matches the cubic closed form": same_surface(X, expected),
            "X_u(0, 0) = (-1, 0, 0), X_v(0, 0) = (0, -1, 0)": bool(
                np.allclose(Xu, [-1, 0, 0]) and np.allclose(Xv, [0, -1, 0])
            ),
            **self.geometry_checks(X, self.mesh_domain()),
        }


class Ex1Patch(WorkedExample, label="ex1"):
    description = "Enneper patch through four corner values over the rectangle (0, 1, 1 + 2I, 2I)"

    def mesh_domain(self):
        return ex1_rectangle()

    def surface(self):
        _, X, _ = patch(ex1_rectangle(), ex1_corner_data())
        return X

    def checks(self):
        rect, data = ex1_rectangle(), ex1_corner_data()
        directions = ex1_directions()
        scales = solve_scales(rect, directions)
        report = check_conditions(rect, data)
        f = mobius_from_corners(rect, report.params)
        _, X, pair = patch(rect, data)
        expected_pair = PreimagePair(ex1_preimage())
        c = sympy.Rational(25, 3)
        expected = (
            c * (-15 * U**3 + 45 * U * V**2 - 15 * U**2 + 15 * V**2 + 75 * U),
            c * (-51 * U**2 * V + 17 * V**3 + 30 * U * V - 75 * V),
            c * (-8 * U**3 + 24 * U * V**2 + 60 * U**2 - 60 * V**2),
        )
        params = [null_param(phi) for phi in data.phis]
        return {
            "N(5 - 2I, 8) = (85 - 20I, 20 - 43I, 32 + 80I)": directions[3]
            == ComplexQuaternion(0, ComplexScalar(85, -20), ComplexScalar(20, -43), ComplexScalar(32, 80)),
            "scales nu = (25, -16, 12 - 16I, 1)": tuple(scales) == tuple(ComplexScalar.coerce(x) for x in EX1_SCALES),
            "null cone parameters recovered": all(
                p.same_point(q) for p, q in zip(params, [null_param(d) for d in directions])
            ),
            "corner conditions hold": report.passed,
            "s = 25 - 5z, t = -20Iz": f.projectively_equal(ex1_mobius()),
            "A = -(5 + 20j) z + 25 up to the stabilizer of L": pair.phi() == expected_pair.phi(),
            "A L Ac interpolates the corners": all(
                expected_pair.core().evaluate(P) == phi for P, phi in zip(rect.vertices_exact(), data.phis)
            ),
            "X matches the printed cubic": same_surface(X, expected),
            **self.geometry_checks(X, rect),
        }


class SylvesterRank3(WorkedExample, label="sylvester-rank3"):
    description = "Sylvester operator of F = Ij + k, G = I + (j + k) / sqrt(2) has rank 3"

    @staticmethod
    def pair():
        F = ComplexQuaternion(0, 0, IMAG, 1).to_numpy()
        G = np.array([1j, 0, np.sqrt(2) / 2, np.sqrt(2) / 2], dtype=complex)
        return F, G

    def checks(self):
        F, G = self.pair()
        ev = eigenvalues(F, G)
        self.notes.append(f"eigenvalues {np.round(ev, 12).tolist()}")
        return {
            "classified as rank 3": classify_rank(F, G) is RankClass.RANK3,
            "numeric rank 3": numeric_rank(F, G) == 3,
            "one zero eigenvalue": int(np.sum(np.abs(ev) < 1e-9)) == 1,
        }

    def artifacts(self, out_dir):
        filename = path.join(out_dir, f"{self.label}_matrix.txt")
        F, G = self.pair()
        FileHandler.save(filename, str(operator_matrix(F, G)))
        return [filename]


class PHConstantSlope(WorkedExample, label="ph-constant-slope"):
    description = "PH curve of constant slope from A = t + (4/5 i + 3/5 j)"

    def spec(self):
        s, c = ComplexScalar("4/5"), ComplexScalar("3/5")
        return PHSpec(QLaurent({1: ONE, 0: ComplexQuaternion(0, s, c, 0)}))

    def checks(self):
        spec = self.spec()
        s, c = ComplexScalar("4/5"), ComplexScalar("3/5")
        axis = ComplexQuaternion(0, s, c, 0)
        expected = QLaurent({2: QI, 0: ComplexQuaternion(0, 2 * s * s - 1, 2 * s * c, 0), 1: -2 * c * QK})
        curve = integrate_curve(spec)
        return {
            "hodograph (t^2 - 1 + 2s^2, 2sc, -2ct)": hodograph(spec) == expected,
            "PH defect vanishes": ph_defect(spec).is_zero,
            "constant slope to the axis": constant_slope_defect(spec, axis, s).is_zero,
            "curve is polynomial": curve.is_polynomial and curve.hodograph() == hodograph(spec),
        }

    def artifacts(self, out_dir):
        curve = integrate_curve(self.spec())
        files = [path.join(out_dir, f"{self.label}_curve.txt"), path.join(out_dir, f"{self.label}.csv")]
        FileHandler.save(files[0], curve.to_text())
        FileHandler.save(files[1], curve.sample(), fmt=self.fmt)
        return files


class PHRational(WorkedExample, label="ph-rational"):
    description = "rational PH curve from A = t^2 + j, lambda = (t^4 + 1) t^-2"

    def spec(self):
        return PHSpec(QLaurent({2: ONE, 0: QJ}), CLaurent({2: 1, -2: 1}))

    def checks(self):
        spec = self.spec()
        curve = integrate_curve(spec)
        try:
            integrate_curve(PHSpec(QLaurent.constant(ONE), CLaurent.monomial(-1)))
            residue_detected = False
        except NonzeroResidue as err:
            residue_detected = err.residue == QI
        return {
            "PH defect vanishes": ph_defect(spec).is_zero,
            "integral is rational": not curve.is_polynomial and curve.hodograph() == hodograph(spec),
            "lambda = 1 / t has a nonzero residue": residue_detected,
        }

    def artifacts(self, out_dir):
        curve = integrate_curve(self.spec())
        files = [path.join(out_dir, f"{self.label}_curve.txt"), path.join(out_dir, f"{self.label}.csv")]
        FileHandler.save(files[0], curve.to_text())
        FileHandler.save(files[1], curve.sample(interval=(0.5, 2.0)), fmt=self.fmt)
        return files


def list_examples():
    return WorkedExample.describe()


def run_example(name, out_dir=None, grid=None, fmt=defaults.output["float_format"]):
    """Runs the checks of one example and writes its artifacts to ``out_dir`` (if given).

    Raises:
        UnknownExample: ``name`` is not registered.
    """
    if name not in WorkedExample.labels:
        raise UnknownExample(f"unknown example '{name}', valid: {sorted(WorkedExample.labels)}")
    return WorkedExample.create(name, grid=grid, fmt=fmt).run(out_dir)


def run_all(out_dir=None, grid=None, fmt=defaults.output["float_format"], progress=True):
    from tqdm import tqdm

    reports = []
    for name in tqdm(list(WorkedExample.labels), desc="examples", disable=not progress):
        reports.append(run_example(name, None if out_dir is None else path.join(out_dir, name), grid, fmt))
    return reports
