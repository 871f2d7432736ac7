"""Quad meshes of parametrized surfaces on a domain grid."""

import logging
from dataclasses import dataclass, field

import numpy as np

from mincq import defaults
from mincq.surface.geometry import fundamental_quantities, lambda_singularities
from mincq.util.file_handler import FileHandler, FLOAT_FORMAT
from mincq.util import to_structured
from mincq.errors import PoleInDomain, InvalidGrid

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("u", "v", "x", "y", "z", "H", "E", "F", "G")


@dataclass
class Mesh:
    """Vertices in row-major grid order (index iv * nu + iu) and quad faces.

    Attributes:
        nu, nv (int): Grid size.
        uv (ndarray): Parameters of the vertices, shape (nu * nv, 2).
        vertices (ndarray): Surface points, shape (nu * nv, 3).
        quads (ndarray): Faces (i, i + 1, i + nu + 1, i + nu), shape ((nu - 1) (nv - 1), 4).
        degenerate (ndarray): Vertices where the normal is undefined.
        quantities (dict): Flattened H, E, F, G per vertex.
    """

    nu: int
    nv: int
    uv: np.ndarray
    vertices: np.ndarray
    quads: np.ndarray
    degenerate: np.ndarray
    quantities: dict = field(default_factory=dict)

    def degenerate_indices(self):
        return [int(i) for i in np.flatnonzero(self.degenerate)]

    def table(self):
        """Structured array with the columns u, v, x, y, z, H, E, F, G."""
        columns = {"u": self.uv[:, 0], "v": self.uv[:, 1]}
        columns.update(zip("xyz", self.vertices.T))
        for key in ("H", "E", "F", "G"):
            columns[key] = self.quantities.get(key, np.full(len(self.vertices), np.nan))
        return to_structured(columns)

    def export_obj(self, filename, fmt=FLOAT_FORMAT):
        FileHandler.save(filename, self, fmt=fmt)

    def export_csv(self, filename, fmt=FLOAT_FORMAT):
        FileHandler.save(filename, self.table(), fmt=fmt)


def quad_faces(nu, nv):
    iu, iv = np.meshgrid(np.arange(nu - 1), np.arange(nv - 1))
    i = (iv * nu + iu).ravel()
    return np.stack([i, i + 1, i + nu + 1, i + nu], axis=-1)


def mesh(X, domain=None, nu=None, nv=None, lam=None, atol=defaults.surface["atol"]):
    """Samples X on the (nv, nu) grid of ``domain``.

    Vertices are degenerate where |X_u x X_v| < atol, and the vertex nearest
    to each root of ``lam`` inside the domain is marked as well.

    Raises:
        PoleInDomain: The domain contains the pole of X.
        InvalidGrid: nu or nv is below 2.
    """
    domain = domain if domain is not None else X.domain
    if domain is None:
        raise ValueError("a domain is required to mesh a surface")
    nu = defaults.surface["grid"][0] if nu is None else int(nu)
    nv = defaults.surface["grid"][1] if nv is None else int(nv)
    if nu < 2 or nv < 2:
        raise InvalidGrid(f"mesh grid {nu}x{nv}, need at least 2x2")
    if getattr(X, "has_pole", False) and bool(domain.contains(0)):
        raise PoleInDomain("the domain contains the pole z = 0")

    Z = domain.grid(nu, nv)
    u, v = Z.real.ravel(), Z.imag.ravel()
    vertices = X.evaluate(u, v).reshape(-1, 3)
    q = fundamental_quantities(X.derivatives(u, v), atol)
    degenerate = np.array(q["degenerate"], dtype=bool)
    if lam is not None:
        for root, multiplicity in lambda_singularities(lam, domain):
            nearest = int(np.argmin(np.abs(Z.ravel() - root)))
            logger.debug(f"root {root} of lambda (multiplicity {multiplicity}) near vertex {nearest}")
            degenerate[nearest] = True

    logger.info(f"mesh {nu}x{nv}: {len(vertices)} vertices, {int(degenerate.sum())} degenerate")
    return Mesh(
        nu=nu,
        nv=nv,
        uv=np.column_stack([u, v]),
        vertices=vertices,
        quads=quad_faces(nu, nv),
        degenerate=degenerate,
        quantities={
            "H": np.where(degenerate, np.nan, q["H"]),
            "E": q["E"],
            "F": q["F"],
            "G": q["G"],
        },
    )


def export_obj(m, filename, fmt=FLOAT_FORMAT):
    m.export_obj(filename, fmt)


def export_csv(m, filename, fmt=FLOAT_FORMAT):
    m.export_csv(filename, fmt)
