"""Differential geometry of parametrized surfaces.

Fundamental forms, the shape operator S = -I^-1 II, mean and Gauss curvature
and the principal curvatures, computed from the partials of any surface with
a ``derivatives(u, v)`` method. The unit normal is N = (X_u x X_v) / |X_u x X_v|
and the second fundamental form uses e = -<X_uu, N>, f = -<X_uv, N>,
g = -<X_vv, N>, so that X_uu + X_vv = 2 E H N on isothermal patches.
"""

import logging
from dataclasses import dataclass

import numpy as np

from mincq import defaults
from mincq.polyring import CLaurent, squarefree_decomposition
from mincq.errors import DegenerateNormal, NotIsothermal, DerivativeMismatch

logger = logging.getLogger(__name__)

QUANTITIES = ("E", "F", "G", "e", "f", "g", "H", "K", "k1", "k2", "residual")


def _dot(a, b):
    return np.sum(a * b, axis=-1)


def fundamental_quantities(d, atol=defaults.surface["atol"]):
    """Vectorized fundamental forms and curvatures from a derivative dict.

    Returns:
        dict: Arrays for ``QUANTITIES``, the unit normal "N" and the boolean
        mask "degenerate" (|X_u x X_v| < atol). Curvatures are NaN there.
    """
    Xu, Xv, Xuu, Xuv, Xvv = (d[key] for key in ("Xu", "Xv", "Xuu", "Xuv", "Xvv"))
    E, F, G = _dot(Xu, Xu), _dot(Xu, Xv), _dot(Xv, Xv)
    n = np.cross(Xu, Xv)
    norm = np.linalg.norm(n, axis=-1)
    degenerate = norm < atol
    N = n / np.where(degenerate, 1.0, norm)[..., None]
    e, f, g = -_dot(Xuu, N), -_dot(Xuv, N), -_dot(Xvv, N)
    with np.errstate(divide="ignore", invalid="ignore"):
        det = E * G - F**2
        H = -(e * G - 2 * f * F + g * E) / (2 * det)
        K = (e * g - f**2) / det
        root = np.sqrt(np.maximum(H**2 - K, 0.0))
    residual = np.linalg.norm(Xuu + Xvv - 2 * (E * H)[..., None] * N, axis=-1)
    out = {"E": E, "F": F, "G": G, "e": e, "f": f, "g": g, "H": H, "K": K, "k1": H + root, "k2": H - root}
    out["residual"] = residual
    for key in ("e", "f", "g", "H", "K", "k1", "k2", "residual"):
        out[key] = np.where(degenerate, np.nan, out[key])
    out["N"] = np.where(degenerate[..., None], np.nan, N)
    out["degenerate"] = degenerate
    return out


@dataclass(frozen=True)
class GeometryReport:
    """Fundamental forms and curvatures at one parameter point."""

    u: float
    v: float
    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    H: float
    K: float
    k1: float
    k2: float
    N: tuple
    residual: float

    @property
    def is_minimal(self):
        return abs(self.H) <= defaults.verify["h_atol"]

    def is_isothermal(self, rtol=defaults.verify["isothermal_rtol"]):
        scale = max(abs(self.E), abs(self.G), 1.0)
        return abs(self.E - self.G) <= rtol * scale and abs(self.F) <= rtol * scale

    def to_text(self):
        values = {key: float(getattr(self, key)) for key in QUANTITIES}
        values.update(u=self.u, v=self.v, N=[float(x) for x in self.N])
        return values


def check_second_derivatives(X, u, v, step=defaults.surface["fd_step"], rtol=defaults.surface["fd_rtol"]):
    """Compare X_uu, X_uv, X_vv with central differences of X_u and X_v at (u, v).

    X_uv is checked from both sides, d/du X_v and d/dv X_u.

    Returns:
        float: The largest deviation, relative to max(1, |second partials|).

    Raises:
        DerivativeMismatch: The deviation exceeds rtol.
    """
    u, v = float(u), float(v)
    d = X.derivatives(u, v)
    du_plus, du_minus = X.derivatives(u + step, v), X.derivatives(u - step, v)
    dv_plus, dv_minus = X.derivatives(u, v + step), X.derivatives(u, v - step)
    estimates = {
        "Xuu": (du_plus["Xu"] - du_minus["Xu"]) / (2 * step),
        "Xvv": (dv_plus["Xv"] - dv_minus["Xv"]) / (2 * step),
    }
    uv_estimates = [(du_plus["Xv"] - du_minus["Xv"]) / (2 * step), (dv_plus["Xu"] - dv_minus["Xu"]) / (2 * step)]
    scale = max(1.0, *(float(np.linalg.norm(d[key])) for key in ("Xuu", "Xuv", "Xvv")))
    deviation = max(
        *(float(np.linalg.norm(np.asarray(d[key]) - estimates[key])) for key in estimates),
        *(float(np.linalg.norm(np.asarray(d["Xuv"]) - e)) for e in uv_estimates),
    ) / scale
    logger.debug(f"finite difference deviation {deviation:.3e} at ({u}, {v})")
    if deviation > rtol:
        raise DerivativeMismatch(
            f"second partials deviate by {deviation:.3e} from central differences at ({u}, {v})", deviation
        )
    return deviation


def geometry_report(
    X,
    u,
    v,
    atol=defaults.surface["atol"],
    residual_atol=defaults.surface["residual_atol"],
    fd_check=defaults.surface["fd_check"],
    fd_step=defaults.surface["fd_step"],
):
    """Geometry of X at a single point (u, v).

    With ``fd_check`` the second partials are first compared with central
    differences of step ``fd_step``, see ``check_second_derivatives``.

    Raises:
        DerivativeMismatch: Only with fd_check.
        DegenerateNormal: |X_u x X_v| < atol at (u, v).
        NotIsothermal: The residual of X_uu + X_vv = 2 E H N exceeds residual_atol (relative to E).
    """
    if fd_check:
        check_second_derivatives(X, u, v, fd_step)
    d = X.derivatives(float(u), float(v))
    q = fundamental_quantities(d, atol)
    if bool(q["degenerate"]):
        raise DegenerateNormal(f"|X_u x X_v| < {atol} at (u, v) = ({u}, {v})")
    report = GeometryReport(
        u=float(u),
        v=float(v),
        N=tuple(float(x) for x in q["N"]),
        **{key: float(q[key]) for key in QUANTITIES},
    )
    scale = max(1.0, abs(report.E))
    if report.residual > residual_atol * scale:
        raise NotIsothermal(
            f"X_uu + X_vv - 2 E H N = {report.residual:.3e} at ({u}, {v}), the patch is not isothermal",
            report.residual,
        )
    return report


def geometry_grid(X, domain, nu, nv, atol=defaults.surface["atol"]):
    """Quantities on the (nv, nu) grid of ``domain``.

    Returns:
        dict: As ``fundamental_quantities`` plus the complex grid "z".
    """
    Z = domain.grid(nu, nv)
    q = fundamental_quantities(X.derivatives(Z.real, Z.imag), atol)
    q["z"] = Z
    n_degenerate = int(np.sum(q["degenerate"]))
    if n_degenerate:
        logger.info(f"{n_degenerate} grid points with a degenerate normal")
    return q


def normal_field(phi, lam, u, v, atol=1e-9):
    """X_u x X_v from the isotropic data alone.

    With Psi = lambda Phi = a + I b (a, b real vectors), X_u = a and
    X_v = -b, so X_u x X_v = -a x b. The result is checked against
    Re[-(I / 2) |lambda|^2 (Phi x conj(Phi))]. It is not normalized: scaling
    lambda by c scales it by |c|^2, and it vanishes at the roots of lambda.

    Parameters:
        phi: QLaurent or callable giving Phi(z) with shape z.shape + (4,).
        lam: CLaurent, RationalScale or constant.
        u, v: Parameter arrays.

    Returns:
        ndarray: Shape broadcast(u, v) + (3,).
    """
    z = np.asarray(u, dtype=float) + 1j * np.asarray(v, dtype=float)
    values = phi(z) if callable(phi) and not hasattr(phi, "terms") else phi.evaluate_numeric(z)
    values = values[..., 1:]
    scale = lam.evaluate_numeric(z) if hasattr(lam, "evaluate_numeric") else np.full(z.shape, complex(lam))
    psi = scale[..., None] * values
    a, b = psi.real, psi.imag
    n = -np.cross(a, b)
    alternative = np.real(-0.5j * (np.abs(scale) ** 2)[..., None] * np.cross(values, np.conj(values)))
    assert np.allclose(n, alternative, atol=atol * max(1.0, float(np.max(np.abs(n), initial=0.0)))), (
        "normal directions disagree"
    )
    return n


def lambda_singularities(lam, domain=None):
    """Roots of lambda (where the normal degenerates) with multiplicities.

    For a RationalScale the roots of the numerator are used. Roots are found
    on each squarefree factor, filtered to ``domain`` and sorted.

    Returns:
        list: (complex root, multiplicity) pairs.
    """
    num = lam.num if hasattr(lam, "den") else CLaurent.coerce(lam)
    if num.is_zero:
        raise ValueError("lambda vanishes identically")
    roots = []
    if num.valuation > 0:
        roots.append((0j, num.valuation))
    poly = num.shift(-num.valuation)
    if poly.degree > 0:
        for factor, multiplicity in squarefree_decomposition(poly):
            if factor.degree < 1:
                continue
            for root in np.roots(factor.numpy_coefficients()):
                roots.append((complex(root), multiplicity))
    if domain is not None:
        roots = [(r, m) for r, m in roots if bool(domain.contains(r))]
    return sorted(roots, key=lambda item: (item[0].real, item[0].imag))
