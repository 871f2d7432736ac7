"""The Sylvester operator S(z) = F z + z G on complex quaternions and the conjugacy solver.

Exact inputs are ``ComplexQuaternion``; floating inputs are complex arrays of
shape (4,) (e.g. coefficients with sqrt(2)/2). Rank decisions on the exact path
come from the closed form conditions only, the SVD rank is a cross-check.

Class structure:
- RankClass: Full, Rank3, Rank2, ScalarDegenerate
- SylvesterMatrix: 4x4 matrix in the basis (1, i, j, k)
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from mincq import defaults
from mincq.cq_core import (
    ComplexScalar,
    ComplexQuaternion,
    FloatComplexQuaternion,
    ONE,
    QI,
    QJ,
    QK,
)
from mincq.polyring import QLaurent, qsnorm
from mincq.errors import ConjugacyObstruction, NonInvertibleChi, SearchExhausted

logger = logging.getLogger(__name__)

BASIS = (ONE, QI, QJ, QK)


class RankClass(Enum):
    FULL = "Full"
    RANK3 = "Rank3"
    RANK2 = "Rank2"
    SCALAR_DEGENERATE = "ScalarDegenerate"

    def __str__(self):
        return self.value


def _is_exact(*values):
    return all(isinstance(v, ComplexQuaternion) for v in values)


@dataclass(frozen=True)
class SylvesterMatrix:
    """Matrix of z -> F z + z G; column n holds the coefficients of F e_n + e_n G.

    Attributes:
        entries (tuple): Rows of ComplexScalar (exact) or complex (floating) values.
        exact (bool): Whether the entries are exact.
    """

    entries: tuple
    exact: bool = True

    def __getitem__(self, index):
        row, col = index
        return self.entries[row][col]

    def to_numpy(self):
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex)

    def apply(self, z):
        """M vec(z) as a quaternion (exact) or a coefficient array (floating)."""
        if self.exact:
            z = ComplexQuaternion.coerce(z)
            return ComplexQuaternion(
                *(sum((m * c for m, c in zip(row, z.coeffs)), ComplexScalar()) for row in self.entries)
            )
        return self.to_numpy() @ np.asarray(z, dtype=complex)

    def determinant(self):
        """Exact Gaussian elimination (floating: numpy)."""
        if not self.exact:
            return complex(np.linalg.det(self.to_numpy()))
        rows = [list(row) for row in self.entries]
        n, det = len(rows), ComplexScalar(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col]), None)
            if pivot is None:
                return ComplexScalar()
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            p = rows[col][col]
            det = det * p
            inv = p.inverse()
            for r in range(col + 1, n):
                factor = rows[r][col] * inv
                if factor:
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
        return det

    def __str__(self):
        return "\n".join("  ".join(str(x) for x in row) for row in self.entries)


def operator_matrix(F, G):
    """Matrix of the Sylvester operator for (F, G).

    Parameters:
        F, G: ``ComplexQuaternion`` for the exact path, arrays of shape (4,) otherwise.

    Returns:
        SylvesterMatrix
    """
    if _is_exact(F, G):
        columns = [(F * e + e * G).coeffs for e in BASIS]
        return SylvesterMatrix(tuple(tuple(col[r] for col in columns) for r in range(4)), True)
    Ff = FloatComplexQuaternion(_as_array(F))
    Gf = FloatComplexQuaternion(_as_array(G))
    columns = [(Ff * e + FloatComplexQuaternion.from_exact(e) * Gf).coeffs for e in BASIS]
    return SylvesterMatrix(tuple(tuple(col[r] for col in columns) for r in range(4)), False)


def _as_array(value):
    if isinstance(value, ComplexQuaternion):
        return value.to_numpy()
    return np.asarray(value, dtype=complex)


def _invariants(F, G):
    """(F0 + G0, F_v^s, G_v^s) on either path."""
    if _is_exact(F, G):
        return F.scalar + G.scalar, F.vector_part().snorm(), G.vector_part().snorm()
    F, G = _as_array(F), _as_array(G)
    return F[0] + G[0], np.sum(F[1:] ** 2), np.sum(G[1:] ** 2)


def det_closed_form(F, G):
    """(F0+G0)^4 + 2 (F0+G0)^2 (F_v^s + G_v^s) + (F_v^s - G_v^s)^2; zero iff the operator is singular."""
    s, a, b = _invariants(F, G)
    s2 = s * s
    return s2 * s2 + 2 * s2 * (a + b) + (a - b) * (a - b)


def eigenvalues(F, G):
    """The four eigenvalues F0 + G0 +- I (sqrt(F_v^s) +- sqrt(G_v^s)), floating."""
    s, a, b = (complex(x) for x in _invariants(F, G))
    ra, rb = np.sqrt(a), np.sqrt(b)
    return np.array([s + 1j * (ra + rb), s + 1j * (ra - rb), s - 1j * (ra - rb), s - 1j * (ra + rb)])


def eigenvalue_deviation(F, G):
    """Largest distance between ``eigenvalues`` and a numeric eigensolve of the operator matrix.

    Each closed form eigenvalue is paired with the nearest numeric one not yet used.
    The distance is relative to max(1, largest modulus).
    """
    closed = list(eigenvalues(F, G))
    numeric = list(np.linalg.eigvals(operator_matrix(_as_array(F), _as_array(G)).to_numpy()))
    scale = max(1.0, *(abs(x) for x in closed))
    deviation = 0.0
    for value in closed:
        nearest = min(range(len(numeric)), key=lambda k: abs(numeric[k] - value))
        deviation = max(deviation, abs(numeric.pop(nearest) - value))
    return deviation / scale


def check_eigenvalues(F, G, rtol=defaults.sylvester["eig_rtol"]):
    """True if the closed form eigenvalues agree with the numeric ones within ``rtol``.

    Defective operators lose accuracy in the eigensolve, so a mismatch is logged, not raised.
    """
    deviation = eigenvalue_deviation(F, G)
    if deviation > rtol:
        logger.warning(f"closed form eigenvalues deviate by {deviation:.3e} from the numeric eigensolve")
        return False
    logger.debug(f"eigenvalue deviation {deviation:.3e}")
    return True


def classify_rank(F, G, atol=defaults.sylvester["atol"]):
    """Rank class from the closed form conditions.

    Parameters:
        F, G: Exact quaternions, or floating coefficient arrays.
        atol (float): Zero tolerance, used on the floating path only.

    Returns:
        RankClass
    """
    exact = _is_exact(F, G)

    def is_zero(x):
        return not x if exact else abs(complex(x)) <= atol

    if exact:
        f_vector, g_vector = F.vector, G.vector
    else:
        f_vector, g_vector = _as_array(F)[1:], _as_array(G)[1:]
    if all(is_zero(c) for c in f_vector) or all(is_zero(c) for c in g_vector):
        return RankClass.SCALAR_DEGENERATE
    s, a, b = _invariants(F, G)
    if is_zero(s) and is_zero(a - b):
        return RankClass.RANK2
    if is_zero(det_closed_form(F, G)):
        return RankClass.RANK3
    return RankClass.FULL


def numeric_rank(F, G, tol=defaults.sylvester["svd_rtol"]):
    """SVD rank of the floating operator matrix, relative tolerance ``tol``."""
    from scipy.linalg import svdvals

    sv = svdvals(operator_matrix(_as_array(F), _as_array(G)).to_numpy())
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > tol * sv[0]))


def solve_conjugator(f, g, h):
    """chi = f h - h gc, which satisfies f chi = chi g whenever f0 = g0 and f_v^s = g_v^s.

    With g = L this is Phi h + h L. If f and g are both scalar every h commutes
    and h itself is returned.

    Parameters:
        f, g (QLaurent): Quaternion Laurent polynomials (constants are accepted).
        h (QLaurent): Seed.

    Returns:
        QLaurent: chi with nonvanishing complex norm.
    """
    f, g, h = QLaurent.coerce(f), QLaurent.coerce(g), QLaurent.coerce(h)
    if f.scalar_part() != g.scalar_part():
        raise ConjugacyObstruction("scalar parts differ")
    fv, gv = f.vector_part(), g.vector_part()
    if qsnorm(fv) != qsnorm(gv):
        raise ConjugacyObstruction("norms of the vector parts differ")
    if fv.is_zero and gv.is_zero:
        chi = h
    else:
        chi = f * h - h * g.conj_quat()
    if qsnorm(chi).is_zero:
        raise NonInvertibleChi(f"chi built from h = {h} has vanishing norm, try another h")
    return chi


def conjugator_ladder(f, g):
    """Seeds z^(m+d) e for d = 0, 1, ... and e in (1, i, j, k).

    m clears the pole order of f and g at 0 so that chi is a polynomial.
    """
    f, g = QLaurent.coerce(f), QLaurent.coerce(g)
    valuations = [p.valuation for p in (f, g) if p]
    m = max(0, -min(valuations)) if valuations else 0
    d = 0
    while True:
        for e in BASIS:
            yield QLaurent.monomial(m + d, e)
        d += 1


def find_conjugator(f, g, budget=defaults.conjugator["budget"]):
    """First ladder seed with an invertible chi.

    Returns:
        tuple: (h, chi)
    """
    for count, h in enumerate(conjugator_ladder(f, g)):
        if count >= budget:
            break
        try:
            chi = solve_conjugator(f, g, h)
        except NonInvertibleChi:
            logger.debug(f"conjugator seed {h} gives a null chi")
            continue
        logger.debug(f"conjugator seed {h} accepted after {count + 1} candidates")
        return h, chi
    raise SearchExhausted(f"no invertible conjugator within {budget} candidates")


def find_invertible_h(f, g, budget=defaults.conjugator["budget"]):
    return find_conjugator(f, g, budget)[0]
