"""Parameter domains in the (u, v) plane, z = u + I v.

Domains are parallelograms given by their anticlockwise corners P0..P3 as
complex floats; grids are the bilinear images of a regular (nu, nv) grid.
"""

from abc import abstractmethod

import numpy as np

from mincq.util.base_class import CustomABC
from mincq.errors import ParseError


class Domain(CustomABC):
    labels = {}

    @abstractmethod
    def corners(self):
        """Anticlockwise corners P0, P1, P2, P3 as complex numbers."""
        pass

    def vertices(self):
        return np.array([[p.real, p.imag] for p in self.corners()])

    def center(self):
        return complex(np.mean(self.corners()))

    def diameter(self):
        c = self.corners()
        return max(abs(a - b) for a in c for b in c)

    def contains(self, z, tol=1e-12):
        """Whether z (array) lies in the closed domain."""
        z = np.asarray(z, dtype=complex)
        c = self.corners()
        inside = np.ones(z.shape, dtype=bool)
        for a, b in zip(c, c[1:] + c[:1]):
            edge, rel = b - a, z - a
            cross = edge.real * rel.imag - edge.imag * rel.real
            inside &= cross >= -tol * abs(edge)
        return inside

    def excludes_point(self, z):
        return not bool(self.contains(z))

    def crosses_negative_real_axis(self):
        """Whether the closed domain meets {u <= 0, v = 0}, the branch cut of log."""
        c = self.corners()
        for a, b in zip(c, c[1:] + c[:1]):
            if a.imag == 0 and b.imag == 0:
                if min(a.real, b.real) <= 0:
                    return True
            elif a.imag * b.imag <= 0:
                x = a.real - a.imag * (b.real - a.real) / (b.imag - a.imag)
                if x <= 0:
                    return True
        return False

    def grid(self, nu, nv):
        """Points P0 + s (P1 - P0) + t (P3 - P0), s and t on regular grids.

        Returns:
            ndarray: Complex array of shape (nv, nu), row-major in u.
        """
        p0, p1, _, p3 = self.corners()
        s = np.linspace(0.0, 1.0, nu)
        t = np.linspace(0.0, 1.0, nv)
        S, T = np.meshgrid(s, t)
        return p0 + S * (p1 - p0) + T * (p3 - p0)

    def to_text(self):
        return [[p.real, p.imag] for p in self.corners()]


@Domain.register("box")
class BoxDomain(Domain):
    """Axis aligned box [u0, u1] x [v0, v1]."""

    def __init__(self, u0, u1, v0, v1):
        if not (u0 < u1 and v0 < v1):
            raise ParseError(f"empty box [{u0}, {u1}] x [{v0}, {v1}]", "domain")
        self.u0, self.u1, self.v0, self.v1 = (float(x) for x in (u0, u1, v0, v1))

    @classmethod
    def from_list(cls, values):
        return cls(*values)

    def corners(self):
        return [
            complex(self.u0, self.v0),
            complex(self.u1, self.v0),
            complex(self.u1, self.v1),
            complex(self.u0, self.v1),
        ]

    def __repr__(self):
        return f"BoxDomain({self.u0}, {self.u1}, {self.v0}, {self.v1})"
