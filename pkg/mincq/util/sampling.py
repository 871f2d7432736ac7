"""Random exact values for property checks.

All draws come from a ``numpy.random.Generator`` so results are reproducible
from a seed. Coefficients are small Gaussian rationals.
"""

from fractions import Fraction

import numpy as np

from mincq.cq_core import ComplexScalar, ComplexQuaternion


def random_rational(rng, bound=5, max_den=3):
    return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, max_den + 1)))


def random_scalar(rng, bound=5, real=False):
    im = 0 if real else random_rational(rng, bound)
    return ComplexScalar(random_rational(rng, bound), im)


def random_nonzero_scalar(rng, bound=5, real=False):
    while True:
        c = random_scalar(rng, bound, real)
        if c:
            return c


def random_quaternion(rng, bound=5, real=False):
    return ComplexQuaternion(*(random_scalar(rng, bound, real) for _ in range(4)))


def random_invertible_quaternion(rng, bound=5, real=False):
    while True:
        q = random_quaternion(rng, bound, real)
        if q.snorm():
            return q


def random_claurent(rng, degree=2, valuation=0, bound=5, real=False):
    from mincq.polyring import CLaurent

    return CLaurent({e: random_scalar(rng, bound, real) for e in range(valuation, degree + 1)})


def random_qlaurent(rng, degree=2, valuation=0, bound=5, real=False):
    from mincq.polyring import QLaurent

    return QLaurent({e: random_quaternion(rng, bound, real) for e in range(valuation, degree + 1)})


def random_points(rng, n, low=-1.0, high=1.0):
    """n random complex points in the square [low, high]^2."""
    return rng.uniform(low, high, n) + 1j * rng.uniform(low, high, n)


def default_rng(seed=0):
    return np.random.default_rng(seed)
