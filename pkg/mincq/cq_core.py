"""Exact arithmetic in the algebra of complex quaternions.

A complex quaternion is z = z0 + z1 i + z2 j + z3 k with complex coefficients
zl = a + b I. The complex unit I commutes with the quaternion units i, j, k.

Class structure:
- ComplexScalar: Gaussian rational a + b I with exact ``Fraction`` parts.
- ComplexQuaternion: four ComplexScalar coefficients, both conjugations and the
  complex squared norm zs = z zc = z0^2 + z1^2 + z2^2 + z3^2.
- FloatComplexQuaternion: numpy mirror with shape (..., 4) for sampling and
  eigenvalue computations.

All exact values are immutable and hashable.
"""

from fractions import Fraction
from math import isqrt
import numbers

import numpy as np

from mincq.errors import ZeroComplexNorm, ParseError


def to_fraction(value):
    """Converts an exact rational (int, Fraction, sympy Rational, "num/den" string) to a Fraction.

    Floats are rejected, the exact path never guesses a rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    p, q = getattr(value, "p", None), getattr(value, "q", None)
    if isinstance(p, int) and isinstance(q, int):
        return Fraction(p, q)
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"{value!r} is not an exact rational")


def fraction_sqrt(value):
    """Exact square root of a nonnegative Fraction, or None if it is irrational."""
    value = to_fraction(value)
    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def format_fraction(value):
    return f"{value.numerator}/{value.denominator}"


class ComplexScalar:
    """Exact complex number re + im*I with rational parts.

    Parameters:
        re: Real part (int, Fraction, sympy Rational or "num/den").
        im: Imaginary part.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = to_fraction(re)
        self._im = to_fraction(im)

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, (complex, float, np.floating, np.complexfloating)):
            raise TypeError(f"floating value {value!r} on the exact path")
        return cls(value)

    @classmethod
    def from_sympy(cls, expr, location="$"):
        """Exact conversion of a sympy number; irrational values raise ``ParseError``."""
        import sympy

        expr = sympy.sympify(expr)
        re, im = sympy.re(expr), sympy.im(expr)
        if not (re.is_Rational and im.is_Rational):
            raise ParseError(f"'{expr}' is not a Gaussian rational", location)
        return cls(re, im)

    def to_sympy(self):
        import sympy

        re = sympy.Rational(self._re.numerator, self._re.denominator)
        im = sympy.Rational(self._im.numerator, self._im.denominator)
        return re + sympy.I * im

    @classmethod
    def _other(cls, value):
        try:
            return cls.coerce(value)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return ComplexScalar(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return ComplexScalar(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ComplexScalar(-self._re, -self._im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return ComplexScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("division by the complex zero")
        return ComplexScalar(self._re / n, -self._im / n)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ComplexScalar(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def conjugate(self):
        return ComplexScalar(self._re, -self._im)

    def abs2(self):
        """|z|^2 as a Fraction."""
        return self._re * self._re + self._im * self._im

    @property
    def is_real(self):
        return self._im == 0

    def sqrt_exact(self):
        """Principal square root in Q(I), or None if it does not exist.

        The root r = x + y I has x > 0, or x = 0 and y >= 0.
        """
        a, b = self._re, self._im
        modulus = fraction_sqrt(a * a + b * b)
        if modulus is None:
            return None
        x = fraction_sqrt((modulus + a) / 2)
        y = fraction_sqrt((modulus - a) / 2)
        if x is None or y is None:
            return None
        if b < 0 and x != 0:
            y = -y
        return ComplexScalar(x, y)

    def to_text(self):
        """Textual form ``["num/den", "num/den"]`` used in all file formats."""
        return [format_fraction(self._re), format_fraction(self._im)]

    def __repr__(self):
        return f"ComplexScalar({self._re}, {self._im})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}*I"
        sign = "-" if self._im < 0 else "+"
        return f"({self._re} {sign} {abs(self._im)}*I)"


IMAG = ComplexScalar(0, 1)


class ComplexQuaternion:
    """Exact complex quaternion z0 + z1 i + z2 j + z3 k.

    Parameters:
        z0, z1, z2, z3: Coefficients, anything ``ComplexScalar.coerce`` accepts.
    """

    __slots__ = ("_c",)

    def __init__(self, z0=0, z1=0, z2=0, z3=0):
        self._c = tuple(ComplexScalar.coerce(z) for z in (z0, z1, z2, z3))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls(value)

    @classmethod
    def _other(cls, value):
        try:
            return cls.coerce(value)
        except TypeError:
            return None

    @property
    def coeffs(self):
        return self._c

    z0 = property(lambda self: self._c[0])
    z1 = property(lambda self: self._c[1])
    z2 = property(lambda self: self._c[2])
    z3 = property(lambda self: self._c[3])

    @property
    def scalar(self):
        return self._c[0]

    @property
    def vector(self):
        return self._c[1:]

    def vector_part(self):
        return ComplexQuaternion(0, *self._c[1:])

    def __iter__(self):
        return iter(self._c)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return ComplexQuaternion(*(a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return ComplexQuaternion(*(a - b for a, b in zip(self._c, other._c)))

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ComplexQuaternion(*(-a for a in self._c))

    def __mul__(self, other):
        if isinstance(other, ComplexQuaternion):
            return mul(self, other)
        try:
            other = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexQuaternion(*(a * other for a in self._c))

    def __rmul__(self, other):
        try:
            other = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexQuaternion(*(other * a for a in self._c))

    def __truediv__(self, other):
        if isinstance(other, ComplexQuaternion):
            return self * other.inverse()
        try:
            other = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if not any(self._c[1:]):
            return hash(self._c[0])
        return hash(self._c)

    def __bool__(self):
        return any(self._c)

    @property
    def is_zero(self):
        return not any(self._c)

    @property
    def is_vector(self):
        return not self._c[0]

    @property
    def is_real(self):
        return all(c.is_real for c in self._c)

    def conj_quat(self):
        """zc = z0 - z_v."""
        z0, z1, z2, z3 = self._c
        return ComplexQuaternion(z0, -z1, -z2, -z3)

    def conj_complex(self):
        """Coefficient-wise complex conjugate."""
        return ComplexQuaternion(*(c.conjugate() for c in self._c))

    def snorm(self):
        """Complex squared norm z0^2 + z1^2 + z2^2 + z3^2."""
        return sum((c * c for c in self._c), ComplexScalar())

    def inverse(self):
        n = self.snorm()
        if not n:
            raise ZeroComplexNorm(f"{self} has zero complex norm")
        return self.conj_quat() * n.inverse()

    def dot(self, other):
        """Bilinear (not Hermitian) product of the vector parts."""
        return sum((a * b for a, b in zip(self._c[1:], other._c[1:])), ComplexScalar())

    def cross(self, other):
        a1, a2, a3 = self._c[1:]
        b1, b2, b3 = other._c[1:]
        return ComplexQuaternion(0, a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)

    def real_part(self):
        """q of the split z = q + I p."""
        return ComplexQuaternion(*(c.re for c in self._c))

    def imag_part(self):
        """p of the split z = q + I p."""
        return ComplexQuaternion(*(c.im for c in self._c))

    def to_numpy(self):
        return np.array([complex(c) for c in self._c], dtype=complex)

    def to_text(self):
        return [c.to_text() for c in self._c]

    def __repr__(self):
        return "ComplexQuaternion({})".format(", ".join(str(c) for c in self._c))

    def __str__(self):
        terms = [
            f"{c}{unit}" if unit == "" else f"{c}*{unit}"
            for c, unit in zip(self._c, ("", "i", "j", "k"))
            if c
        ]
        return " + ".join(terms) if terms else "0"


def mul(a, b):
    """Product z0 w0 - <z_v, w_v> + z0 w_v + w0 z_v + z_v x w_v."""
    a0, a1, a2, a3 = a.coeffs
    b0, b1, b2, b3 = b.coeffs
    return ComplexQuaternion(
        a0 * b0 - (a1 * b1 + a2 * b2 + a3 * b3),
        a0 * b1 + b0 * a1 + (a2 * b3 - a3 * b2),
        a0 * b2 + b0 * a2 + (a3 * b1 - a1 * b3),
        a0 * b3 + b0 * a3 + (a1 * b2 - a2 * b1),
    )


def conj_quat(z):
    return z.conj_quat()


def conj_complex(z):
    return z.conj_complex()


def snorm(z):
    return z.snorm()


def inverse(z):
    return z.inverse()


ONE = ComplexQuaternion(1)
QI = ComplexQuaternion(0, 1)
QJ = ComplexQuaternion(0, 0, 1)
QK = ComplexQuaternion(0, 0, 0, 1)
L = QI + IMAG * QJ  # fixed null quaternion i + I j


class FloatComplexQuaternion:
    """Floating mirror of ComplexQuaternion, vectorized over leading axes.

    Parameters:
        coeffs (ndarray): Complex array of shape (..., 4).
    """

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=complex)
        if self.coeffs.shape[-1:] != (4,):
            raise ValueError(f"expected shape (..., 4), got {self.coeffs.shape}")

    @classmethod
    def from_exact(cls, z):
        return cls(z.to_numpy())

    @property
    def scalar(self):
        return self.coeffs[..., 0]

    @property
    def vector(self):
        return self.coeffs[..., 1:]

    def __add__(self, other):
        return FloatComplexQuaternion(self.coeffs + _as_float_coeffs(other))

    def __sub__(self, other):
        return FloatComplexQuaternion(self.coeffs - _as_float_coeffs(other))

    def __neg__(self):
        return FloatComplexQuaternion(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (FloatComplexQuaternion, ComplexQuaternion)):
            b = _as_float_coeffs(other)
            a = self.coeffs
            a0, av = a[..., 0], a[..., 1:]
            b0, bv = b[..., 0], b[..., 1:]
            s = a0 * b0 - np.sum(av * bv, axis=-1)
            v = a0[..., None] * bv + b0[..., None] * av + np.cross(av, bv)
            return FloatComplexQuaternion(np.concatenate([s[..., None], v], axis=-1))
        return FloatComplexQuaternion(self.coeffs * np.asarray(other, dtype=complex)[..., None])

    def __rmul__(self, other):
        if isinstance(other, ComplexQuaternion):
            return FloatComplexQuaternion.from_exact(other) * self
        return self * other

    def conj_quat(self):
        c = self.coeffs.copy()
        c[..., 1:] *= -1
        return FloatComplexQuaternion(c)

    def conj_complex(self):
        return FloatComplexQuaternion(np.conj(self.coeffs))

    def snorm(self):
        return np.sum(self.coeffs * self.coeffs, axis=-1)

    def allclose(self, other, atol=1e-9):
        return np.allclose(self.coeffs, _as_float_coeffs(other), atol=atol)


def _as_float_coeffs(value):
    if isinstance(value, FloatComplexQuaternion):
        return value.coeffs
    if isinstance(value, ComplexQuaternion):
        return value.to_numpy()
    return np.asarray(value, dtype=complex)


def parse_scalar(value, exact=True, location="$"):
    """Parses a scalar from a file entry or a command line expression.

    Parameters:
        value: ``[re, im]`` pair, int, Fraction, ComplexScalar or a sympy expression
            string such as ``"5 - 2*I"`` or ``"sqrt(2)/2"``.
        exact (bool): On the exact path irrational values raise ``ParseError``;
            otherwise a python complex is returned.
        location (str): Path reported in errors.

    Returns:
        ComplexScalar or complex.
    """
    import sympy

    if isinstance(value, ComplexScalar):
        return value if exact else complex(value)
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ParseError("a complex scalar is a [re, im] pair", location)
        re = parse_scalar(value[0], exact, f"{location}[0]")
        im = parse_scalar(value[1], exact, f"{location}[1]")
        return re + IMAG * im if exact else re + 1j * im
    if isinstance(value, bool) or value is None:
        raise ParseError(f"{value!r} is not a number", location)
    if isinstance(value, (int, Fraction)):
        return ComplexScalar(value) if exact else complex(value)
    if isinstance(value, (float, complex)):
        if exact:
            raise ParseError(f"floating value {value!r} on the exact path", location)
        return complex(value)
    try:
        expr = sympy.sympify(value, rational=isinstance(value, str) and exact)
    except (sympy.SympifyError, SyntaxError, TypeError) as err:
        raise ParseError(f"cannot parse {value!r}: {err}", location)
    if expr.free_symbols:
        raise ParseError(f"unexpected symbols {sorted(map(str, expr.free_symbols))}", location)
    re, im = sympy.re(expr), sympy.im(expr)
    if re.is_Rational and im.is_Rational:
        return ComplexScalar(re, im) if exact else complex(sympy.N(expr))
    if exact:
        raise ParseError(f"'{value}' is irrational, use the floating path", location)
    return complex(sympy.N(expr))


def parse_quaternion(value, exact=True, location="$"):
    """Parses four coefficients, given as a list or a comma separated string.

    Returns:
        ComplexQuaternion on the exact path, complex ndarray of shape (4,) otherwise.
    """
    if isinstance(value, ComplexQuaternion):
        return value if exact else value.to_numpy()
    if isinstance(value, str):
        value = [v for v in value.split(",")]
    if not isinstance(value, (list, tuple)) or len(value) != 4:
        raise ParseError("a complex quaternion has four coefficients z0, z1, z2, z3", location)
    coeffs = [parse_scalar(v, exact, f"{location}[{n}]") for n, v in enumerate(value)]
    if exact:
        return ComplexQuaternion(*coeffs)
    return np.array(coeffs, dtype=complex)
