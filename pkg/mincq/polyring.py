"""Laurent polynomials in one complex variable z with exact coefficients.

Class structure:
- Laurent: sparse map exponent -> coefficient, shared ring arithmetic
    - CLaurent: ComplexScalar coefficients (houses f, g, p, q, w, lambda, sigma)
    - QLaurent: ComplexQuaternion coefficients (houses Phi, A, B, C, chi, h)
- AntiderivativeForm: Laurent primitive plus logarithmic terms

``CPoly`` and ``QPoly`` are the same classes; polynomial operations (gcd,
Bezout, division) check that no negative exponent is present. Products keep
the order of the factors, quaternion coefficients do not commute.
"""

import logging
from dataclasses import dataclass

import numpy as np

from mincq.cq_core import ComplexScalar, ComplexQuaternion
from mincq.errors import (
    PoleEvaluation,
    UnsupportedPoleStructure,
    BothZero,
    InexactDivision,
    NotPolynomial,
)

logger = logging.getLogger(__name__)


class Laurent:
    """Sparse Laurent polynomial; zero coefficients are never stored.

    Parameters:
        terms (dict): Map from integer exponent to coefficient. A single
            coefficient is read as a constant.
    """

    coefficient = None
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, Laurent):
            terms = terms._terms
        elif not isinstance(terms, dict):
            terms = {0: terms}
        coerced = {}
        for e, c in terms.items():
            c = self.coefficient.coerce(c)
            if c:
                coerced[int(e)] = c
        self._terms = coerced

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, Laurent):
            return cls(value._terms)
        return cls.constant(value)

    # --- structure ---

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._terms.items())

    @property
    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        return max(self._terms) if self._terms else None

    @property
    def valuation(self):
        return min(self._terms) if self._terms else None

    @property
    def is_polynomial(self):
        return not self._terms or min(self._terms) >= 0

    @property
    def is_constant(self):
        return not self._terms or set(self._terms) == {0}

    @property
    def is_monomial(self):
        return len(self._terms) == 1

    def coeff(self, e):
        return self._terms.get(e, self.coefficient())

    def leading(self):
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._terms[max(self._terms)]

    def shift(self, k):
        """Multiplication by z**k."""
        return type(self)({e + k: c for e, c in self._terms.items()})

    # --- arithmetic ---

    def __add__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return _result_type(self, other)(terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                prod = c1 * c2
                terms[e] = terms[e] + prod if e in terms else prod
        return _result_type(self, other)(terms)

    def __rmul__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        if isinstance(other, Laurent):
            return exact_div(self, other)
        try:
            other = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        inv = other.inverse()
        return type(self)({e: c * inv for e, c in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = type(self).constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # --- evaluation and calculus ---

    def evaluate(self, z):
        """Exact Horner evaluation at a ComplexScalar z."""
        z = ComplexScalar.coerce(z)
        if not self._terms:
            return self.coefficient()
        low, high = min(self._terms), max(self._terms)
        acc = self.coefficient()
        for e in range(max(high, 0), -1, -1):
            acc = acc * z + self.coeff(e)
        if low < 0:
            if not z:
                raise PoleEvaluation(f"{self} has a pole at 0")
            w, neg = z.inverse(), self.coefficient()
            for m in range(-low, 0, -1):
                neg = (neg + self.coeff(-m)) * w
            acc = acc + neg
        return acc

    __call__ = evaluate

    def evaluate_numeric(self, z):
        """Vectorized floating evaluation.

        Returns:
            ndarray: Shape ``z.shape`` for scalar coefficients, ``z.shape + (4,)`` for quaternions.
        """
        z = np.asarray(z, dtype=complex)
        if self._terms and min(self._terms) < 0 and np.any(z == 0):
            raise PoleEvaluation(f"{self} has a pole at 0")
        out = np.zeros(z.shape + self._numeric_shape, dtype=complex)
        for e, c in self._terms.items():
            zp = np.power(z, e)
            out += zp[(...,) + (None,) * len(self._numeric_shape)] * _numeric(c)
        return out

    def derivative(self):
        return type(self)({e - 1: c * e for e, c in self._terms.items() if e != 0})

    def to_text(self):
        """List of [exponent, coefficient] records sorted by exponent."""
        return [[e, c.to_text()] for e, c in self.items()]

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            monomial = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            parts.append(f"({c}){'*' + monomial if monomial else ''}")
        return " + ".join(parts)


class CLaurent(Laurent):
    """Laurent polynomial with ComplexScalar coefficients."""

    coefficient = ComplexScalar
    __slots__ = ()
    _numeric_shape = ()

    def conjugate(self):
        """Coefficient-wise complex conjugation."""
        return CLaurent({e: c.conjugate() for e, c in self._terms.items()})

    @property
    def is_real(self):
        return all(c.is_real for c in self._terms.values())

    def to_sympy(self, var):
        return sum((c.to_sympy() * var**e for e, c in self._terms.items()), 0)

    def numpy_coefficients(self):
        """Coefficients of a polynomial, highest degree first (``numpy.roots`` order)."""
        if not self.is_polynomial:
            raise NotPolynomial(f"{self} has negative exponents")
        return np.array([complex(self.coeff(e)) for e in range(self.degree, -1, -1)])


class QLaurent(Laurent):
    """Laurent polynomial with ComplexQuaternion coefficients."""

    coefficient = ComplexQuaternion
    __slots__ = ()
    _numeric_shape = (4,)

    @classmethod
    def from_components(cls, c0=None, c1=None, c2=None, c3=None):
        """Assembles c0 + c1 i + c2 j + c3 k from four CLaurent components."""
        comps = [CLaurent.coerce(c) if c is not None else CLaurent() for c in (c0, c1, c2, c3)]
        terms = {}
        for n, comp in enumerate(comps):
            for e, c in comp._terms.items():
                coeffs = list(terms.get(e, (0, 0, 0, 0)))
                coeffs[n] = c
                terms[e] = tuple(coeffs)
        return cls({e: ComplexQuaternion(*c) for e, c in terms.items()})

    def components(self):
        """The four CLaurent components (scalar, i, j, k)."""
        return tuple(
            CLaurent({e: c.coeffs[n] for e, c in self._terms.items()}) for n in range(4)
        )

    def scalar_part(self):
        return self.components()[0]

    def vector_part(self):
        return QLaurent({e: c.vector_part() for e, c in self._terms.items()})

    def conj_quat(self):
        return QLaurent({e: c.conj_quat() for e, c in self._terms.items()})

    def conj_complex(self):
        return QLaurent({e: c.conj_complex() for e, c in self._terms.items()})

    @property
    def is_real(self):
        return all(c.is_real for c in self._terms.values())

    @property
    def is_vector(self):
        return all(c.is_vector for c in self._terms.values())


CPoly = CLaurent
QPoly = QLaurent

Z = CLaurent.monomial(1)


def _lift(value):
    if isinstance(value, Laurent):
        return value
    if isinstance(value, ComplexQuaternion):
        return QLaurent.constant(value)
    return CLaurent.constant(ComplexScalar.coerce(value))


def _result_type(a, b):
    return QLaurent if isinstance(a, QLaurent) or isinstance(b, QLaurent) else CLaurent


def _numeric(c):
    return c.to_numpy() if isinstance(c, ComplexQuaternion) else complex(c)


def _require_polynomial(*polys):
    for p in polys:
        if not p.is_polynomial:
            raise NotPolynomial(f"{p} has negative exponents")


def evaluate(p, z):
    """Exact evaluation p(z); ``PoleEvaluation`` at z = 0 for Laurent terms."""
    return p.evaluate(z)


def derivative(p):
    return p.derivative()


def qmul(a, b):
    """Coefficient-order preserving product of two quaternion Laurent polynomials."""
    return QLaurent.coerce(a) * QLaurent.coerce(b)


def qsnorm(a):
    """a * ac, which is scalar; returned as CLaurent."""
    a = QLaurent.coerce(a)
    product = a * a.conj_quat()
    assert product.vector_part().is_zero, "vector part of a * ac must vanish"
    return product.scalar_part()


def residue(p, pole=0):
    """Residue of a Laurent polynomial; away from 0 it is holomorphic and the residue is zero."""
    pole = ComplexScalar.coerce(pole)
    if pole:
        return p.coefficient()
    return p.coeff(-1)


@dataclass(frozen=True)
class AntiderivativeForm:
    """Primitive of a Laurent polynomial.

    Attributes:
        principal (Laurent): Laurent primitive without a z^-1 term.
        log_terms (tuple): Pairs (pole, residue) contributing residue * log(z - pole).
    """

    principal: Laurent
    log_terms: tuple = ()

    @property
    def is_rational(self):
        return not self.log_terms

    def derivative(self):
        result = self.principal.derivative()
        for pole, res in self.log_terms:
            # only poles at 0 are produced by antiderivative()
            assert not pole
            result = result + type(self.principal).monomial(-1, res)
        return result

    def evaluate_numeric(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.principal.evaluate_numeric(z)
        for pole, res in self.log_terms:
            logz = np.log(z - complex(pole))
            out = out + logz[(...,) + (None,) * (out.ndim - z.ndim)] * _numeric(res)
        return out


def antiderivative(p, poles=None):
    """Exact primitive of a Laurent polynomial.

    Parameters:
        p (Laurent): Integrand.
        poles (list): Poles the integrand is expanded around. Only 0 is
            supported; defaults to [0] when p has negative exponents.

    Returns:
        AntiderivativeForm: z^-1 coefficients become log terms.
    """
    if poles is None:
        poles = [0] if not p.is_polynomial else []
    poles = [ComplexScalar.coerce(pole) for pole in poles]
    for pole in poles:
        if pole:
            raise UnsupportedPoleStructure(
                f"exact integration around the pole {pole} is not supported, use the numeric path"
            )
    if not p.is_polynomial and not poles:
        raise UnsupportedPoleStructure("integrand has a pole at 0 which is not listed")
    principal = type(p)({e + 1: c / (e + 1) for e, c in p._terms.items() if e != -1})
    log_terms = ((ComplexScalar(0), p.coeff(-1)),) if p.coeff(-1) else ()
    return AntiderivativeForm(principal, log_terms)


def poly_divmod(a, b):
    """Polynomial long division a = q b + r with deg r < deg b.

    ``a`` may have quaternion coefficients, ``b`` is a scalar polynomial.
    """
    _require_polynomial(a, b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    db, inv_lead = b.degree, b.leading().inverse()
    quotient, remainder = {}, dict(a._terms)
    while remainder and max(remainder) >= db:
        e = max(remainder)
        coef = remainder[e] * inv_lead
        quotient[e - db] = coef
        for eb, cb in b._terms.items():
            k = e - db + eb
            value = remainder.get(k, a.coefficient()) - coef * cb
            if value:
                remainder[k] = value
            else:
                remainder.pop(k, None)
    return type(a)(quotient), type(a)(remainder)


def exact_div(a, b):
    """Exact Laurent division a / b; ``InexactDivision`` if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return type(a)()
    va, vb = a.valuation, b.valuation
    q, r = poly_divmod(a.shift(-va), b.shift(-vb))
    if not r.is_zero:
        raise InexactDivision(f"{b} does not divide {a}")
    return q.shift(va - vb)


def monic(p):
    return p / p.leading() if p else p


def gcd(a, b):
    """Monic greatest common divisor of two scalar polynomials (Euclid over Q(I))."""
    a, b = CLaurent.coerce(a), CLaurent.coerce(b)
    _require_polynomial(a, b)
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return monic(a)


def gcd_many(*polys):
    """gcd of several polynomials by folding; zero polynomials are skipped."""
    nonzero = [CLaurent.coerce(p) for p in polys if p]
    if not nonzero:
        raise BothZero("gcd of zero polynomials is undefined")
    result = monic(nonzero[0])
    for p in nonzero[1:]:
        result = gcd(result, p)
    return result


def bezout(a, b):
    """Extended Euclid: returns (g, alpha, beta) with alpha*a + beta*b = g, g monic."""
    a, b = CLaurent.coerce(a), CLaurent.coerce(b)
    _require_polynomial(a, b)
    if a.is_zero and b.is_zero:
        raise BothZero("Bezout cofactors of (0, 0) are undefined")
    one, zero = CLaurent.constant(1), CLaurent()
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.leading().inverse()
    return r0 * inv, s0 * inv, t0 * inv


def reduce_fraction(num, den):
    """Cancels num / den to coprime polynomials with a monic denominator."""
    num, den = CLaurent.coerce(num), CLaurent.coerce(den)
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return CLaurent(), CLaurent.constant(1)
    k = num.valuation - den.valuation
    n, d = num.shift(-num.valuation), den.shift(-den.valuation)
    g = gcd(n, d)
    n, d = exact_div(n, g), exact_div(d, g)
    if k >= 0:
        n = n.shift(k)
    else:
        d = d.shift(-k)
    inv = d.leading().inverse()
    return n * inv, d * inv


def squarefree_decomposition(p):
    """Yun's algorithm: monic square-free factors with their multiplicities.

    Returns:
        list: Pairs (factor, multiplicity), constants omitted.
    """
    p = CLaurent.coerce(p)
    _require_polynomial(p)
    if p.is_zero:
        raise ValueError("square-free decomposition of the zero polynomial")
    if p.is_constant:
        return []
    dp = p.derivative()
    a0 = gcd(p, dp)
    b, c = exact_div(p, a0), exact_div(dp, a0)
    d = c - b.derivative()
    factors, multiplicity = [], 1
    while not b.is_constant:
        a = gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        if not a.is_constant:
            factors.append((a, multiplicity))
        multiplicity += 1
    logger.debug(f"square-free decomposition of {p}: {[(str(f), m) for f, m in factors]}")
    return factors


def compose_affine(p, a, b):
    """p(a w + b) as a Laurent polynomial in w; a pole at 0 only survives b = 0."""
    a, b = ComplexScalar.coerce(a), ComplexScalar.coerce(b)
    if not a:
        raise ValueError("affine substitution needs a nonzero slope")
    if not b:
        return type(p)({e: c * a**e for e, c in p._terms.items()})
    if not p.is_polynomial:
        raise UnsupportedPoleStructure("shifting a Laurent polynomial moves its pole away from 0")
    if p.is_zero:
        return p
    linear = CLaurent({1: a, 0: b})
    result = type(p)()
    for e in range(p.degree, -1, -1):
        result = result * linear + p.coeff(e)
    return type(p).coerce(result)
