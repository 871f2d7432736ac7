"""Exceptions raised by mincq.

Every error derives from ``MincqError`` and from the closest builtin exception,
so callers can catch either. The command line maps any ``MincqError`` to exit
code 3 (input error); failed verification checks are reported, not raised.

Class structure:
- MincqError
    - algebra: ZeroComplexNorm, ParseError
    - polynomials: PoleEvaluation, UnsupportedPoleStructure, BothZero, InexactDivision, NotPolynomial
    - sylvester: ConjugacyObstruction, NonInvertibleChi, SearchExhausted
    - representations: NotIsotropic, DegenerateWE, IncompatibleWE, NonPolynomialScale
    - surfaces: PoleInDomain, DegenerateNormal, InvalidGrid, NotIsothermal, DerivativeMismatch
    - curves: NotRealPreimage, NonzeroResidue
    - patches: ZeroParameter, NotNull, NotVectorial, DegenerateTuple, NoSolution,
      NonUniqueBeyondScale, CrossRatioMismatch, ConditionsViolated, InvalidRectangle
    - registry: UnknownExample
"""


class MincqError(Exception):
    """Base class of all mincq errors."""


# --- complex quaternion algebra ---


class ZeroComplexNorm(MincqError, ZeroDivisionError):
    """Inverse of a complex quaternion with vanishing complex squared norm (a null quaternion)."""


class ParseError(MincqError, ValueError):
    """Input could not be parsed.

    Attributes:
        location (str): Path of the offending entry, e.g. ``$.phi[2][1]``.
    """

    def __init__(self, message, location="$"):
        super().__init__(f"{location}: {message}")
        self.location = location


# --- polynomial rings ---


class PoleEvaluation(MincqError, ZeroDivisionError):
    """Evaluation of a Laurent polynomial at its pole."""


class UnsupportedPoleStructure(MincqError, NotImplementedError):
    """The exact integration engine only handles Laurent integrands with a pole at 0."""


class BothZero(MincqError, ValueError):
    """gcd or Bezout cofactors of two zero polynomials."""


class InexactDivision(MincqError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NotPolynomial(MincqError, ValueError):
    """A polynomial (no negative exponents) was required."""


# --- Sylvester operator and conjugators ---


class ConjugacyObstruction(MincqError, ValueError):
    """f and g are not conjugate: scalar parts or vector norms differ."""


class NonInvertibleChi(MincqError, ArithmeticError):
    """The conjugator built from the chosen h has identically vanishing norm; retry with another h."""


class SearchExhausted(MincqError, RuntimeError):
    """No invertible conjugator was found within the candidate budget."""


# --- representations of isotropic curves ---


class NotIsotropic(MincqError, ValueError):
    """Curve has a scalar part or fails the isotropy condition."""


class DegenerateWE(MincqError, ValueError):
    """Phi_1 - i Phi_2 vanishes identically, so the Weierstrass data (f, g) is undefined."""


class IncompatibleWE(MincqError, ValueError):
    """Weierstrass data (f, g) does not assemble to a Laurent polynomial curve."""


class NonPolynomialScale(MincqError, ValueError):
    """The scale factor lambda (or w) is not a polynomial."""


# --- surfaces ---


class PoleInDomain(MincqError, ValueError):
    """The parameter domain contains a pole or meets the branch cut of a logarithmic term."""


class DegenerateNormal(MincqError, ArithmeticError):
    """X_u x X_v vanishes, the normal is undefined."""


class InvalidGrid(MincqError, ValueError):
    """A sample grid needs at least 2 points in each direction."""


class NotIsothermal(MincqError, ArithmeticError):
    """X_uu + X_vv differs from 2 E H N, the parametrization is not isothermal.

    Attributes:
        residual: |X_uu + X_vv - 2 E H N| at the point.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DerivativeMismatch(MincqError, ArithmeticError):
    """The second partials of a surface disagree with central differences of its first partials.

    Attributes:
        deviation: Largest absolute difference, relative to max(1, |X_uu|, |X_uv|, |X_vv|).
    """

    def __init__(self, message, deviation=None):
        super().__init__(message)
        self.deviation = deviation


# --- PH curves ---


class NotRealPreimage(MincqError, ValueError):
    """PH curve preimages must have real coefficients."""


class NonzeroResidue(MincqError, ArithmeticError):
    """The hodograph has a nonzero residue, its integral is not rational.

    Attributes:
        pole: Location of the pole.
        residue: The residue vector at the pole.
    """

    def __init__(self, pole, residue):
        super().__init__(f"nonzero residue {residue} at pole {pole}")
        self.pole = pole
        self.residue = residue


# --- Enneper patches ---


class ZeroParameter(MincqError, ValueError):
    """(s, t) = (0, 0) is not a point of the projective line."""


class NotNull(MincqError, ValueError):
    """Quaternion is not null (nonzero complex squared norm)."""


class NotVectorial(MincqError, ValueError):
    """Quaternion has a nonzero scalar part."""


class DegenerateTuple(MincqError, ValueError):
    """Cross ratio of fewer than three distinct points, or an infinite cross ratio."""


class NoSolution(MincqError, ArithmeticError):
    """The scale equations have no admissible solution."""


class NonUniqueBeyondScale(MincqError, ArithmeticError):
    """The scale equations have more than a one dimensional solution family."""


class CrossRatioMismatch(MincqError, ValueError):
    """The fourth corner does not satisfy the projective map fitted through the first three."""


class ConditionsViolated(MincqError, ValueError):
    """Corner data fails the interpolation conditions.

    Attributes:
        report (ConditionReport): The failing report.
    """

    def __init__(self, report):
        super().__init__(f"corner conditions violated: {', '.join(report.failures())}")
        self.report = report


class InvalidRectangle(MincqError, ValueError):
    """Rectangle vertices or legs are inconsistent."""


# --- example registry ---


class UnknownExample(MincqError, LookupError):
    """No worked example is registered under this name."""
