"""Representation documents.

A document is a JSON object with a ``"representation"`` key:

- phi: ``{"phi": Q}``
- fg: ``{"f": C, "g_num": C, "g_den": C}`` (g_den optional)
- pqw: ``{"p": C, "q": C, "w": C}``
- pair: ``{"A": Q, "lambda": C | {"num": C, "den": C}}``
- corners: ``{"rectangle": {...}, "phis": [q, q, q, q]}`` or with
  ``"directions"`` and ``"scales"`` instead of ``"phis"``

C is a complex Laurent polynomial, Q a quaternion one: a list of
[exponent, coefficient] records, or expressions in z (sympy syntax, ``I``
for the imaginary unit), one for C and four components for Q. Scalars are
``["num/den", "num/den"]`` pairs or expressions.
"""

import logging

import sympy

from mincq.cq_core import ComplexScalar, parse_scalar, parse_quaternion
from mincq.polyring import CLaurent, QLaurent
from mincq.weierstrass import IsotropicCurve, WEData, PQWData, PreimagePair, RationalScale
from mincq.util.file_handler import FileHandler
from mincq.errors import ParseError

logger = logging.getLogger(__name__)

DOCUMENTS = ("phi", "fg", "pqw", "pair", "corners")


def parse_expression(text, var="z", location="$"):
    """CLaurent from an expression such as ``"(z**4 + 1)/z**2"``."""
    symbol = sympy.Symbol(var)
    try:
        expr = sympy.expand(sympy.sympify(str(text), locals={var: symbol}, rational=True))
    except (sympy.SympifyError, SyntaxError, TypeError) as err:
        raise ParseError(f"cannot parse '{text}': {err}", location) from None
    extra = expr.free_symbols - {symbol}
    if extra:
        raise ParseError(f"unexpected symbols {sorted(map(str, extra))}, the variable is {var}", location)
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, exponent = term.as_coeff_exponent(symbol)
        if not exponent.is_Integer or coeff.has(symbol):
            raise ParseError(f"'{term}' is not a Laurent monomial in {var}", location)
        c = ComplexScalar.from_sympy(sympy.expand_complex(coeff), location)
        e = int(exponent)
        terms[e] = terms[e] + c if e in terms else c
    return CLaurent(terms)


def parse_laurent(value, kind=CLaurent, var="z", location="$"):
    """Laurent polynomial from records, an expression, or (quaternions) four component expressions."""
    if isinstance(value, (kind, int)):
        return kind.coerce(value)
    if kind is CLaurent and isinstance(value, str):
        return parse_expression(value, var, location)
    if not isinstance(value, list):
        raise ParseError(f"expected a list of [exponent, coefficient] records, got {type(value).__name__}", location)
    if kind is QLaurent and len(value) == 4 and all(isinstance(v, (str, int)) for v in value):
        comps = [parse_expression(v, var, f"{location}[{n}]") for n, v in enumerate(value)]
        return QLaurent.from_components(*comps)
    parse = parse_quaternion if kind is QLaurent else parse_scalar
    terms = {}
    for n, record in enumerate(value):
        where = f"{location}[{n}]"
        if not isinstance(record, list) or len(record) != 2:
            raise ParseError("a record is [exponent, coefficient]", where)
        exponent, coeff = record
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            raise ParseError(f"exponent {exponent!r} is not an integer", f"{where}[0]")
        if exponent in terms:
            raise ParseError(f"exponent {exponent} appears twice", f"{where}[0]")
        terms[exponent] = parse(coeff, True, f"{where}[1]")
    return kind(terms)


def _get(doc, key, location):
    try:
        return doc[key]
    except KeyError:
        raise ParseError(f"missing key '{key}'", location) from None


def _scale(value, location):
    if isinstance(value, dict):
        num = parse_laurent(_get(value, "num", location), CLaurent, location=f"{location}.num")
        den = parse_laurent(value.get("den", [[0, ["1", "0"]]]), CLaurent, location=f"{location}.den")
        return RationalScale(num, den)
    return RationalScale(parse_laurent(value, CLaurent, location=location))


def parse_rectangle(doc, location="$.rectangle"):
    """RectangleDomain from ``{"P0", "r1", "r2"}`` and an optional ``"rotation": [cos, sin]``
    or ``"theta"`` (rounded to a rational rotation), or from ``"vertices"``."""
    from mincq.patchdesign import RectangleDomain

    if not isinstance(doc, dict):
        raise ParseError("a rectangle is an object", location)
    if "vertices" in doc:
        vertices = [parse_scalar(v, True, f"{location}.vertices[{n}]") for n, v in enumerate(doc["vertices"])]
        return RectangleDomain.from_vertices(*vertices)
    P0 = parse_scalar(_get(doc, "P0", location), True, f"{location}.P0")
    r1 = parse_scalar(_get(doc, "r1", location), True, f"{location}.r1")
    r2 = parse_scalar(_get(doc, "r2", location), True, f"{location}.r2")
    for name, r in (("r1", r1), ("r2", r2)):
        if not r.is_real:
            raise ParseError(f"{name} must be real", f"{location}.{name}")
    if "theta" in doc:
        return RectangleDomain.from_angle(P0, r1.re, r2.re, float(doc["theta"]))
    cos, sin = doc.get("rotation", [1, 0])
    cos = parse_scalar(cos, True, f"{location}.rotation[0]")
    sin = parse_scalar(sin, True, f"{location}.rotation[1]")
    return RectangleDomain(P0, r1.re, r2.re, cos.re, sin.re)


def load_document(doc, location="$"):
    """Representation object described by a parsed JSON document.

    Returns:
        IsotropicCurve, WEData, PQWData, PreimagePair or (RectangleDomain, CornerData).
    """
    if not isinstance(doc, dict):
        raise ParseError("a document is a JSON object", location)
    kind = _get(doc, "representation", location)
    if kind not in DOCUMENTS:
        raise ParseError(f"unknown representation '{kind}', valid: {DOCUMENTS}", f"{location}.representation")
    C = lambda key: parse_laurent(_get(doc, key, location), CLaurent, location=f"{location}.{key}")  # noqa: E731
    if kind == "phi":
        return IsotropicCurve(parse_laurent(_get(doc, "phi", location), QLaurent, location=f"{location}.phi"))
    if kind == "fg":
        g_den = C("g_den") if "g_den" in doc else CLaurent.constant(1)
        return WEData(C("f"), C("g_num"), g_den)
    if kind == "pqw":
        return PQWData(C("p"), C("q"), C("w"))
    if kind == "pair":
        A = parse_laurent(_get(doc, "A", location), QLaurent, location=f"{location}.A")
        scale = _scale(doc.get("lambda", [[0, ["1", "0"]]]), f"{location}.lambda")
        return PreimagePair(A, scale)
    from mincq.patchdesign import CornerData

    rect = parse_rectangle(_get(doc, "rectangle", location), f"{location}.rectangle")
    if "phis" in doc:
        phis = _get(doc, "phis", location)
        values = [parse_quaternion(q, True, f"{location}.phis[{n}]") for n, q in enumerate(phis)]
        return rect, CornerData(tuple(values))
    directions = _get(doc, "directions", location)
    values = [parse_quaternion(q, True, f"{location}.directions[{n}]") for n, q in enumerate(directions)]
    if "scales" in doc:
        scales = [parse_scalar(s, True, f"{location}.scales[{n}]") for n, s in enumerate(doc["scales"])]
    else:
        from mincq.patchdesign import solve_scales

        scales = solve_scales(rect, values)
        logger.info(f"solved scales {[str(s) for s in scales]}")
    return rect, CornerData.from_directions(scales, values)


def dump_document(rep):
    """JSON document of a representation (inverse of ``load_document``)."""
    if isinstance(rep, IsotropicCurve):
        return {"representation": "phi", "phi": rep.phi.to_text()}
    if isinstance(rep, WEData):
        return {
            "representation": "fg",
            "f": rep.f.to_text(),
            "g_num": rep.g_num.to_text(),
            "g_den": rep.g_den.to_text(),
        }
    if isinstance(rep, PQWData):
        return {"representation": "pqw", "p": rep.p.to_text(), "q": rep.q.to_text(), "w": rep.w.to_text()}
    if isinstance(rep, PreimagePair):
        return {"representation": "pair", "A": rep.A.to_text(), "lambda": rep.scale.to_text()}
    if isinstance(rep, tuple) and len(rep) == 2:
        rect, data = rep
        return {
            "representation": "corners",
            "rectangle": {
                "P0": rect.P0.to_text(),
                "r1": ComplexScalar(rect.r1).to_text(),
                "r2": ComplexScalar(rect.r2).to_text(),
                "rotation": [ComplexScalar(rect.rotation.re).to_text(), ComplexScalar(rect.rotation.im).to_text()],
            },
            "phis": data.to_text(),
        }
    raise TypeError(f"{type(rep).__name__} is not a representation")


def read_document(filename):
    return load_document(FileHandler.load(filename, as_type="dict"), location=filename)


def write_document(filename, rep):
    FileHandler.save(filename, dump_document(rep))
