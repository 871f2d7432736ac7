"""mincq main script.

This script is called when running the `mincq` command inside a shell.

Exit codes: 0 success, 2 a verification check failed, 3 invalid input.
"""

import sys
import logging
from os import path
from argparse import ArgumentParser
from platform import python_version

from mincq.config import BaseConfig
from mincq.errors import MincqError, ParseError, UnsupportedPoleStructure, DerivativeMismatch
from mincq.util import safe_path, parse_grid, parse_floats, ensure_dir
from mincq.defaults import (
    base_dir as default_base_dir,
    config_file as default_config_file,
)

logger = logging.getLogger("mincq")

EXIT_OK, EXIT_DEFECT, EXIT_INPUT = 0, 2, 3
LOG_FORMAT = "{asctime} {levelname:8s} {name}: {message}"


class MyParser(ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error: {message}\n")
        self.print_help(sys.stderr)
        self.exit(EXIT_INPUT)


def setup_logging(debug=False, verbose=False):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, style="{"))
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING)


def build_parser():
    from mincq import __version__  # delayed to prevent cyclic import
    from mincq.weierstrass import REPRESENTATIONS
    from mincq.surface.closed_form import PARTS, CONVENTIONS

    parser = MyParser(description=f"Minimal surfaces and PH curves via complex quaternions v{__version__}")
    parser.add_argument(
        "--config",
        help="path to config file or directory containing mincq.yaml (default: current working directory)",
        default=None,
    )
    parser.add_argument("--debug", action="store_true", help="log debug messages")
    parser.add_argument("--verbose", "-v", action="store_true", help="log info messages")
    subparsers = parser.add_subparsers(metavar="mode", dest="mode", required=True)

    convert = subparsers.add_parser("convert", help="convert between phi, fg, pqw and pair representations")
    convert.add_argument("--in", dest="input", required=True, help="representation document (json)")
    convert.add_argument("--from", dest="source", choices=REPRESENTATIONS, help="expected input representation")
    convert.add_argument("--to", required=True, choices=REPRESENTATIONS, help="target representation")
    convert.add_argument("--out", "-o", dest="output", help="output document (default: print to stdout)")
    convert.add_argument("--budget", type=int, help="number of conjugator candidates")

    surface = subparsers.add_parser("surface", help="integrate a representation to a minimal surface")
    surface.add_argument("--pair", dest="input", required=True, help="representation document (json)")
    surface.add_argument("--part", choices=PARTS, help="real part (surface) or imaginary part (conjugate)")
    surface.add_argument("--convention", choices=tuple(CONVENTIONS), help="derivative convention")
    surface.add_argument("--domain", help="u0,u1,v0,v1")
    surface.add_argument("--grid", help="mesh size NxM")
    surface.add_argument("--base-point", help="x,y,z")
    surface.add_argument("--unit", help="exact unit complex number of the associate family, e.g. 3/5+4/5*I")
    surface.add_argument("--out", "-o", dest="output", help="mesh file (default: <output directory>/surface.obj)")
    surface.add_argument("--report", help="geometry table, u v x y z H E F G (default: next to the mesh)")
    surface.add_argument("--hdf5", action="store_true", help="write the geometry table as hdf5 as well")

    patch = subparsers.add_parser("patch", help="Enneper patch interpolating corner data over a rectangle")
    patch.add_argument("--corners", dest="input", required=True, help="corners document (json)")
    patch.add_argument("--rect", help="P0,r1,r2,theta, replaces the rectangle of the corners document")
    patch.add_argument("--grid", help="mesh size NxM")
    patch.add_argument("--base-point", help="x,y,z")
    patch.add_argument("--out", "-o", dest="output", help="mesh file (default: <output directory>/patch.obj)")
    patch.add_argument("--report", help="condition report (default: next to the mesh)")

    phcurve = subparsers.add_parser("phcurve", help="integrate a Pythagorean hodograph curve")
    phcurve.add_argument("--preimage", dest="input", required=True, help="pair document (json), z is read as t")
    phcurve.add_argument("--lambda", dest="lam", help="Laurent polynomial in t, replaces lambda of the document")
    phcurve.add_argument("--samples", type=int, help="number of samples")
    phcurve.add_argument("--interval", help="t0,t1")
    phcurve.add_argument("--base-point", help="x,y,z")
    phcurve.add_argument("--out", "-o", dest="output", help="sample table (default: <output directory>/phcurve.csv)")

    sylvester = subparsers.add_parser("sylvester", help="matrix, determinant and rank of z -> F z + z G")
    sylvester.add_argument("--f", dest="F", required=True, help="four comma separated coefficients, e.g. '0,0,I,1'")
    sylvester.add_argument("--g", dest="G", required=True, help="four comma separated coefficients")

    verify = subparsers.add_parser("verify", help="verification report of a representation document")
    verify.add_argument("input", help="representation document (json)")
    verify.add_argument("--domain", help="u0,u1,v0,v1")
    verify.add_argument("--grid", help="sample grid NxM")
    verify.add_argument("--output", "-o", help="report file (default: print to stdout)")

    example = subparsers.add_parser("example", help="run a worked example and write its artifacts")
    example.add_argument("name", nargs="?", help="example name or 'all'")
    example.add_argument("--list", action="store_true", help="list the registered examples")
    example.add_argument("--grid", help="mesh size NxM")
    example.add_argument("--output", "-o", help="output directory (default: <output directory>/<name>)")

    subparsers.add_parser("version", help="show version information")
    return parser


def load_config(arg):
    if arg is None:
        candidate = path.join(default_base_dir, default_config_file)
        return BaseConfig.from_file(candidate) if path.isfile(candidate) else BaseConfig()
    return BaseConfig.from_file(safe_path(arg, default=default_config_file))


def _point(text, location):
    return tuple(parse_floats(text, 3, location)) if text else (0, 0, 0)


def _grid(text, default):
    return parse_grid(text) if text else tuple(default)


def _stem(args, config, name, suffix=".obj"):
    """Output stem from --out; a trailing ``suffix`` is dropped."""
    target = args.output or path.join(config["output"]["directory"], name)
    root, ext = path.splitext(target)
    stem = root if ext == suffix else target
    ensure_dir(path.dirname(path.abspath(stem)))
    return stem


def _report_path(args, default):
    target = args.report or default
    ensure_dir(path.dirname(path.abspath(target)))
    return target


def _rectangle(text):
    values = text.split(",")
    if len(values) != 4:
        raise ParseError(f"expected P0,r1,r2,theta, got '{text}'", "--rect")
    P0, r1, r2, theta = (v.strip() for v in values)
    try:
        theta = float(theta)
    except ValueError:
        raise ParseError(f"theta '{theta}' is not a number", "--rect") from None
    return {"P0": P0, "r1": r1, "r2": r2, "theta": theta}


def run_convert(args, config):
    from mincq.util.serialization import read_document, write_document, dump_document
    from mincq.weierstrass import convert, representation_name

    budget = args.budget or config["conjugator"]["budget"]
    rep = read_document(args.input)
    if isinstance(rep, tuple):
        raise ParseError("corner data has no other representation, use 'mincq patch'", args.input)
    if args.source and representation_name(rep) != args.source:
        raise ParseError(f"expected a '{args.source}' document, found '{representation_name(rep)}'", args.input)
    result = convert(rep, args.to, budget)
    if args.output:
        ensure_dir(path.dirname(path.abspath(args.output)))
        write_document(args.output, result)
    else:
        import json

        print(json.dumps(dump_document(result), indent=2))
    return EXIT_OK


def run_surface(args, config):
    from mincq.util.serialization import read_document
    from mincq.util.file_handler import FileHandler
    from mincq.cq_core import parse_scalar
    from mincq.weierstrass import PreimagePair, to_phi
    from mincq.surface import BoxDomain, surface_from_pair, associate, mesh, check_second_derivatives

    conf = config["surface"]
    domain = BoxDomain(*(parse_floats(args.domain, 4, "--domain") if args.domain else conf["domain"]))
    rep = read_document(args.input)
    if isinstance(rep, tuple):
        raise ParseError("corner data is integrated with 'mincq patch'", args.input)
    if not isinstance(rep, PreimagePair):
        rep = to_phi(rep)
    if args.unit:
        rep = associate(to_phi(rep), parse_scalar(args.unit, True, "--unit"))
    X = surface_from_pair(
        rep,
        base_point=_point(args.base_point, "--base-point") if args.base_point else conf["base_point"],
        part=args.part or conf["part"],
        convention=args.convention or conf["convention"],
        domain=domain,
        z0=conf["z0"],
    )
    if conf["fd_check"]:
        c = domain.center()
        try:
            check_second_derivatives(X, c.real, c.imag, conf["fd_step"], conf["fd_rtol"])
        except DerivativeMismatch as err:
            print(f"derivative check failed: {err}")
            return EXIT_DEFECT
    nu, nv = _grid(args.grid, conf["grid"])
    lam = rep.scale if isinstance(rep, PreimagePair) else None
    m = mesh(X, domain, nu, nv, lam=lam, atol=conf["atol"])
    stem = _stem(args, config, "surface")
    fmt = config["output"]["float_format"]
    FileHandler.save(f"{stem}.txt", X.to_text())
    m.export_obj(f"{stem}.obj", fmt)
    m.export_csv(_report_path(args, f"{stem}.csv"), fmt)
    if args.hdf5:
        FileHandler.save(f"{stem}.hdf5", m.table())
    logger.info(f"surface written to {stem}.*")
    print(X.to_text(), end="")
    return EXIT_OK


def run_patch(args, config):
    from mincq.util.serialization import load_document
    from mincq.util.file_handler import FileHandler
    from mincq.patchdesign import check_conditions, patch
    from mincq.surface import mesh

    doc = FileHandler.load(args.input, as_type="dict")
    if args.rect and isinstance(doc, dict):
        doc["rectangle"] = _rectangle(args.rect)
    rep = load_document(doc, location=args.input)
    if not isinstance(rep, tuple):
        raise ParseError("'mincq patch' needs a corners document", args.input)
    rect, data = rep
    report = check_conditions(rect, data)
    stem = _stem(args, config, "patch")
    FileHandler.save(_report_path(args, f"{stem}_conditions.txt"), report.to_text())
    print(report.to_text(), end="")
    if not report.passed:
        return EXIT_DEFECT
    _, X, pair = patch(rect, data, base_point=_point(args.base_point, "--base-point"))
    nu, nv = _grid(args.grid, config["patch"]["grid"])
    m = mesh(X, rect, nu, nv)
    fmt = config["output"]["float_format"]
    FileHandler.save(f"{stem}.txt", f"# A = {pair.A}\n# lambda = {pair.scale}\n" + X.to_text())
    m.export_obj(f"{stem}.obj", fmt)
    m.export_csv(f"{stem}.csv", fmt)
    print(f"A = {pair.A}, lambda = {pair.scale}")
    print(X.to_text(), end="")
    return EXIT_OK


def run_phcurve(args, config):
    from mincq.util.serialization import read_document, parse_expression
    from mincq.util.file_handler import FileHandler
    from mincq.weierstrass import PreimagePair, RationalScale
    from mincq.phcurve import PHSpec, integrate_curve

    conf = config["phcurve"]
    rep = read_document(args.input)
    if not isinstance(rep, PreimagePair):
        raise ParseError("'mincq phcurve' needs a pair document", args.input)
    if args.lam:
        rep = PreimagePair(rep.A, RationalScale(parse_expression(args.lam, "t", "--lambda")))
    if not rep.scale.is_laurent:
        raise UnsupportedPoleStructure(f"lambda = {rep.scale} has poles away from 0")
    curve = integrate_curve(PHSpec(rep.A, rep.lam), _point(args.base_point, "--base-point"))
    interval = parse_floats(args.interval, 2, "--interval") if args.interval else conf["interval"]
    table = curve.sample(args.samples or conf["samples"], interval)
    stem = _stem(args, config, "phcurve", ".csv")
    FileHandler.save(f"{stem}.txt", curve.to_text())
    FileHandler.save(f"{stem}.csv", table, fmt=config["output"]["float_format"])
    print(curve.to_text(), end="")
    return EXIT_OK


def run_sylvester(args, config):
    from mincq.cq_core import parse_quaternion
    from mincq.sylvester import (
        operator_matrix,
        classify_rank,
        numeric_rank,
        eigenvalues,
        det_closed_form,
        check_eigenvalues,
    )

    conf = config["sylvester"]
    try:
        F, G = parse_quaternion(args.F, True, "--f"), parse_quaternion(args.G, True, "--g")
    except ParseError:
        logger.info("irrational coefficients, using the floating path")
        F, G = parse_quaternion(args.F, False, "--f"), parse_quaternion(args.G, False, "--g")
    print(operator_matrix(F, G))
    print(f"det = {det_closed_form(F, G)}")
    print(f"eigenvalues = {eigenvalues(F, G).tolist()}")
    print(f"eigenvalue check = {check_eigenvalues(F, G, conf['eig_rtol'])}")
    print(f"rank class = {classify_rank(F, G, conf['atol'])}")
    print(f"numeric rank = {numeric_rank(F, G, conf['svd_rtol'])}")
    return EXIT_OK


def run_verify(args, config):
    from mincq.verify import verify_file
    from mincq.util.file_handler import FileHandler
    from mincq.surface import BoxDomain

    conf = config["verify"]
    domain = BoxDomain(*parse_floats(args.domain, 4, "--domain")) if args.domain else BoxDomain(*conf["domain"])
    report = verify_file(
        args.input,
        domain=domain,
        grid=_grid(args.grid, conf["grid"]),
        h_atol=conf["h_atol"],
        isothermal_rtol=conf["isothermal_rtol"],
    )
    if args.output:
        ensure_dir(path.dirname(path.abspath(args.output)))
        FileHandler.save(args.output, report.to_text())
    print(report.to_text(), end="")
    return EXIT_OK if report.passed else EXIT_DEFECT


def run_example_mode(args, config):
    from mincq.examples import run_example, run_all, list_examples

    if args.list or not args.name:
        for name, description in list_examples().items():
            print(f"{name:20s} {description}")
        return EXIT_OK
    grid = _grid(args.grid, config["surface"]["grid"])
    fmt = config["output"]["float_format"]
    out_dir = args.output or config["output"]["directory"]
    if args.name == "all":
        reports = run_all(out_dir, grid, fmt)
    else:
        reports = [run_example(args.name, args.output or path.join(out_dir, args.name), grid, fmt)]
    for report in reports:
        print(report.to_text(), end="")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_DEFECT


MODES = {
    "convert": run_convert,
    "surface": run_surface,
    "patch": run_patch,
    "phcurve": run_phcurve,
    "sylvester": run_sylvester,
    "verify": run_verify,
    "example": run_example_mode,
}


def main(argv=None):
    """Main command line interface"""
    from mincq import __version__

    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.debug, args.verbose)

    # `mincq version` does not require a config
    if args.mode == "version":
        print(f"mincq {__version__}")
        print(f"python {python_version()}")
        return EXIT_OK

    try:
        config = load_config(args.config)
        return MODES[args.mode](args, config)
    except (MincqError, FileNotFoundError) as err:
        logger.debug("input error", exc_info=True)
        sys.stderr.write(f"error: {type(err).__name__}: {err}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
