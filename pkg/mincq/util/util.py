"""Utility functions.

Small helpers shared by the command line and the example registry.
"""
from os import path
import numpy as np

from mincq.errors import ParseError


def safe_path(arg, default, valid_extensions=(".yaml", ".py")):
    """Config file from a file or directory argument."""
    if path.isfile(arg):
        if arg.endswith(valid_extensions):
            return path.abspath(arg)
        raise ParseError(f"unsupported config file extension, valid: {valid_extensions}", arg)
    elif path.isdir(arg):
        return path.join(arg, default)
    raise FileNotFoundError(f"Directory or file ({arg}) not found.")


def parse_grid(text, location="--grid"):
    """'NxM' -> (N, M) with N, M >= 2."""
    try:
        nu, nv = (int(n) for n in str(text).lower().split("x"))
    except ValueError:
        raise ParseError(f"grid '{text}' is not of the form NxM", location) from None
    if nu < 2 or nv < 2:
        raise ParseError(f"grid '{text}' needs at least 2 points per direction", location)
    return nu, nv


def parse_floats(text, count=None, location="$"):
    """Comma separated floats; optionally exactly ``count`` of them."""
    try:
        values = [float(x) for x in str(text).split(",")]
    except ValueError:
        raise ParseError(f"'{text}' is not a comma separated list of numbers", location) from None
    if count is not None and len(values) != count:
        raise ParseError(f"expected {count} numbers, got {len(values)}", location)
    return values


def to_structured(columns):
    """Structured float array from an ordered mapping name -> array (flattened)."""
    names = list(columns)
    size = np.asarray(columns[names[0]]).size
    data = np.zeros(size, dtype=[(name, float) for name in names])
    for name in names:
        data[name] = np.asarray(columns[name], dtype=float).ravel()
    return data


def ensure_dir(directory):
    from os import makedirs

    makedirs(directory, exist_ok=True)
    return directory
