"""mincq: minimal surfaces and Pythagorean hodograph curves via complex quaternions.

Explicit imports:
    mincq.surface
    mincq.patchdesign
    mincq.phcurve
    mincq.examples
"""

from . import errors
from . import cq_core
from . import polyring
from . import sylvester
from . import weierstrass
from . import config
from . import util

# Retrieving package version at runtime
# https://pypi.org/project/setuptools-scm/
try:
    from setuptools_scm import get_version as version

    __version__ = version(root="..", relative_to=__file__)
    del version
except (ModuleNotFoundError, LookupError, OSError):
    from importlib.metadata import version, PackageNotFoundError

    try:
        __version__ = version("mincq")
    except PackageNotFoundError:
        # package is not installed
        __version__ = "?"

    del version, PackageNotFoundError  # clean up namespace
