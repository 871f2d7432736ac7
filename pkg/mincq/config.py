"""Configuration of mincq.

A configuration is read from ``mincq.yaml`` (or a python file defining the
same sections as module level dicts). Every section is a sub config registered
on ``BaseConfig`` by its label; missing entries come from ``mincq.defaults``.
Unknown entries are kept but reported with a warning, invalid values raise
``ParseError`` naming the section and entry.
"""

from collections import OrderedDict
from os import path
import warnings

import yaml

from mincq import defaults
from mincq.util.base_class import CustomABC
from mincq.errors import ParseError

VALID_FORMATS = (".yaml", ".py")

# dumped configurations keep the order of the defaults
yaml.add_representer(OrderedDict, lambda dumper, data: dumper.represent_dict(data.items()))


def load_config_from_py(filename):
    """Public module level names of a python configuration file."""
    from importlib.util import spec_from_file_location, module_from_spec

    spec = spec_from_file_location("mincq_user_config", filename)
    module = module_from_spec(spec)
    spec.loader.exec_module(module)
    return {name: value for name, value in vars(module).items() if not name.startswith("_")}


def load_entries(filename):
    if filename.endswith(".yaml"):
        with open(filename) as f:
            return yaml.safe_load(f) or {}
    if filename.endswith(".py"):
        return load_config_from_py(filename)
    raise ParseError(f"unsupported config file extension, valid: {VALID_FORMATS}", filename)


class AbstractConfig(CustomABC):
    """Attribute container of one configuration section.

    Entries are attributes; ``config[name]`` returns the value, or a plain dict
    for registered sub configs.
    """

    labels = {}
    defaults = None  # name of the dict in mincq.defaults

    def __init__(self, **entries):
        if self.defaults:
            for name, value in getattr(defaults, self.defaults).items():
                # lists and dicts are copied so the module defaults stay untouched
                setattr(self, name, value.copy() if isinstance(value, (list, dict)) else value)
        self.update(**entries)

    def update(self, **entries):
        """Sets ``entries``, merging nested dicts; unknown names issue a warning."""
        for name, value in entries.items():
            current = getattr(self, name, None)
            if not hasattr(self, name):
                warnings.warn(f"Config parameter '{name}' for {type(self).__name__} configuration may be unused.")
            elif isinstance(current, dict) and isinstance(value, dict):
                value = {**current, **value}
            setattr(self, name, value)

    def process_entries(self, base_config):
        """Validates and normalizes the entries once the whole configuration is known."""

    def __getitem__(self, item):
        value = getattr(self, item)
        return dict(value.items()) if item in self.labels else value

    def items(self):
        return [(key, self[key]) for key in vars(self)]

    def get(self, item, default=None):
        return self[item] if hasattr(self, item) else default

    def to_dict(self):
        return OrderedDict(self.items())


class BaseConfig(AbstractConfig):
    """Complete configuration: base directory, config path and one sub config per section.

    Sections:
        - conjugator: h ladder budget
        - sylvester: tolerances of the floating path
        - surface: part, convention, domain, grid, tolerances
        - phcurve: samples and parameter interval
        - patch: grid
        - verify: sample domain, grid and thresholds
        - output: directory and float format

    Parameters:
        base_dir (str): Relative output paths are resolved against it.
    """

    labels = {}

    def __init__(self, base_dir=defaults.base_dir, **entries):
        self.base_dir = path.abspath(base_dir)
        self.config_path = path.join(self.base_dir, defaults.config_file)

        sections = {key.lower(): value for key, value in entries.items() if key.lower() in self.labels}
        self.update(**{key: value for key, value in entries.items() if key.lower() not in self.labels})

        for label, sub_config in self.labels.items():
            section = sections.get(label) or {}
            if not isinstance(section, dict):
                raise ParseError(f"'{label}' must be a mapping", label)
            setattr(self, label, sub_config(**section))

        for label in self.labels:
            getattr(self, label).process_entries(self)

    @classmethod
    def from_file(cls, filename=defaults.config_file):
        """Configuration from a .yaml or .py file, relative paths resolved against its directory."""
        config = cls(base_dir=path.dirname(path.abspath(filename)), **load_entries(filename))
        config.config_path = path.abspath(filename)
        return config


@BaseConfig.register("conjugator")
class ConjugatorConfig(AbstractConfig):
    """Budget of the h ladder used to find invertible conjugators."""

    labels = {}
    defaults = "conjugator"

    def process_entries(self, base_config):
        if not isinstance(self.budget, int) or self.budget < 1:
            raise ParseError(f"budget must be a positive integer, got {self.budget!r}", "conjugator.budget")


@BaseConfig.register("sylvester")
class SylvesterConfig(AbstractConfig):
    labels = {}
    defaults = "sylvester"


@BaseConfig.register("surface")
class SurfaceConfig(AbstractConfig):
    """Integration and sampling of surfaces.

    The domain is a list [u0, u1, v0, v1], the grid a list [nu, nv] or a string "NxM".
    """

    labels = {}
    defaults = "surface"

    def process_entries(self, base_config):
        from mincq.surface.closed_form import _check_part
        from mincq.util import parse_grid

        _check_part(self.part, self.convention)
        if isinstance(self.grid, str):
            self.grid = list(parse_grid(self.grid, "surface.grid"))
        if len(self.domain) != 4:
            raise ParseError(f"domain needs four numbers, got {self.domain}", "surface.domain")


@BaseConfig.register("phcurve")
class PHCurveConfig(AbstractConfig):
    labels = {}
    defaults = "phcurve"

    def process_entries(self, base_config):
        if self.samples < 2:
            raise ParseError(f"need at least 2 samples, got {self.samples}", "phcurve.samples")


@BaseConfig.register("patch")
class PatchConfig(AbstractConfig):
    labels = {}
    defaults = "patch"

    def process_entries(self, base_config):
        from mincq.util import parse_grid

        if isinstance(self.grid, str):
            self.grid = list(parse_grid(self.grid, "patch.grid"))


@BaseConfig.register("verify")
class VerifyConfig(AbstractConfig):
    labels = {}
    defaults = "verify"

    def process_entries(self, base_config):
        from mincq.util import parse_grid

        if isinstance(self.grid, str):
            self.grid = list(parse_grid(self.grid, "verify.grid"))


@BaseConfig.register("output")
class OutputConfig(AbstractConfig):
    """Output directory (relative to the base directory) and float format of written files."""

    labels = {}
    defaults = "output"

    def process_entries(self, base_config):
        self.directory = path.abspath(path.join(base_config.base_dir, self.directory))
