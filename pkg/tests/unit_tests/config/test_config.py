"""
Testcases for the configuration:
- .yaml and .py configuration files
- default config values
- warnings for unknown parameters
- validation of the surface, conjugator and phcurve entries
"""

from os import path, chdir, getcwd

from pytest import fixture, raises, warns

from mincq import defaults
from mincq.config import BaseConfig
from mincq.errors import ParseError


@fixture(autouse=True)
def chdir_pytest():
    pytest_root_dir = getcwd()
    chdir(path.dirname(path.abspath(__file__)))
    yield
    chdir(pytest_root_dir)


def test_yaml_py_config():
    """Tests if .yaml and .py configuration files are equal by comparing dict keys and values."""

    config_yaml = BaseConfig.from_file("study/mincq.yaml")
    config_py = BaseConfig.from_file("study/mincq_config.py")

    for (key1, value1), (key2, value2) in zip(config_yaml.items(), config_py.items()):
        assert key1 == key2
        if key1 != "config_path":
            assert value1 == value2


def test_values():
    config = BaseConfig.from_file("study/mincq.yaml")
    assert config["conjugator"]["budget"] == 32
    assert config["surface"]["grid"] == [31, 21]
    assert config["surface"]["part"] == "im"
    assert config["surface"]["atol"] == defaults.surface["atol"]
    assert config["verify"]["grid"] == [7, 7]
    assert config["verify"]["h_atol"] == defaults.verify["h_atol"]
    assert config["output"]["directory"] == path.abspath("study/output")
    assert config.config_path == path.abspath("study/mincq.yaml")


def test_default_config():
    config = BaseConfig.from_file("study/mincq_default.yaml")
    for label in ("conjugator", "sylvester", "surface", "phcurve", "patch", "verify"):
        assert config[label] == getattr(defaults, label)
    assert config["output"]["float_format"] == defaults.output["float_format"]
    # defaults are copied, not shared
    config.surface.domain[0] = 100
    assert defaults.surface["domain"][0] == -1.0


def test_unknown_parameter():
    with warns(UserWarning, match="smoothing"):
        config = BaseConfig.from_file("study/mincq_unknown.yaml")
    assert config["surface"]["grid"] == [11, 11]


def test_invalid_entries():
    with raises(ParseError):
        BaseConfig.from_file("study/mincq_invalid.yaml")
    with raises(ParseError):
        BaseConfig(conjugator={"budget": 0})
    with raises(ParseError):
        BaseConfig(phcurve={"samples": 1})
    with raises(ParseError):
        BaseConfig(surface={"domain": [0, 1, 0]})
    with raises(ParseError):
        BaseConfig(surface=[1, 2])
    with raises(ParseError):
        BaseConfig.from_file("study/mincq.json")


def test_to_dict():
    config = BaseConfig(surface={"grid": "5x5"})
    dumped = config.to_dict()
    assert list(dumped)[:2] == ["base_dir", "config_path"]
    assert dumped["surface"]["grid"] == [5, 5]
