"""
Testcases for the file layer:
- representation documents written and read back
- expressions in z and [exponent, coefficient] records
- error locations of malformed documents
- file handlers dispatched on the extension
- grid and number list parsing
"""

import numpy as np
from pytest import raises

from mincq.cq_core import ComplexScalar, IMAG
from mincq.polyring import CLaurent, QLaurent, Z
from mincq.weierstrass import WEData, PQWData, IsotropicCurve
from mincq.util import parse_grid, parse_floats, to_structured, safe_path
from mincq.util.file_handler import FileHandler
from mincq.util.serialization import (
    parse_expression,
    parse_laurent,
    load_document,
    dump_document,
    read_document,
    write_document,
)
from mincq.examples import catenoid_phi, catenoid_preimage, ex1_rectangle, ex1_corner_data
from mincq.errors import ParseError


def test_parse_expression():
    assert parse_expression("(z**4 + 1)/z**2") == Z**2 + CLaurent.monomial(-2)
    assert parse_expression("I*z - 1/2") == IMAG * Z - ComplexScalar("1/2")
    assert parse_expression("t**3", var="t") == Z**3
    with raises(ParseError):
        parse_expression("z + w")
    with raises(ParseError):
        parse_expression("sqrt(z)")
    with raises(ParseError):
        parse_expression("z +* 2")


def test_parse_records():
    records = [[-1, ["1", "0"]], [2, ["0", "-3/2"]]]
    assert parse_laurent(records) == CLaurent({-1: 1, 2: ComplexScalar(0, "-3/2")})
    quaternion = parse_laurent(["0", "z", "I*z", "0"], QLaurent)
    assert quaternion == QLaurent.from_components(None, Z, IMAG * Z, None)


def test_error_locations():
    with raises(ParseError) as info:
        parse_laurent([[0, ["1", "0"]], [0, ["2", "0"]]], location="$.f")
    assert info.value.location == "$.f[1][0]"
    with raises(ParseError) as info:
        parse_laurent([[1.5, ["1", "0"]]], location="$.f")
    assert info.value.location == "$.f[0][0]"
    with raises(ParseError) as info:
        load_document({"representation": "fg", "f": "1"})
    assert "g_num" in str(info.value)
    with raises(ParseError) as info:
        load_document({"representation": "spinor"})
    assert info.value.location == "$.representation"
    with raises(ParseError) as info:
        load_document({"representation": "pair", "A": [[0, ["1", "0", "0"]]]})
    assert info.value.location.startswith("$.A[0][1]")
    with raises(ParseError):
        load_document([1, 2])


def test_documents():
    for rep in (
        catenoid_phi(),
        WEData(CLaurent.constant(1), Z, Z - 2),
        PQWData(Z, CLaurent.constant(1), 2 * Z),
        catenoid_preimage(),
    ):
        assert load_document(dump_document(rep)) == rep
    rect, data = load_document(dump_document((ex1_rectangle(), ex1_corner_data())))
    assert rect.vertices_exact() == ex1_rectangle().vertices_exact()
    assert data == ex1_corner_data()
    with raises(TypeError):
        dump_document("catenoid")


def test_corner_directions():
    doc = dump_document((ex1_rectangle(), ex1_corner_data()))
    doc["directions"] = doc.pop("phis")
    _, data = load_document(doc)
    assert data.phis[3] == ex1_corner_data().phis[3]
    doc["scales"] = [["2", "0"]] * 4
    _, data = load_document(doc)
    assert data.phis[0] == ex1_corner_data().phis[0] * 2


def test_expression_documents():
    doc = {"representation": "phi", "phi": ["0", "(z**2 - 1)/(2*z**2)", "-I*(z**2 + 1)/(2*z**2)", "-1/z"]}
    assert load_document(doc) == catenoid_phi()
    doc = {
        "representation": "pair",
        "A": ["0", "1 - 3*z**2", "I*(1 - z**2)", "2*z"],
        "lambda": {"num": "1", "den": "8*z**4"},
    }
    assert load_document(doc) == catenoid_preimage()


def test_json_files(tmpdir):
    filename = str(tmpdir.join("catenoid.json"))
    write_document(filename, catenoid_phi())
    assert isinstance(read_document(filename), IsotropicCurve)
    with open(filename) as f:
        text = f.read()
    assert text.endswith("}\n") and "\r" not in text
    broken = str(tmpdir.join("broken.json"))
    with open(broken, "w") as f:
        f.write("{\"representation\": ")
    with raises(ParseError) as info:
        read_document(broken)
    assert info.value.location == broken


def test_file_handler(tmpdir):
    table = to_structured({"t": np.linspace(0, 1, 5), "x": np.arange(5.0)})
    for ending in ("csv", "txt", "hdf5"):
        filename = str(tmpdir.join(f"table.{ending}"))
        FileHandler.save(filename, table)
        loaded = FileHandler.load(filename)
        assert np.allclose(loaded["x"], table["x"])
        assert np.allclose(loaded["t"], table["t"])
    report = str(tmpdir.join("report.log"))
    FileHandler.save(report, "passed")
    assert FileHandler.load(report, as_type="str") == "passed\n"
    with raises(ParseError):
        FileHandler.save(str(tmpdir.join("mesh.stl")), table)


def test_parse_grid():
    assert parse_grid("61x41") == (61, 41)
    assert parse_grid("5X5") == (5, 5)
    with raises(ParseError):
        parse_grid("61")
    with raises(ParseError):
        parse_grid("1x5")


def test_parse_floats():
    assert parse_floats("0.5, 1.5,-1,1", 4) == [0.5, 1.5, -1.0, 1.0]
    with raises(ParseError):
        parse_floats("0.5,a")
    with raises(ParseError):
        parse_floats("1,2,3", 4)


def test_safe_path(tmpdir):
    config = tmpdir.join("mincq.yaml")
    config.write("surface: {}\n")
    assert safe_path(str(tmpdir), "mincq.yaml") == str(config)
    assert safe_path(str(config), "mincq.yaml") == str(config)
    other = tmpdir.join("mincq.json")
    other.write("{}")
    with raises(ParseError):
        safe_path(str(other), "mincq.yaml")
    with raises(FileNotFoundError):
        safe_path(str(tmpdir.join("missing")), "mincq.yaml")
