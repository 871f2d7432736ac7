"""
Testcases for the worked examples:
- every registered example passes its exact checks
- artifacts and reports are written to the output directory
- run_all collects one report per example
- unknown names are rejected
"""

from os import path

from pytest import raises, mark

from mincq.examples import WorkedExample, list_examples, run_example, run_all
from mincq.errors import UnknownExample

GRID = (7, 7)


@mark.parametrize("name", sorted(WorkedExample.labels))
def test_example(name, tmpdir):
    report = run_example(name, str(tmpdir), grid=GRID)
    assert report.passed, report.to_text()
    assert report.files[-1].endswith(f"{name}_report.txt")
    for filename in report.files:
        assert path.isfile(filename)


def test_example_without_output():
    report = run_example("sylvester-rank3")
    assert report.passed
    assert report.files == []
    assert "PASS" in report.to_text()


def test_run_all(tmpdir):
    reports = run_all(str(tmpdir), grid=GRID, progress=False)
    assert [r.name for r in reports] == list(WorkedExample.labels)
    assert all(r.passed for r in reports)
    assert path.isdir(tmpdir.join("catenoid"))


def test_list_examples():
    examples = list_examples()
    assert set(examples) == set(WorkedExample.labels)
    assert "catenoid" in examples["catenoid"]


def test_unknown_example():
    with raises(UnknownExample):
        run_example("helicoid")
