"""
Testcases for the command line interface:
- convert between the four representations, checking the input representation
- surface, patch and phcurve write their closed forms, meshes, tables and reports
- sylvester prints the operator matrix and the rank class
- verify reports defects with exit code 2
- invalid input exits with code 3
- example listing and version information
"""

from os import path, chdir, getcwd
from shutil import rmtree
from subprocess import run

from pytest import fixture

from mincq.main import main, EXIT_OK, EXIT_DEFECT, EXIT_INPUT
from mincq.util.file_handler import FileHandler
from mincq.util.serialization import read_document
from mincq.weierstrass import PreimagePair, WEData, IsotropicCurve
from mincq.examples import catenoid_phi, richmond_phi

TIMEOUT = 60  # seconds
CONFIG = "--config study"


@fixture(autouse=True)
def chdir_pytest():
    pytest_root_dir = getcwd()
    chdir(path.dirname(path.abspath(__file__)))
    yield
    chdir(pytest_root_dir)


@fixture
def output(no_clean):
    directory = path.join("study", "output")
    yield directory
    if not no_clean and path.exists(directory):
        rmtree(directory)


def mincq(args):
    return run(f"mincq {args}", shell=True, timeout=TIMEOUT, capture_output=True, text=True)


def test_convert(output):
    target = path.join(output, "catenoid_fg.json")
    result = mincq(f"{CONFIG} convert --from phi --to fg --in study/catenoid_phi.json --out {target}")
    assert result.returncode == EXIT_OK, result.stderr
    assert isinstance(read_document(target), WEData)

    target = path.join(output, "richmond_pair.json")
    args = ["--config", "study", "convert", "--in", "study/richmond_phi.json", "--to", "pair", "--out", target]
    assert main(args) == EXIT_OK
    pair = read_document(target)
    assert isinstance(pair, PreimagePair)
    assert pair.certifies(richmond_phi())

    target = path.join(output, "catenoid_phi.json")
    assert main(["convert", "--in", "study/catenoid_pair.json", "--to", "phi", "-o", target]) == EXIT_OK
    assert read_document(target) == catenoid_phi()


def test_convert_errors(capsys):
    assert main(["convert", "--from", "fg", "--in", "study/catenoid_phi.json", "--to", "pair"]) == EXIT_INPUT
    assert "ParseError" in capsys.readouterr().err
    assert main(["convert", "--in", "study/ex1_corners.json", "--to", "phi"]) == EXIT_INPUT


def test_convert_stdout(capsys):
    assert main(["convert", "--in", "study/enneper_fg.json", "--to", "phi"]) == EXIT_OK
    out = capsys.readouterr().out
    assert '"representation": "phi"' in out


def test_surface(output):
    stem = path.join(output, "catenoid")
    report = path.join(output, "catenoid_geometry.csv")
    result = mincq(f"{CONFIG} surface --pair study/catenoid_phi.json --out {stem}.obj --report {report} --hdf5")
    assert result.returncode == EXIT_OK, result.stderr
    assert "log" in result.stdout
    mesh = FileHandler.load(f"{stem}.obj")
    assert mesh["vertices"].shape == (121, 3)
    assert mesh["faces"].shape == (100, 4)
    table = FileHandler.load(report)
    assert abs(table["H"]).max() < 1e-8
    assert not path.exists(f"{stem}.csv")
    assert path.isfile(f"{stem}.hdf5")
    assert path.isfile(f"{stem}.txt")


def test_surface_pair(output):
    stem = path.join(output, "catenoid_pair")
    args = ["--config", "study", "surface", "--pair", "study/catenoid_pair.json", "--grid", "5x7", "-o", stem]
    assert main(args + ["--part", "im", "--domain", "0.5,1.5,0.5,1.5"]) == EXIT_OK
    assert FileHandler.load(f"{stem}.obj")["vertices"].shape == (35, 3)
    assert path.isfile(f"{stem}.csv")


def test_surface_derivative_check(output):
    stem = path.join(output, "catenoid_checked")
    args = ["--config", "study/fd_check.yaml", "surface", "--pair", "study/catenoid_phi.json", "-o", stem]
    assert main(args) == EXIT_OK
    assert FileHandler.load(f"{stem}.obj")["vertices"].shape == (25, 3)


def test_surface_errors(output, capsys):
    # the default unit box of the study contains no pole, this one does
    args = ["--config", "study", "surface", "--pair", "study/catenoid_phi.json", "--domain", "-1,1,-1,1"]
    assert main(args) == EXIT_INPUT
    assert "PoleInDomain" in capsys.readouterr().err
    assert main(["surface", "--pair", "study/not_isotropic.json"]) == EXIT_INPUT
    assert main(["surface", "--pair", "study/invalid.json"]) == EXIT_INPUT
    assert main(["surface", "--pair", "study/missing.json"]) == EXIT_INPUT
    assert main(["surface", "--pair", "study/catenoid_phi.json", "--grid", "1x5"]) == EXIT_INPUT


def test_patch(output):
    stem = path.join(output, "ex1")
    report = path.join(output, "ex1_report.txt")
    result = mincq(f"{CONFIG} patch --corners study/ex1_corners.json --out {stem}.obj --report {report}")
    assert result.returncode == EXIT_OK, result.stderr
    assert "passed: True" in result.stdout
    mesh = FileHandler.load(f"{stem}.obj")
    assert mesh["vertices"].shape == (81, 3)
    assert "passed: True" in FileHandler.load(report, as_type="str")


def test_patch_rectangle(output, capsys):
    stem = path.join(output, "ex1_rect")
    args = ["--config", "study", "patch", "--corners", "study/ex1_corners.json", "--out", stem]
    assert main(args + ["--rect", "0,1,2,0"]) == EXIT_OK
    assert path.isfile(f"{stem}_conditions.txt")
    capsys.readouterr()
    assert main(args + ["--rect", "0,1,2"]) == EXIT_INPUT
    assert "P0,r1,r2,theta" in capsys.readouterr().err


def test_patch_conditions_fail(output, capsys):
    stem = path.join(output, "broken")
    args = ["--config", "study", "patch", "--corners", "study/broken_corners.json", "-o", stem]
    assert main(args) == EXIT_DEFECT
    assert "linear relation" in capsys.readouterr().out
    assert not path.exists(f"{stem}.obj")
    assert main(["patch", "--corners", "study/catenoid_phi.json", "-o", stem]) == EXIT_INPUT


def test_phcurve(output):
    target = path.join(output, "ph_rational.csv")
    args = "--samples 11 --interval 0.5,2"
    result = mincq(f"{CONFIG} phcurve --preimage study/ph_rational.json {args} --out {target}")
    assert result.returncode == EXIT_OK, result.stderr
    table = FileHandler.load(target)
    assert len(table) == 11
    assert table.dtype.names == ("t", "x", "y", "z", "speed")
    assert path.isfile(path.join(output, "ph_rational.txt"))


def test_phcurve_residue(output, capsys):
    target = path.join(output, "ph_residue.csv")
    args = ["--config", "study", "phcurve", "--preimage", "study/ph_residue.json", "--out", target]
    assert main(args) == EXIT_INPUT
    assert "NonzeroResidue" in capsys.readouterr().err
    assert main(args + ["--lambda", "t**2 + 1"]) == EXIT_OK
    assert path.isfile(target)
    assert main(args + ["--lambda", "1/(t + 1)"]) == EXIT_INPUT


def test_sylvester(capsys):
    assert main(["sylvester", "--f", "0,1,2,2", "--g", "0,-2,-2,-1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Rank2" in out
    assert "numeric rank = 2" in out
    assert "eigenvalue check = True" in out
    assert main(["sylvester", "--f", "0,0,I,1", "--g", "I,0,sqrt(2)/2,sqrt(2)/2"]) == EXIT_OK
    assert "Rank3" in capsys.readouterr().out
    assert main(["sylvester", "--f", "0,0,1", "--g", "1,0,0,0"]) == EXIT_INPUT


def test_verify(output, capsys):
    assert main(["--config", "study", "verify", "study/catenoid_phi.json"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "defects: none" in out
    report = path.join(output, "not_isotropic.txt")
    result = mincq(f"{CONFIG} verify study/not_isotropic.json -o {report}")
    assert result.returncode == EXIT_DEFECT
    assert "isotropy" in FileHandler.load(report, as_type="str")
    assert main(["verify", "study/ex1_corners.json", "--grid", "3x3"]) == EXIT_OK
    assert main(["verify", "study/broken_corners.json"]) == EXIT_DEFECT
    assert main(["verify", "study/invalid.json"]) == EXIT_INPUT


def test_example(output):
    result = mincq("example --list")
    assert result.returncode == EXIT_OK
    for name in ("catenoid", "ex1", "sylvester-rank3", "ph-rational"):
        assert name in result.stdout
    directory = path.join(output, "enneper")
    result = mincq(f"{CONFIG} example enneper --grid 7x7 -o {directory}")
    assert result.returncode == EXIT_OK, result.stderr
    assert path.isfile(path.join(directory, "enneper_report.txt"))
    assert mincq("example helicoid").returncode == EXIT_INPUT


def test_version():
    result = mincq("version")
    assert result.returncode == EXIT_OK
    assert result.stdout.startswith("mincq ")
    assert mincq("").returncode == EXIT_INPUT
