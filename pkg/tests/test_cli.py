"""Unittest for the pluckx command line."""
import json
from pathlib import Path

import pytest
import typer
from typer.testing import CliRunner

from pluckx import app
from pluckx.cli import reports_errors
from pluckx.demos import STANDARD_SIGMA_4
from pluckx.exalg import Multivector
from pluckx.exceptions import MalformedInputError
from pluckx.grass import Center
from pluckx.utils import center_to_json, multivector_to_json
from pluckx.version import SCHEMA_VERSION

# Constants
TEST_DATA_DIR = Path(__file__).parent / "data"

runner = CliRunner()


def data_file(name: str) -> str:
    return str(TEST_DATA_DIR / name)


def report(result) -> dict:
    return json.loads(result.stdout)


def assert_rejected(result, message: str = "ERROR") -> None:
    assert result.exit_code == 2, result.output
    assert message in result.output


@pytest.fixture
def broken_file(tmp_path):
    file = tmp_path / "broken.json"
    file.write_text("{not json", encoding="utf-8")
    return str(file)


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert "pluckx" in result.stdout
    assert f"report schema {SCHEMA_VERSION}" in result.stdout


def test_wronski_degree():
    result = runner.invoke(app, ["wronski", "degree", "-m", "3", "-n", "6"])
    assert result.exit_code == 0
    data = report(result)
    assert data["schema"] == SCHEMA_VERSION
    assert data["degree"] == 42


def test_output_file(tmp_path):
    target = tmp_path / "out" / "degree.json"
    result = runner.invoke(app, ["wronski", "degree", "-m", "2", "-n", "4", "--output", str(target)])
    assert result.exit_code == 0
    assert json.loads(target.read_text(encoding="utf-8"))["degree"] == 2


def test_grass_pluecker_from_stdin():
    basis = json.dumps([[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    result = runner.invoke(app, ["grass", "pluecker", "--basis", "-"], input=basis)
    assert result.exit_code == 0
    terms = report(result)["pluecker"]["terms"]
    assert terms == [{"idx": [1, 2, 3], "coef": "1/1"}, {"idx": [2, 3, 4], "coef": "1/1"}]


def test_grass_decomposable():
    result = runner.invoke(app, ["grass", "decomposable", "--point", data_file("o0.json")])
    assert result.exit_code == 0
    assert report(result)["decomposable"] is False
    assert report(result)["plane"] is None


def test_grass_fiber_partners():
    result = runner.invoke(
        app, ["grass", "fiber-partners", "--plane", data_file("e123.json"), "--point", data_file("o0.json")]
    )
    assert result.exit_code == 0
    data = report(result)
    assert data["partners"] == [multivector_to_json(Multivector.monomial(6, (4, 5, 6)))]
    assert data["base_multiplicity"] == 1


def test_fiber_partners_through_a_decomposable_point():
    result = runner.invoke(
        app, ["grass", "fiber-partners", "--plane", data_file("o5.json"), "--point", data_file("e123.json")]
    )
    assert_rejected(result)


def test_orbits_classify():
    result = runner.invoke(app, ["orbits", "classify", "--form", data_file("o0.json")])
    assert result.exit_code == 0
    assert report(result)["orbit"] == "O0"
    assert "o5" not in report(result)


def test_orbits_decompose():
    result = runner.invoke(app, ["orbits", "decompose", "--form", data_file("o5.json")])
    assert result.exit_code == 0
    data = report(result)
    assert data["alpha"]["dim"] == 1
    assert data["hyperplane"]["dim"] == 5


def test_orbits_decompose_outside_o5():
    result = runner.invoke(app, ["orbits", "decompose", "--form", data_file("o0.json")])
    assert_rejected(result)


def test_orbits_line_type():
    result = runner.invoke(
        app, ["orbits", "line-type", "--first", data_file("o5.json"), "--second", data_file("o5_second.json")]
    )
    assert result.exit_code == 0
    assert report(result)["type"] == "Type1"


def test_selfadj_detect_from_stdin():
    center = json.dumps(center_to_json(Center.span([STANDARD_SIGMA_4])))
    result = runner.invoke(app, ["selfadj", "detect", "--center", "-"], input=center)
    assert result.exit_code == 0
    assert report(result)["verdict"]["status"] == "SelfAdjoint"


def test_selfadj_detect_refuted():
    center = json.dumps(center_to_json(Center.span([Multivector.monomial(4, (1, 2))])))
    result = runner.invoke(app, ["selfadj", "detect", "--center", "-"], input=center)
    assert result.exit_code == 1
    assert report(result)["verdict"]["status"] == "RefutedBySolve"


def test_selfadj_detect_vertex_route():
    result = runner.invoke(app, ["selfadj", "detect", "--center", data_file("center_sigma6.json"), "--seed", "7"])
    assert result.exit_code == 0
    verdict = report(result)["verdict"]
    assert verdict["route"] == "vertex"
    assert verdict["E_spans"] is True


def test_selfadj_verify():
    result = runner.invoke(
        app,
        [
            "selfadj",
            "verify",
            "--center",
            data_file("center_sigma6.json"),
            "--sigma",
            data_file("sigma6.json"),
            "--trials",
            "5",
        ],
    )
    assert result.exit_code == 0
    data = report(result)
    assert data["trials"] == 5
    assert data["failures"] == 0


def test_selfadj_verify_dimension_mismatch(tmp_path):
    sigma = tmp_path / "sigma4.json"
    sigma.write_text(json.dumps(multivector_to_json(STANDARD_SIGMA_4)), encoding="utf-8")
    result = runner.invoke(
        app, ["selfadj", "verify", "--center", data_file("center_sigma6.json"), "--sigma", str(sigma)]
    )
    assert_rejected(result)


def test_wronski_build_center():
    result = runner.invoke(app, ["wronski", "build-center", "--fs", data_file("fs_x4.json"), "-m", "2"])
    assert result.exit_code == 0
    data = report(result)
    assert data["dim_X"] == 5
    assert data["center"]["dim"] == 1


def test_wronski_adjoint_of_operator():
    result = runner.invoke(app, ["wronski", "adjoint", "--op", data_file("op.json")])
    assert result.exit_code == 1
    assert report(result)["self_adjoint"] is False


def test_wronski_adjoint_of_fundamental_system():
    result = runner.invoke(app, ["wronski", "adjoint", "--fs", data_file("fs_x4.json")])
    assert result.exit_code == 0
    assert report(result)["self_adjoint"] is True


def test_wronski_adjoint_needs_one_source():
    result = runner.invoke(app, ["wronski", "adjoint"])
    assert_rejected(result)


def test_syscon_pp():
    result = runner.invoke(
        app, ["syscon", "pp", "--realization", data_file("siso.json"), "--gain", data_file("gain.json")]
    )
    assert result.exit_code == 0
    data = report(result)
    assert data["pole_polynomial"]["coeffs"] == ["-3/1", "0/1", "1/1"]
    assert data["via_transfer"]["num"] == data["pole_polynomial"]


def test_syscon_center():
    result = runner.invoke(app, ["syscon", "center", "--realization", data_file("siso.json")])
    assert result.exit_code == 0
    data = report(result)
    assert data["minimal"] is True
    assert data["dim_X"] == 2
    assert "verdict" not in data


def test_syscon_hm_curve():
    result = runner.invoke(app, ["syscon", "hm-curve", "--realization", data_file("siso.json")])
    assert result.exit_code == 0
    assert report(result)["degree"] == 2


def test_demo_command():
    result = runner.invoke(app, ["demo", "line-types"])
    assert result.exit_code == 0
    data = report(result)
    assert data["ok"] is True
    assert [line["type"] for line in data["lines"]] == ["Type1", "Type2", "Type3"]


def test_malformed_json(broken_file):
    result = runner.invoke(app, ["orbits", "classify", "--form", broken_file])
    assert_rejected(result)


def test_missing_file(tmp_path):
    result = runner.invoke(app, ["orbits", "classify", "--form", str(tmp_path / "absent.json")])
    assert_rejected(result)


def test_scalar_center_document():
    result = runner.invoke(app, ["selfadj", "detect", "--center", "-"], input="5")
    assert_rejected(result, "Malformed center document")


def test_library_errors_exit_with_their_status():
    @reports_errors
    def failing() -> None:
        raise MalformedInputError("bad document")

    with pytest.raises(typer.Exit) as info:
        failing()
    assert info.value.exit_code == MalformedInputError.exit_code == 2
