import json
import math

import pytest

from polyslip.cli import emit_lambda_plot, run
from polyslip.errors import DomainError
from polyslip.geometry import polycrystal_to_dict, quadrant_disk, sheared_square_polycrystal

PI = math.pi


@pytest.fixture(scope="module")
def output_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import importlib.resources as res
    schema = json.loads(res.files("polyslip").joinpath(
        "schemas/cli_output.schema.json").read_text())
    return lambda payload: jsonschema.validate(payload, schema)


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out), out


def test_taylor_command(capsys, output_schema):
    payload, _ = _run_json(capsys, ["taylor", "--angles", "0,0.5236,2.618"])
    assert payload["trivial"] is False
    assert payload["reduced"] == [0.0, 0.5236, 2.618]
    assert payload["kind"] == "triple"
    output_schema(payload)


def test_taylor_degrees_matches_radians(capsys):
    a, _ = _run_json(capsys, ["taylor", "--angles", "0,30,90", "--degrees"])
    b, _ = _run_json(capsys, ["taylor", "--angles",
                              f"0,{math.radians(30)!r},{PI / 2!r}"])
    assert a["trivial"] == b["trivial"] is True
    assert a["reduced"] == pytest.approx(b["reduced"])


def test_member_command(capsys, output_schema):
    payload, _ = _run_json(capsys, [
        "member", "--angles", "0,1.5707963267948966",
        "--matrix", "1,0.0,0,1"])
    assert payload["member"] is True
    output_schema(payload)
    payload, _ = _run_json(capsys, [
        "member", "--angles", "0,1.5707963267948966",
        "--matrix", "0.9,-0.1,0,1.1111111111111112"])
    assert payload["member"] is False


def test_compat_command(capsys, output_schema):
    payload, _ = _run_json(capsys, [
        "compat", "--matrix", "2,0,0,0.5", "--slip", "1,0", "--normal", "1,0"])
    assert payload["compatible"] is False
    assert payload["connection"] is None
    output_schema(payload)
    payload, _ = _run_json(capsys, [
        "compat", "--matrix", "1,3,0,1", "--slip", "1,0", "--normal", "1,1"])
    assert payload["compatible"] is True
    assert payload["connection"] is not None
    output_schema(payload)


def test_laminate_command(capsys, output_schema):
    payload, _ = _run_json(capsys, [
        "laminate", "--matrix", "2,0,0,0.5", "--slip", "1,0", "--slip2", "1,1"])
    assert 0.0 <= payload["lambda"] <= 1.0
    assert payload["t_minus"] < 0 < payload["t_plus"]
    output_schema(payload)


def test_mc_command(capsys, output_schema):
    payload, _ = _run_json(capsys, ["mc", "--k", "3", "--n", "20000", "--seed", "42"])
    assert payload["analytic"] == 0.5
    assert abs(payload["estimate"] - 0.5) < 4 * payload["stderr"]
    output_schema(payload)


def test_shear_command(capsys, output_schema, tmp_path):
    svg = tmp_path / "shear.svg"
    mesh = tmp_path / "mesh.json"
    payload, _ = _run_json(capsys, [
        "shear", "--gamma", "1/2", "--verify",
        "--svg", str(svg), "--mesh", str(mesh)])
    assert payload["F"] == [[1.1, -0.2], [0.6, 0.8]]
    assert payload["checks"]["all_passed"] is True
    assert payload["conclusion"]["separates"] is True
    assert payload["exact"] is True
    assert svg.read_text().startswith("<svg")
    assert len(json.loads(mesh.read_text())["cells"]) == 9
    payload.pop("svg"), payload.pop("mesh")
    output_schema(payload)


def test_outer_command(capsys, output_schema, tmp_path):
    path = tmp_path / "quadrant.json"
    path.write_text(json.dumps(polycrystal_to_dict(quadrant_disk())))
    payload, _ = _run_json(capsys, [
        "outer", "--polycrystal", str(path), "--matrix", "1,0,0,1"])
    assert payload["J"] == [1, 2, 3, 4]
    assert payload["equal_perp_full"] is True
    assert payload["member_perp"] is True
    assert payload["member_full"] is True
    output_schema(payload)

    path2 = tmp_path / "square.json"
    path2.write_text(json.dumps(polycrystal_to_dict(sheared_square_polycrystal())))
    payload, _ = _run_json(capsys, ["outer", "--polycrystal", str(path2)])
    assert payload["perp_points"] == []
    assert payload["perp_bound"]["trivial"] is True
    output_schema(payload)


def test_lambda_plot_command(capsys, output_schema, tmp_path):
    svg = tmp_path / "regions.svg"
    csv = tmp_path / "curves.csv"
    payload, _ = _run_json(capsys, [
        "lambda-plot", "--thetas", f"{PI / 10!r},{2 * PI / 10!r},{9 * PI / 10!r}",
        "--grid", "60", "--svg", str(svg), "--csv", str(csv)])
    # nested regions: the smaller angle's region strictly contains the larger's
    assert payload["cells_filled"][0] > payload["cells_filled"][1] > 0
    # the reflected obtuse-angle region matches its mirror in size (roughly)
    assert payload["cells_filled"][2] > 0
    header = csv.read_text().splitlines()[0]
    assert header == "theta,beta,gamma_minus,gamma_plus"
    assert svg.read_text().startswith("<svg")
    payload.pop("svg"), payload.pop("csv")
    output_schema(payload)


def test_lambda_plot_degenerate_point():
    svg_text, csv_text, summary = emit_lambda_plot([PI / 2], grid=40)
    assert summary["cells_filled"][0] <= 2
    with pytest.raises(DomainError):
        emit_lambda_plot([0.0], grid=10)


def test_lambda_plot_curve_extent():
    # the quarter-angle region spans stretches [sqrt(2)/2, 1] and its
    # full-stretch edge carries shears [-2, 0]
    _, csv_text, _ = emit_lambda_plot([PI / 4], grid=100)
    rows = [line.split(",") for line in csv_text.splitlines()[1:]]
    betas = [float(r[1]) for r in rows]
    assert min(betas) == pytest.approx(math.sin(PI / 4))
    assert max(betas) == pytest.approx(1.0)
    last = rows[-1]
    assert float(last[2]) == pytest.approx(-2.0)
    assert float(last[3]) == pytest.approx(0.0, abs=1e-12)


def test_shear_gamma_parsing_forms(capsys):
    for text in ("0.5", "1/2", "5e-1"):
        payload, _ = _run_json(capsys, ["shear", "--gamma", text])
        assert payload["exact"] is True
        assert payload["gamma"] == 0.5


def test_repeated_runs_byte_identical(capsys):
    _, out1 = _run_json(capsys, ["mc", "--k", "4", "--n", "5000", "--seed", "7"])
    _, out2 = _run_json(capsys, ["mc", "--k", "4", "--n", "5000", "--seed", "7"])
    assert out1 == out2
    _, s1 = _run_json(capsys, ["taylor", "--angles", "0.3,1.2,2.9"])
    _, s2 = _run_json(capsys, ["taylor", "--angles", "0.3,1.2,2.9"])
    assert s1 == s2


def test_exit_code_domain_error(capsys):
    assert run(["shear", "--gamma", "0.9"]) == 1
    err = capsys.readouterr().err
    assert "error" in err


def test_exit_code_parse_error(capsys):
    assert run(["member", "--angles", "0,1", "--matrix", "1,2,3"]) == 2
    assert run(["outer", "--polycrystal", "/nonexistent/file.json"]) == 2


def test_exit_code_bad_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["outer", "--polycrystal", str(bad)]) == 2


def test_exit_code_invalid_polycrystal(capsys, tmp_path):
    # well-formed JSON describing a structurally invalid polycrystal is a
    # domain error, not a parse error
    d = polycrystal_to_dict(quadrant_disk())
    d["grains"] = d["grains"][:2]  # grains no longer partition the disk
    bad = tmp_path / "invalid.json"
    bad.write_text(json.dumps(d))
    assert run(["outer", "--polycrystal", str(bad)]) == 1
    assert "error" in capsys.readouterr().err


def test_csv_format(capsys):
    code = run(["taylor", "--angles", "0,1.0", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "key,value"
    assert any(line.startswith("trivial,") for line in out.splitlines())
