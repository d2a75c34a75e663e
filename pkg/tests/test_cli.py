import json
import xml.etree.ElementTree as ET

import pytest

from slopenorm import fig8_dataset, from_document, load, pretzel_dataset, save
from slopenorm.cli import run


@pytest.fixture()
def fig8_path(tmp_path):
    path = tmp_path / "fig8.json"
    save(fig8_dataset(), path)
    return str(path)


@pytest.fixture()
def pretzel_path(tmp_path):
    path = tmp_path / "p7.json"
    save(pretzel_dataset(7), path)
    return str(path)


def test_eval_norm(fig8_path, capsys):
    assert run(["eval", "norm", "-m", fig8_path, "-r", "1/0"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_eval_length(fig8_path, capsys):
    assert run(["eval", "length", "-m", fig8_path, "-r", "4/1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("28 ")
    assert "5.29150262213" in out


def test_eval_distance(capsys, fig8_path):
    assert run(["eval", "distance", "-r", "4/1", "-r", "-4/1"]) == 0
    assert capsys.readouterr().out.strip() == "8"


def test_eval_json_format(fig8_path, capsys):
    assert run(["eval", "norm", "-m", fig8_path, "-r", "4/1", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"quantity": "norm", "slope": "4/1", "value": "16"}


def test_verify_thm3(fig8_path, capsys):
    assert run(["verify", "thm3", "-m", fig8_path, "-r", "4/1"]) == 0
    assert "holds: 8 > 4" in capsys.readouterr().out


def test_verify_thm1_range(fig8_path, capsys):
    assert run(["verify", "thm1", "-m", fig8_path, "--range", "20"]) == 0
    out = capsys.readouterr().out
    assert "holds:" in out and "slopes" in out
    passed, total = out.split("holds:")[1].split()[0].split("/")
    assert passed == total


def test_verify_all(fig8_path, capsys):
    assert run(["verify", "all", "-m", fig8_path]) == 0
    out = capsys.readouterr().out
    assert "thm2" in out and "cor-ubdiam" in out
    assert "fails" not in out


def test_verify_all_json(fig8_path, capsys):
    assert run(["verify", "all", "-m", fig8_path, "--format", "json"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert all(r["status"] != "fails" for r in reports)
    assert {"statement", "status", "lhs", "rhs", "witnesses"} <= set(reports[0])


def test_verify_negative_slope_flags(fig8_path, capsys):
    assert run(["verify", "prop-norm", "-m", fig8_path, "-r", "5/1", "-r", "-5/1"]) == 0
    assert "equality: 10 = 10" in capsys.readouterr().out


def test_verify_prop4_pretzel(pretzel_path, capsys):
    assert run(["verify", "prop4", "-m", pretzel_path]) == 0
    assert "holds" in capsys.readouterr().out


def test_verify_deterministic_output(fig8_path, capsys):
    run(["verify", "all", "-m", fig8_path])
    first = capsys.readouterr().out
    run(["verify", "all", "-m", fig8_path])
    assert capsys.readouterr().out == first


def test_family_fig8_stdout(capsys):
    assert run(["family", "fig8"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert from_document(doc) == fig8_dataset()


def test_family_pretzel_out(tmp_path, capsys):
    out = tmp_path / "p11.json"
    assert run(["family", "pretzel", "--n", "11", "--out", str(out)]) == 0
    assert load(out) == pretzel_dataset(11)


def test_family_twobridge(capsys):
    assert run(["family", "twobridge", "--crossings", "6"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["boundary_slopes"] == ["0/1", "12/1"]


def test_family_missing_parameter(capsys):
    assert run(["family", "pretzel"]) == 2
    assert "error:" in capsys.readouterr().err


def test_plot_unit_ball(fig8_path, tmp_path, capsys):
    out = tmp_path / "ball.svg"
    assert run(["plot", "unit-ball", "-m", fig8_path, "--out", str(out)]) == 0
    tree = ET.parse(out)  # well-formed XML
    ns = "{http://www.w3.org/2000/svg}"
    polygons = tree.getroot().findall(f".//{ns}polygon")
    ellipses = tree.getroot().findall(f".//{ns}ellipse")
    assert len(polygons) == 1
    assert len(ellipses) == 1


def test_report(fig8_path, capsys):
    assert run(["report", "-m", fig8_path]) == 0
    out = capsys.readouterr().out
    assert "manifold: figure-eight" in out
    assert "thm3(4/1)" in out


def test_usage_errors(capsys, tmp_path):
    assert run(["verify", "nonsense", "-m", "x.json"]) == 2
    capsys.readouterr()
    assert run(["eval", "norm", "-r", "4/1"]) == 2
    assert "manifold file is required" in capsys.readouterr().err
    assert run(["verify", "thm1", "-m", str(tmp_path / "missing.json")]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:") and err.count("\n") == 1


def test_data_error_single_line(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "boundary_slopes": ["2/4"]}')
    assert run(["verify", "thm1", "-m", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "not primitive" in err and err.count("\n") == 1


def test_exit_code_on_failing_check(tmp_path, capsys):
    # inconsistent data: a surface whose slope is too long for the cusp shape
    doc = {
        "name": "inconsistent",
        "cusp": {"g_mm": "1", "g_ml": "0", "g_ll": "400"},
        "boundary_slopes": ["0/1", "1/1"],
        "surfaces": [
            {"slope": "0/1", "euler": -1, "boundary_components": 1},
            {"slope": "1/1", "euler": -1, "boundary_components": 1},
        ],
    }
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    assert run(["verify", "all", "-m", str(path)]) == 1
    assert "fails" in capsys.readouterr().out
