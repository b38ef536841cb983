import io
import json
import subprocess
import sys

import pytest

from toricover.cli import main
from toricover.fixtures import quadric_example
from toricover.formats import format_fan, format_matrix, format_presentation

P2_FAN = "# projective plane\n2 3\n1 0 -1\n0 1 -1\nCONES\n1 2\n2 3\n1 3\n"
QUOT_FAN = "2 4\n1 1 -1 -1\n1 -1 1 -1\nCONES\n1 2\n1 3\n3 4\n2 4\n"
F1_FAN = "2 4\n1 0 -1 0\n0 1 1 -1\nCONES\n1 2\n2 3\n3 4\n1 4\n"
QUOT_V = "2 4\n1 1 -1 -1\n1 -1 1 -1\n"
P1P1_V = "2 4\n1 0 0 -1\n0 1 -1 0\n"


@pytest.fixture
def files(tmp_path):
    hk = quadric_example()
    contents = {
        "p2.fan": P2_FAN,
        "quot.fan": QUOT_FAN,
        "f1.fan": F1_FAN,
        "quot.mat": QUOT_V,
        "p1p1.mat": P1P1_V,
        "hk.fan": format_fan(hk.fan()),
        "hk.v": format_matrix(hk.V),
        "hk.pres": format_presentation(hk.presentation()),
        "p2.irr": "VARS 3\n1\n2\n3\n",
        "bad.mat": "2 2\n1 0\n0\n",
        "bad.fan": "2 3\n1 0 1\n0 1 1\nCONES\n1 2\n3\n",
        "conflict.pres": "Q\n1 2\n1 2\nRELATIONS\nx1 + x2\n",
    }
    paths = {}
    for name, text in contents.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def string_leaves(obj):
    if isinstance(obj, dict):
        return all(isinstance(k, str) and string_leaves(v)
                   for k, v in obj.items())
    if isinstance(obj, list):
        return all(string_leaves(v) for v in obj)
    return isinstance(obj, str)


def test_verify_example_passes():
    code, out, _ = run("verify-example")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8 and all(l.startswith("PASS") for l in lines)


def test_cover_output(files):
    code, out, _ = run("cover", files["quot.fan"])
    assert code == 0
    assert out == ("V_TILDE\n2 4\n1 0 0 -1\n0 1 -1 0\n"
                   "BETA\n2 2\n1 1\n1 -1\n"
                   "PI1 Z/2\nDEGREE 2\nCONES\n1 2\n1 3\n2 4\n3 4\n")


def test_group_commands(files):
    assert run("classgroup", files["hk.v"])[1] == "Z^3 x Z/2\n"
    assert run("pi1", files["hk.v"])[1] == "Z/2\n"
    assert run("degree", files["hk.fan"])[1] == "2\n"
    assert run("beta", files["quot.mat"], files["p1p1.mat"])[1] == \
        "2 2\n1 1\n1 -1\n"


def test_beta_not_integer_is_check_failure(files):
    code, _, err = run("beta", files["p1p1.mat"], files["quot.mat"])
    assert code == 1 and "NotIntegerError" in err


def test_normal_form_commands(files):
    code, out, _ = run("hnf", files["quot.mat"])
    assert code == 0 and out.startswith("H\n2 4\n")
    code, out, _ = run("snf", files["quot.mat"])
    assert out.startswith("S\n2 4\n1 0 0 0\n0 2 0 0\n")
    code, out, _ = run("gale", files["quot.mat"])
    assert out == "2 4\n1 0 0 1\n0 1 1 0\n"


def test_classify(files):
    code, out, _ = run("classify", "--kind", "fan", files["quot.mat"])
    assert code == 0
    assert "F true\nCF false\n" in out and "failed e:" in out
    code, out, _ = run("classify", "--kind", "weight", files["p1p1.mat"])
    assert code == 0 and out.startswith("W false")


def test_fan_commands(files):
    assert run("complete", files["p2.fan"])[1] == "true\n"
    assert run("complete", files["hk.fan"])[1] == "false\n"
    code, out, _ = run("irr", files["p2.fan"])
    assert out == "VARS 3\n1\n2\n3\n"
    code, out, _ = run("fan-from-irr", files["p1p1.mat"], files["p2.irr"])
    assert code == 2  # ideal on 3 variables vs 4 rays
    code, out, _ = run("codim", files["p2.irr"])
    assert out == "3\n"
    code, out, _ = run("validate-fan", files["p2.fan"])
    assert out == "2 3\n1 0 -1\n0 1 -1\nCONES\n1 2\n1 3\n2 3\n"


def test_fan_from_irrelevant(files, tmp_path):
    v = tmp_path / "p2.mat"
    v.write_text("2 3\n1 0 -1\n0 1 -1\n")
    code, out, _ = run("fan-from-irr", str(v), files["p2.irr"])
    assert code == 0 and out.endswith("CONES\n1 2\n1 3\n2 3\n")


def test_invalid_fan_is_check_failure(files):
    code, out, err = run("validate-fan", files["bad.fan"])
    assert code == 1 and "BadIntersectionError" in err and out == ""


def test_neighborly_and_nef(files):
    assert run("neighborly", "-k", "2", files["p2.fan"])[1] == "true\n"
    assert run("neighborly", "-k", "2", "--dual", files["hk.fan"])[1] == \
        "true\n"
    assert run("neighborly", "-k", "3", files["hk.fan"])[1] == "false\n"
    code, out, _ = run("nef", files["f1.fan"])
    assert out == "GENERATORS\n2 2\n1 0\n1 1\nFACETS\n2 2\n0 1\n1 -1\n"


def test_grading_commands(files):
    code, out, _ = run("grade", files["hk.pres"], "x1*x8")
    assert (code, out) == (0, "(2, 2, 2); 1\n")
    code, out, _ = run("homogeneous", files["hk.pres"])
    assert (code, out) == (0, "homogeneous (2, 2, 2); 1\n")
    code, out, _ = run("homogeneous", files["conflict.pres"])
    assert code == 1 and out.startswith("not homogeneous")
    code, out, _ = run("cover-grading", files["hk.pres"])
    assert code == 0 and "TORSION" not in out and "RELATIONS" in out


def test_parse_errors_exit_2(files):
    code, _, err = run("hnf", files["bad.mat"])
    assert code == 2 and "line 3" in err
    code, _, err = run("hnf", "/nonexistent/file")
    assert code == 2


def test_unknown_flag_rejected(files):
    with pytest.raises(SystemExit) as exc:
        run("hnf", "--frobnicate", files["quot.mat"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        run()


ALL_COMMANDS = [
    ("hnf", "quot.mat"), ("snf", "quot.mat"), ("gale", "quot.mat"),
    ("classify", "--kind", "fan", "quot.mat"), ("validate-fan", "hk.fan"),
    ("complete", "hk.fan"), ("irr", "hk.fan"), ("codim", "p2.irr"),
    ("neighborly", "-k", "2", "hk.fan"), ("nef", "hk.fan"),
    ("classgroup", "hk.v"), ("pi1", "hk.v"), ("cover", "hk.fan"),
    ("beta", "quot.mat", "p1p1.mat"), ("degree", "hk.fan"),
    ("grade", "hk.pres", "x4*x5"), ("homogeneous", "hk.pres"),
    ("cover-grading", "hk.pres"), ("verify-example",),
]


def _resolve(files, argv):
    return [files.get(a, a) for a in argv]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: a[0])
def test_json_is_single_document_of_strings(files, argv):
    code, out, _ = run("--json", *_resolve(files, argv))
    assert code == 0
    doc = json.loads(out)
    assert string_leaves(doc)


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: a[0])
def test_output_is_deterministic(files, argv):
    first = run(*_resolve(files, argv))
    assert first[0] == 0
    assert run(*_resolve(files, argv)) == first


def test_output_file_and_flag_position(files, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run("pi1", files["quot.mat"], "--json", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["descriptor"] == "Z/2"


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "toricover", "classgroup", "-"],
        input=QUOT_V, capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "Z^2 x Z/2\n"
