import json
import xml.etree.ElementTree as ET

import jsonschema
import numpy as np
import pytest

from qdbezout.cli import main
from qdbezout.gallery import gallery_lookup
from qdbezout.plot import boundary_points, max_radial_deviation

QUARTIC = "[-4,3,-2,5,1]"
SVG_NS = "{http://www.w3.org/2000/svg}"

_INT = {"type": "integer"}
REPORT_SCHEMA = {
    "type": "object",
    "required": ["rule", "n", "map_degree", "matrix_size", "inertia", "signature", "offset",
                 "common_zero_degree", "interior_additional", "interior_total_if_no_boundary",
                 "interior", "boundary_suspected", "ambiguous_rank", "mode", "rank_tol", "poly"],
    "properties": {
        "rule": {"type": "string"},
        "n": _INT, "map_degree": _INT, "matrix_size": _INT, "signature": _INT, "offset": _INT,
        "common_zero_degree": _INT, "interior_additional": _INT, "interior": _INT,
        "interior_total_if_no_boundary": {"type": ["integer", "null"]},
        "inertia": {"type": "object", "required": ["n_plus", "n_minus", "n_zero"],
                    "additionalProperties": _INT},
        "boundary_suspected": {"type": "boolean"},
        "ambiguous_rank": {"type": "boolean"},
        "mode": {"enum": ["exact", "double"]},
        "rank_tol": {"type": "number"},
        "poly": {"type": "array", "items": {"type": "string"}},
    },
}
VERIFY_SCHEMA = {
    "type": "object",
    "required": ["ok", "report", "membership", "checks", "seed"],
    "properties": {
        "ok": {"type": "boolean"},
        "report": {"type": "object"},
        "membership": {"type": "object", "required": ["inside", "boundary", "outside"]},
        "checks": {"type": "array", "items": {
            "type": "object", "required": ["check", "expected", "observed", "ok"]}},
        "seed": _INT,
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def check_schema(obj, schema):
    jsonschema.validate(obj, schema)
    if schema is REPORT_SCHEMA:
        assert sum(obj["inertia"].values()) == obj["matrix_size"]


@pytest.mark.parametrize("domain, poly, interior", [
    ("disc", QUARTIC, 3), ("order3", QUARTIC, 3), ("neumann", "[-4,0,1]", 2),
    ("cardioid", QUARTIC, 3),
])
def test_count(capsys, domain, poly, interior):
    code, out, _ = run(capsys, "count", "--domain", domain, "--poly", poly)
    assert code == 0
    rep = json.loads(out)
    check_schema(rep, REPORT_SCHEMA)
    assert rep["interior"] == interior
    assert rep["mode"] == ("double" if domain == "order3" else "exact")


def test_count_constant(capsys):
    code, out, _ = run(capsys, "count", "--domain", "disc", "--poly", "[1]")
    rep = json.loads(out)
    assert code == 0 and rep["interior"] == 0 and rep["matrix_size"] == 0


def test_count_explicit_map_and_gaussian_coefficients(capsys):
    code, out, _ = run(capsys, "count", "--phi-num", '["-i", 1]', "--phi-den", '["i", 1]',
                       "--poly", '["-1/4", 0, 1]')
    assert code == 0 and json.loads(out)["interior"] == 2
    code, out, _ = run(capsys, "count", "--domain", "disc", "--poly", '["(0-1i)/2", 1]')
    assert code == 0 and json.loads(out)["interior"] == 1


def test_count_double_mode_ambiguous_exit_3(capsys):
    code, _, err = run(capsys, "count", "--domain", "cardioid", "--poly", QUARTIC,
                       "--mode", "double")
    assert code == 3 and "ambiguous" in err


@pytest.mark.parametrize("argv", [
    ["count", "--domain", "bogus", "--poly", "[1,1]"],
    ["gallery", "bogus"],
    ["count", "--domain", "disc", "--poly", "[1,"],
    ["count", "--domain", "disc", "--poly", "[0]"],
    ["count", "--domain", "disc"],
    ["count", "--poly", "[1,1]"],
    ["count", "--domain", "order3", "--poly", "[1,1]", "--mode", "exact"],
    ["count", "--phi-num", "[0,0,1]", "--phi-den", "[1]", "--poly", "[1,1]"],
    ["count", "--domain", "disc", "--poly", "[1,1]", "--mode", "fast"],
    ["plot", "--domain", "bogus"],
])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("domain", ["cardioid", "neumann"])
def test_verify_examples(capsys, domain):
    code, out, err = run(capsys, "verify", "--domain", domain, "--poly", "[-4,0,1]")
    assert code == 0, err
    res = json.loads(out)
    check_schema(res, VERIFY_SCHEMA)
    assert res["ok"] and all(c["ok"] for c in res["checks"])
    memb = res["membership"]
    if domain == "cardioid":
        assert (memb["inside"], memb["boundary"], memb["outside"]) == (1, 1, 0)
        assert res["report"]["interior_additional"] == 1
        assert res["report"]["common_zero_degree"] == 1
    else:
        assert memb["inside"] == res["report"]["interior"] == 2


def test_verify_all_gallery(capsys):
    for domain in ("disc", "cardioid", "neumann", "order3"):
        code, _, err = run(capsys, "verify", "--domain", domain, "--poly", QUARTIC)
        assert code == 0, (domain, err)


def test_verify_corrupt_j_exit_1(capsys):
    code, out, err = run(capsys, "verify", "--domain", "neumann", "--poly", QUARTIC,
                         "--corrupt-j")
    assert code == 1 and "mismatch" in err and not json.loads(out)["ok"]


def test_determinism(capsys):
    argv = ["verify", "--domain", "neumann", "--poly", QUARTIC, "--seed", "7"]
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    argv = ["plot", "--domain", "cardioid", "--poly", QUARTIC]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_dump(capsys):
    code, out, _ = run(capsys, "dump", "--domain", "disc", "--poly", QUARTIC)
    res = json.loads(out)
    assert code == 0 and res["inertia"] == [1, 7, 0]
    assert len(res["H"]) == 8


def _svg(capsys, *argv):
    code, out, _ = run(capsys, "plot", *argv)
    assert code == 0
    return ET.fromstring(out.split("\n", 1)[1])


def test_plot_disc_is_unit_circle(capsys):
    root = _svg(capsys, "--domain", "disc")
    assert root.tag == SVG_NS + "svg"
    assert max_radial_deviation(boundary_points(gallery_lookup("disc").phi, 4096)) <= 1e-6


def test_plot_cardioid_markers(capsys):
    root = _svg(capsys, "--domain", "cardioid", "--poly", QUARTIC)
    markers = root.findall(SVG_NS + "circle")
    classes = [m.get("class").split()[1] for m in markers]
    assert len(markers) == 4 and classes.count("inside") == 3


def test_plot_neumann_bounded(capsys):
    _svg(capsys, "--domain", "neumann")
    pts = boundary_points(gallery_lookup("neumann").phi, 4096)
    assert np.all(np.isfinite(pts)) and np.max(np.abs(pts)) <= 15
    assert abs(pts[0] - pts[-1]) == 0


def test_plot_to_file(tmp_path, capsys):
    out = tmp_path / "disc.svg"
    assert main(["plot", "--domain", "disc", "--out", str(out)]) == 0
    ET.parse(out)


def test_gallery(capsys):
    code, out, _ = run(capsys, "gallery")
    names = [g["name"] for g in json.loads(out)]
    assert code == 0 and names == ["disc", "cardioid", "neumann", "order3"]
    code, out, _ = run(capsys, "gallery", "order3")
    assert json.loads(out)["exact_capable"] is False
    code, out, _ = run(capsys, "gallery", "disc")
    assert json.loads(out)["phi"] == {"num": ["(0-1i)/1", "(1+0i)/1"],
                                         "den": ["(0+1i)/1", "(1+0i)/1"]}


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "qdbezout", "count", "--domain", "disc",
                          "--poly", QUARTIC], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["interior"] == 3
    res = subprocess.run([sys.executable, "-m", "qdbezout", "gallery", "bogus"],
                         capture_output=True, text=True)
    assert res.returncode == 2
