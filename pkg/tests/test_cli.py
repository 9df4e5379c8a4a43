import json
import subprocess
import sys

import pytest

from cytkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("roots", "C", "7", "--sum", "--coeffs"), "14 26 36 44 50 54 28"),
        (("roots", "A", "3", "--sum"), "3,1,-1,-3"),
        (("roots", "A", "1", "--sum"), "1,-1"),
        (("koszul", "A10:1,2,6,9"), "10,8,3,3,3,3,-4,-4,-4,-9,-9"),
        (("koszul", "C7:1,3,4,5"), "14,11,11,8,6,0,0"),
        (("koszul", "A2:1,2"), "2,0,-2"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_c1_json(capsys):
    code, out, _ = run(capsys, "c1", "A10:1,2,6,9", "blocks=1,1,su4,su3,su2", "--enumerate", "2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["matrix"] == [[1, 1, 4, 3, 2], [10, 8, 12, -12, -18]]
    assert doc["kernel_rank"] == 3 and doc["c1_vanishes"]
    for v in doc["kernel"]:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in doc["matrix"])
    code, out, _ = run(capsys, "c1", "C7:1,3,4,5", "--json")
    assert json.loads(out)["matrix"] == [[14, 22, 8, 6]]


def test_c1_su4_all_black(capsys):
    code, out, _ = run(capsys, "c1", "A3:1,2,3", "blocks=1,1,1,1", "--enumerate", "1", "--json")
    doc = json.loads(out)
    assert doc["matrix"] == [[1, 1, 1, 1], [3, 1, -1, -3]]
    (theta,) = doc["torus"]
    assert sum(theta) == 0 and sum((4 - 2 * k + 1) * t for k, t in enumerate(theta, 1)) == 0


def test_cohomology_json_schema(capsys):
    code, out, _ = run(capsys, "cohomology", "1", "0", "--json")
    doc = json.loads(out)
    assert code == 0
    assert {"weights", "M4", "N6", "K8", "L", "eligible", "cohomology", "relations"} <= set(doc)
    assert doc["weights"] == [1, 0, -3, 2]
    assert doc["cohomology"]["4"] == {"rank": 0, "torsion": [13]}
    assert doc["relations"][0] == "13w^2"
    assert json.loads(json.dumps(doc)) == doc


def test_cohomology_text(capsys):
    code, out, _ = run(capsys, "cohomology", "1", "0")
    assert "H^4 = Z/13" in out and "H^7 = Z^2" in out


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "4", "--json")
    rows = json.loads(out)["rows"]
    assert [r["k"] for r in rows] == [1, 2, 3, 4]
    assert rows[2]["L"] == 4 and rows[2]["M4/L"] == 43


def test_cyt_su2su2(capsys):
    code, out, _ = run(capsys, "cyt-su2su2", "0", "1")
    assert code == 0 and out.startswith("admissible: true, metric:")
    code, out, _ = run(capsys, "cyt-su2su2", "3", "1", "--json")
    doc = json.loads(out)
    assert doc["admissible"] is False and "b(b-a)" in doc["reason"]
    code, out, _ = run(capsys, "cyt-su2su2", "1/2", "-3", "--json")
    doc = json.loads(out)
    assert doc["admissible"] and doc["cyt_equation"]
    assert all("." not in x for row in doc["metric"] for x in row)


def test_cyt_su3(capsys):
    code, out, _ = run(capsys, "cyt-su3", "1/4", "1/4", "7/4", "--json")
    assert json.loads(out)["cyt"] is True
    code, out, _ = run(capsys, "cyt-su3", "1", "2", "1", "--json")
    doc = json.loads(out)
    assert doc["cyt"] is False and doc["residual"] != ["0", "0"]


def test_verify_strominger(capsys):
    code, out, _ = run(capsys, "verify-strominger", "nil6", "--a", "1", "--b", "0")
    assert code == 0
    assert "balanced: yes" in out and "alpha' = 4" in out
    assert "ddcF = 4*e1^Je1^e2^Je2" in out
    code, out, _ = run(capsys, "verify-strominger", "nil6", "--a", "1/2", "--b", "2", "--json")
    doc = json.loads(out)
    assert doc["anomaly"]["solvable"] is False and doc["anomaly"]["mu"] == "-1/4"


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--json")
    names = [e["name"] for e in json.loads(out)["entries"]]
    assert "su11-t2" in names and "case-vi" in names
    code, out, _ = run(capsys, "catalog", "check", "all", "--json")
    assert code == 0 and all(r["ok"] for r in json.loads(out)["results"])


@pytest.mark.parametrize(
    "argv",
    [
        ("koszul", "X3:1"),
        ("koszul", "A3:7"),
        ("roots", "A", "0"),
        ("cyt-su2su2", "1", "0"),
        ("cohomology", "2", "0"),
        ("c1", "A10:1,2,6,9", "blocks=1,1,su4,su2,su3"),
        ("c1", "A10:1,2,6,9", "--enumerate", "4"),
        ("catalog", "check", "nope"),
        ("verify-strominger", "heisenberg"),
        ("cyt-su3", "0", "1", "1"),
    ],
)
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cyt-su2su2", "x", "1"])
    assert exc.value.code == 2


def test_invariant_failure_exits_3(capsys, monkeypatch):
    import cytkit.ssq as ssq

    def boom(k, l):
        raise ssq.MathAssertionError("extension left open")

    monkeypatch.setattr(ssq, "spectral_sequence", boom)
    code, _, err = run(capsys, "cohomology", "1", "0")
    assert code == 3 and "extension" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cytkit", "roots", "A", "3", "--sum"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3,1,-1,-3"
