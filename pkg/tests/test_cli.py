import json
import subprocess
import sys

import pytest

from tfextremal.cli import main
from tfextremal.formats import graph6_decode
from tfextremal.knapsack import f_via_model1


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute(capsys):
    code, out, _ = run(capsys, "compute", "--d", "4", "--m", "9")
    assert code == 0 and "= 39" in out and "ProvenOptimal" in out
    code, out, _ = run(capsys, "compute", "--d", "9", "--m", "30")
    assert code == 0 and "[278, 282]" in out and "Unknown" in out and "[conjectured]" not in out
    code, out, _ = run(capsys, "compute", "--d", "9", "--m", "30", "--assume-conjectures")
    assert "278 [conjectured]" in out
    code, out, _ = run(capsys, "compute", "--d", "1", "--m", "5", "--format", "json")
    assert json.loads(out)["value"] == 5


def test_compute_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--d", "0", "--m", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--d", "x", "--m", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_compute_agrees_with_model1(capsys):
    for d in range(2, 12):
        for m in range(d, 30):
            for flag in ([], ["--assume-conjectures"]):
                _, out, _ = run(capsys, "compute", "--d", str(d), "--m", str(m), "--format", "json", *flag)
                obj = json.loads(out)
                try:
                    ref = f_via_model1(d, m, bool(flag))
                except ValueError:
                    continue
                assert obj["status"] == str(ref.status)
                if obj["value"] == obj["upper"] and obj["status"] != "Unknown":
                    assert obj["value"] == ref.value


def test_witness_and_verify_roundtrip(capsys, tmp_path):
    for d, m, extra in [(2, 5, []), (4, 5, []), (3, 2, []), (9, 30, []), (7, 20, ["--assume-conjectures"]), (5, 8, ["--general"])]:
        path = tmp_path / f"w{d}_{m}.g6"
        code, out, _ = run(capsys, "witness", "--d", str(d), "--m", str(m), "--format", "graph6", *extra)
        assert code == 0
        path.write_text(out)
        g = graph6_decode(out.strip())
        code, vout, _ = run(capsys, "verify", str(path), "--d", str(d), "--m", str(m))
        if "--general" in extra:
            continue
        assert code == 0 and "PASS" in vout
    code, out, _ = run(capsys, "witness", "--d", "2", "--m", "5", "--format", "graph6")
    assert graph6_decode(out.strip()).num_edges == 12
    code, out, _ = run(capsys, "witness", "--d", "4", "--m", "5")
    assert "22 edges" in out


def test_witness_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "witness", "--d", "3", "--m", "4", "--format", "dot")
    assert out.startswith("graph W_3_4 {") and code == 0
    code, out, _ = run(capsys, "witness", "--d", "3", "--m", "4", "--format", "json")
    obj = json.loads(out)
    assert obj["edges"] == 13 and obj["graph"]["n"] == graph6_decode(obj["graph6"]).n
    target = tmp_path / "w.dot"
    code, out, _ = run(capsys, "witness", "--d", "3", "--m", "4", "--format", "dot", "-o", str(target))
    assert code == 0 and target.read_text().startswith("graph")


def test_verify_outcomes(capsys, tmp_path):
    c5 = tmp_path / "c5.json"
    c5.write_text('{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]}')
    assert run(capsys, "verify", str(c5), "--d", "2", "--m", "2")[0] == 0
    k3 = tmp_path / "k3.g6"
    k3.write_text("Bw\n")
    code, out, _ = run(capsys, "verify", str(k3), "--d", "2", "--m", "1")
    assert code == 1 and "triangle" in out
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~~~\n")
    code, _, err = run(capsys, "verify", str(bad), "--d", "2", "--m", "1")
    assert code == 2 and "byte offset" in err
    code, _, err = run(capsys, "verify", str(tmp_path / "missing"), "--d", "2", "--m", "1")
    assert code == 2
    a4 = tmp_path / "a4.g6"
    run(capsys, "witness", "--d", "4", "--m", "4", "--format", "graph6", "-o", str(a4))
    code, out, _ = run(capsys, "verify", str(a4), "--d", "4", "--m", "4", "--format", "json")
    assert code == 0 and json.loads(out)["edges"] == 17


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--d-max", "5", "--m-max", "11", "--format", "json")
    cells = {(c["d"], c["m"]): c for c in json.loads(out)}
    assert (cells[4, 4]["f_triangle"], cells[4, 4]["f_gen"], cells[4, 4]["h"]) == (17, 20, 3)
    assert (cells[5, 11]["f_triangle"], cells[5, 11]["f_gen"], cells[5, 11]["h"]) == (58, 61, 3)
    assert (cells[1, 3]["f_triangle"], cells[1, 3]["f_gen"], cells[1, 3]["h"]) == (3, 3, 0)
    code, out, _ = run(capsys, "table", "--d-max", "9", "--m-max", "20", "--assume-conjectures")
    assert code == 0 and "*" in out and "[conjectured]" in out


def test_table_is_deterministic(capsys):
    a = run(capsys, "table", "--d-max", "8", "--m-max", "16")[1]
    b = run(capsys, "table", "--d-max", "8", "--m-max", "16")[1]
    assert a == b


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "2", "--m", "3")
    assert code == 0 and "= 7" in out and "agrees" in out
    code, out, _ = run(capsys, "oracle", "--zd", "--d", "3")
    assert code == 0 and "Exact(3)" in out
    code, out, _ = run(capsys, "oracle", "--d", "3", "--m", "3", "--format", "json")
    assert json.loads(out)["best_edges"] == 10
    code, _, err = run(capsys, "oracle", "--d", "5", "--m", "5")
    assert code == 2 and "budget" in err
    code, out, _ = run(capsys, "oracle", "--d", "5", "--m", "5", "--vertex-cap", "8")
    assert code == 0 and "partial" in out
    code, _, _ = run(capsys, "oracle", "--d", "3")
    assert code == 2
    with pytest.raises(SystemExit):
        main(["oracle", "--d", "3", "--m", "3", "--budget-vertices", "17"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tfextremal", "compute", "--d", "6", "--m", "13"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "= 82" in res.stdout
