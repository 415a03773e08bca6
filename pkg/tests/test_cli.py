import io
import json
import subprocess
import sys

import pytest

from redgw.cli import dumps, run


def call(*argv):
    out = io.StringIO()
    code, report = run(list(argv), stdout=out)
    return code, report, out.getvalue()


@pytest.fixture
def tree_file(tmp_path, example_tree):
    p = tmp_path / "tree.json"
    p.write_text(json.dumps(example_tree.to_json()))
    return str(p)


def test_coefficient_with_gw0():
    code, rep, text = call("coefficient", "--n", "4", "--degrees", "5", "--d", "3",
                           "--gw0", "317206375")
    assert code == 0
    assert rep["coefficient"] == "1/12" and rep["correction"] == "317206375/12"
    assert json.loads(text) == rep
    assert dumps(json.loads(text)) == text


def test_genus_zero_sign():
    _, rep1, _ = call("coefficient", "--n", "5", "--degrees", "2,2", "--d", "1")
    _, rep0, _ = call("coefficient", "--n", "5", "--degrees", "2,2", "--d", "1", "--genus", "0")
    assert rep1["sign_factor"] == 1 and rep0["sign_factor"] == 1
    _, rep0, _ = call("coefficient", "--n", "4", "--degrees", "5", "--d", "1", "--genus", "0")
    _, rep1, _ = call("coefficient", "--n", "4", "--degrees", "5", "--d", "1")
    assert rep0["sign_factor"] == 1 and rep1["sign_factor"] == -1


def test_audit_surface():
    code, rep, _ = call("audit", "--n", "3", "--degrees", "4", "--d", "2", "--k", "0")
    assert code == 0 and rep["survivors"] == []
    assert {s["verdict"] for s in rep["strata"]} == {"vanishes_by_dimension"}


def test_audit_with_tree(tree_file):
    code, rep, _ = call("audit", "--n", "4", "--degrees", "5", "--d", "4", "--k", "3",
                        "--tree", tree_file)
    assert code == 0 and rep["survivors"] == [[[4, [1, 2, 3]]]]
    code, _, _ = call("audit", "--n", "4", "--degrees", "5", "--d", "3", "--tree", tree_file)
    assert code == 2


def test_lines():
    code, rep, _ = call("lines", "--n", "3", "--degrees", "3")
    assert code == 0 and rep["lines"] == 27
    code, _, _ = call("lines", "--n", "3", "--degrees", "4")
    assert code == 2


def test_strata_and_advance(tree_file):
    code, rep, _ = call("strata", "--tree", tree_file)
    assert code == 0 and len(rep["sequences"]) == 4
    code, rep, _ = call("advance", "--tree", tree_file, "--at", "c")
    assert code == 0 and len(rep["trees"]) == 2
    final = {v["id"]: v for v in rep["trees"][-1]["vertices"]}
    assert final["c"]["weight"] == 4 and final["c"]["legs"] == [1, 2, 3]
    code, _, _ = call("advance", "--tree", tree_file, "--at", "g1")
    assert code == 2


def test_charts(tree_file):
    code, rep, _ = call("charts", "--tree", tree_file, "--n", "4", "--m", "1", "--p-fields",
                        "--sequence", "d,g1")
    assert code == 0
    (atlas,) = rep["atlases"]
    assert len(atlas["equations"]) == 5
    code, rep, _ = call("charts", "--tree", tree_file, "--n", "2")
    assert len(rep["atlases"]) == 4


def test_validation_exit_codes(tmp_path):
    assert call("nonsense")[0] == 2
    assert call("coefficient", "--n", "4", "--degrees", "5")[0] == 2
    assert call("coefficient", "--n", "4", "--degrees", "a,b", "--d", "1")[0] == 2
    assert call("coefficient", "--n", "9", "--degrees", "5", "--d", "1")[0] == 2
    assert call("strata", "--tree", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"root": "*", "vertices": [{"id": "*"}, {"id": "a", "parent": "*"}]}')
    assert call("strata", "--tree", str(bad))[0] == 2


def test_internal_error_exit_code(monkeypatch):
    import redgw.cli as cli

    def boom(cfg):
        raise RuntimeError("broken")

    monkeypatch.setitem(cli.HANDLERS, "lines", boom)
    assert call("lines", "--n", "3", "--degrees", "3")[0] == 1


def test_out_and_report_dir(tmp_path, monkeypatch):
    out = tmp_path / "q.json"
    code, rep, text = call("coefficient", "--n", "4", "--degrees", "5", "--d", "1",
                           "--out", str(out))
    assert out.read_text() == text
    monkeypatch.setenv("REDGW_REPORT_DIR", str(tmp_path / "reports"))
    call("lines", "--n", "4", "--degrees", "2,2")
    saved = (tmp_path / "reports" / "lines.json").read_text()
    assert json.loads(saved)["lines"] == 16
    assert dumps(json.loads(saved)) == saved


def test_text_mode():
    code, _, text = call("coefficient", "--n", "4", "--degrees", "5", "--d", "2", "--text")
    assert code == 0 and "1/12 GW_0,2" in text


def test_selftest_and_module_entry():
    proc = subprocess.run([sys.executable, "-m", "redgw", "selftest"], capture_output=True,
                          text=True)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["ok"] is True
