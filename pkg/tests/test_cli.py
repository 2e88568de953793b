import subprocess
import sys

import pytest

from esdom.cli import run
from esdom.edgelist import format_edge_list
from esdom.generators import cycle


def kv(stdout):
    out = {}
    for line in stdout.splitlines():
        if line == "# ---":
            break
        key, sep, value = line.partition("=")
        if sep:
            out.setdefault(key, value)
    return out


def test_compute_cycle8():
    res = run(["compute", "--gen", "cycle:8"])
    assert res.code == 0
    vals = kv(res.stdout)
    assert vals["gamma"] == "3" and vals["gamma_sp"] == "4" and vals["gamma_esp"] == "4"
    assert vals["esd_set"] == "0,1,4,5"
    assert vals["certificate"] == "2->1,3->4,6->5,7->0"
    assert "# ---" in res.stdout


def test_quiet_prints_values_only():
    res = run(["compute", "--gen", "cycle:8", "--quiet"])
    assert res.stdout.splitlines() == ["8", "8", "3", "4", "4", "0,1,4,5", "2->1,3->4,6->5,7->0"]


def test_verify_failure_exit_one():
    res = run(["verify", "--gen", "star:4", "--set", "0,1"])
    assert res.code == 1
    assert "result=FAIL" in res.stdout
    assert "degree<2 in complement" in res.stdout


def test_verify_pass(tmp_path):
    f = tmp_path / "c8.txt"
    f.write_text(format_edge_list(cycle(8)))
    res = run(["verify", "--file", str(f), "--set", "0,1,4,5"])
    assert res.code == 0 and kv(res.stdout)["result"] == "PASS"


def test_enumerate_all_sets():
    res = run(["enumerate", "--gen", "cycle:8", "--all-sets"])
    lines = res.stdout.splitlines()
    assert lines[:2] == ["gamma_esp=4", "N_esp=4"]
    assert lines[2:] == ["set=0,1,4,5", "set=0,3,4,7", "set=1,2,5,6", "set=2,3,6,7"]


def test_formula_with_construct():
    res = run(["formula", "--gen", "cycle:100", "--construct"])
    vals = kv(res.stdout)
    assert vals["gamma_esp"] == "50" and vals["N_esp"] == "4"
    assert len(vals["set"].split(",")) == 50


def test_formula_unknown_family_is_usage_error():
    assert run(["formula", "--gen", "substar:3"]).code == 2


def test_tree_from_script(tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("base\nO1@1\n")
    vals = kv(run(["tree", "--script", str(f)]).stdout)
    assert vals["n"] == "6" and vals["coloring"] == "B,A,A,B,A,B" and vals["blue"] == "0,3,5"


def test_tree_recognition():
    assert kv(run(["tree", "--gen", "path:8"]).stdout)["in_family"] == "1"
    res = run(["tree", "--gen", "star:4"])
    assert "NOT-IN-FAMILY" in res.stdout and res.code == 0
    assert run(["tree", "--gen", "cycle:5"]).code == 2


def test_audit_lines():
    res = run(["audit", "--gen", "path:4"])
    assert res.code == 0
    assert any(ln.startswith("CHECK edge_removal_upper[1-2] PASS lhs=4 rhs=4 sharp=1") for ln in res.stdout.splitlines())
    assert "fail=0" in res.stdout


def test_rank_and_roles():
    vals = kv(run(["rank", "--gen", "kbip:2,3"]).stdout)
    assert vals["rank"] == "2" and vals["equality"] == "1" and vals["complete_bipartite"] == "1"
    vals = kv(run(["roles", "--gen", "cycle:6", "--set", "0,1,3,4"]).stdout)
    assert [vals[f"role[{v}]"] for v in range(6)] == ["MAIN", "MAIN", "BACKUP", "MAIN", "MAIN", "BACKUP"]


def test_generate_roundtrip():
    assert run(["generate", "--gen", "cycle:5"]).stdout == format_edge_list(cycle(5))


@pytest.mark.parametrize(
    "argv, code",
    [
        (["nope"], 2),
        (["compute"], 2),
        (["compute", "--file", "/nonexistent/file"], 2),
        (["compute", "--gen", "cycle:x"], 2),
        (["verify", "--gen", "cycle:5"], 2),
        (["compute", "--gen", "cycle:5", "--file", "x"], 2),
        (["compute", "--gen", "path:30"], 3),
        (["compute", "--gen", "path:20", "--cap", "10"], 3),
    ],
)
def test_exit_codes(argv, code):
    assert run(argv).code == code


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "esdom", "compute", "--gen", "path:4", "--quiet"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[4] == "2"
