import json
import subprocess
import sys

import pytest

from smallquot import cli
from smallquot.reports import CheckReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table(tsv):
    lines = tsv.splitlines()
    cols = lines[4].split("\t")
    return [dict(zip(cols, ln.split("\t"))) for ln in lines[5:]]


def test_classify_s6_classes(capsys):
    code, out, err = run(capsys, "classify-homs", "--n", "6", "--target", "S6",
                         "--classes", "--non-cyclic")
    assert code == 0
    rows = table(out)
    assert len(rows) == 2
    assert {r["class_size"] for r in rows} == {"720"}
    assert "running classify-homs" in err and "finished: pass" in err


def test_classify_raw_json(capsys):
    code, out, _ = run(capsys, "classify-homs", "--n", "3", "--target", "S3",
                       "--non-cyclic", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["extra"]["count"] == 6
    assert data["params"]["mode"] == "raw"


def test_sp_info_g3(capsys):
    code, out, _ = run(capsys, "sp-info", "--g", "3")
    assert code == 0
    (row,) = table(out)
    assert (row["order"], row["transvections"], row["pairs"]) == ("1451520", "63", "2016")


@pytest.mark.parametrize("argv", [
    ("base-cases",),
    ("verify-iso", "--g", "2"),
    ("verify-lemma-a", "--n", "5", "--target", "S5"),
    ("verify-lemma-a", "--n", "4", "--target", "S4"),
    ("simplicity", "--group", "S5"),
    ("relation-suite", "--n", "4"),
    ("mcg-orbits", "--g", "2"),
    ("lattice", "--n", "5"),
    ("catalog-run", "--n", "5"),
])
def test_passing_subcommands(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[2] == "verdict\tpass"


def test_catalog_file_target(capsys, tmp_path):
    path = tmp_path / "cat.jsonl"
    path.write_text('{"name":"A5","degree":5,"generators":["(1 2 3)","(3 4 5)"]}\n'
                    '{"name":"S5","degree":5,"generators":["(1 2)","(1 2 3 4 5)"]}\n')
    code, out, _ = run(capsys, "catalog-run", "--n", "5", "--catalog", str(path))
    assert code == 0
    assert [r["non_cyclic_classes"] for r in table(out)] == ["0", "1"]
    code, out, _ = run(capsys, "classify-homs", "--n", "5", "--target", f"{path}:S5",
                       "--classes", "--non-cyclic")
    assert code == 0 and len(table(out)) == 1
    # two entries and no name is ambiguous
    code, _, err = run(capsys, "classify-homs", "--n", "5", "--target", str(path))
    assert code == 2 and "entries" in err
    code, _, err = run(capsys, "classify-homs", "--n", "5", "--target", f"{path}:Q8")
    assert code == 2 and "Q8" in err


def test_malformed_catalog_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"name":"bad","degree":3,"generators":[[1,1,2]]}\n')
    code, _, err = run(capsys, "catalog-run", "--n", "5", "--catalog", str(path))
    assert code == 2 and "line 1" in err and "bad" in err


def test_missing_catalog_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "catalog-run", "--n", "5", "--catalog", str(tmp_path / "nope"))
    assert code == 2


@pytest.mark.parametrize("argv", [
    (),
    ("frobnicate",),
    ("classify-homs", "--n", "8", "--target", "S3"),
    ("classify-homs", "--n", "x", "--target", "S3"),
    ("classify-homs", "--n", "3"),
    ("sp-info", "--g", "4"),
    ("verify-iso", "--g", "3"),
    ("simplicity", "--group", "A7"),
    ("sp-info", "--g", "1", "--format", "xml"),
    ("sp-info", "--g", "1", "--workers", "0"),
    ("base-cases", "--bogus"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_unknown_target_exits_2(capsys):
    code, out, err = run(capsys, "classify-homs", "--n", "3", "--target", "S99")
    assert code == 2 and out == ""
    assert "unknown target" in err


def test_too_small_ceiling_exits_2(capsys):
    code, _, err = run(capsys, "sp-info", "--g", "2", "--ceiling", "100")
    assert code == 2 and "ceiling" in err
    # the override does not leak into later runs
    code, _, _ = run(capsys, "sp-info", "--g", "2")
    assert code == 0


def test_failing_report_exits_1(capsys, monkeypatch):
    failing = CheckReport("demo", {}, "fail", [{"why": "forced"}])
    monkeypatch.setitem(cli.COMMANDS, "base-cases", lambda a: failing)
    code, out, _ = run(capsys, "base-cases")
    assert code == 1
    assert "forced" in out


def test_exempt_report_exits_0(capsys, monkeypatch):
    exempt = CheckReport("demo", {}, "exempt", [{"why": "n = 4"}])
    monkeypatch.setitem(cli.COMMANDS, "base-cases", lambda a: exempt)
    assert run(capsys, "base-cases")[0] == 0


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify-iso", "--g", "1", "--format", "json", "--output", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["verdict"] == "pass"


@pytest.mark.parametrize("argv", [
    ("classify-homs", "--n", "5", "--target", "S5", "--classes"),
    ("simplicity", "--group", "A5"),
    ("verify-lemma-a", "--n", "6", "--target", "S6"),
])
def test_workers_do_not_change_output(capsys, argv):
    outs = {run(capsys, *argv, "--workers", w, "--format", f)[1]
            for w in ("1", "3") for f in ("json",)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "smallquot", "verify-iso", "--g", "1"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert proc.stdout.startswith("check\tverify-iso\n")
    assert "finished" in proc.stderr
