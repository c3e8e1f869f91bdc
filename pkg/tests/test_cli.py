import json
import subprocess
import sys

import pytest

from conftest import GOLDENS, read_panels
from supersquares.cli import main
from supersquares.io import load_squares
from supersquares.squares import render


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--p", "2", "--n", "2")
    assert code == 0 and "K = {0, 1}" in out and "x^2 + x + 1" in out
    code, out, _ = run(capsys, "field", "--p", "2", "--n", "3")
    assert code == 0 and "|K| = 4" in out
    code, _, err = run(capsys, "field", "--p", "4", "--n", "1")
    assert code == 2 and "p must be prime" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--type", "typeIII", "--d", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "construct", "--type", "typeI", "--d", "6")
    assert code == 2
    code, _, _ = run(capsys, "construct", "--type", "typeI", "--d", "4", "--v1", "1,q")
    assert code == 2


def test_construct_ascii(capsys):
    code, out, _ = run(capsys, "construct", "--type", "typeI", "--d", "4",
                       "--v1", "1,m^2", "--v2", "0,m", "--format", "ascii")
    assert code == 0
    panels = [p.split("\n", 1) for p in out.strip().split("\n\n")]
    assert len(panels) == 5
    assert [h.split(")")[0] for h, _ in panels] == list("abcde")
    assert all("supersquare, extraordinary" in h for h, _ in panels)


def test_construct_json_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--type", "typeII", "--d", "4",
                       "--v1", "1,m^2", "--v2", "1,m", "--format", "json",
                       "--output-dir", str(tmp_path))
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 5 and all(d["schema"] == 1 for d in docs)
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == 5
    code, out, _ = run(capsys, "check", *map(str, files))
    assert code == 0
    code, out, _ = run(capsys, "classify", str(files[4]))
    assert code == 0 and out.startswith("general, supersquare, extraordinary")


def test_construct_data_errors(capsys):
    code, _, err = run(capsys, "construct", "--type", "typeII", "--d", "4",
                       "--v1", "1,m^2", "--v2", "0,m")
    assert code == 3 and "determinant must equal 1" in err
    code, _, err = run(capsys, "construct", "--type", "typeI", "--d", "4",
                       "--v1", "1,1", "--v2", "m,m")
    assert code == 3 and "not a basis" in err


def test_check(capsys, tmp_path):
    fig4 = str(GOLDENS / "fig4.json")
    assert run(capsys, "check", fig4)[0] == 0
    code, out, _ = run(capsys, "check", str(GOLDENS / "fig2.json"), str(GOLDENS / "fig2.json"))
    assert code == 1 and "label pair" in out
    truncated = tmp_path / "t.json"
    truncated.write_text((GOLDENS / "fig2.json").read_text()[:40])
    assert run(capsys, "check", str(truncated), fig4)[0] == 3
    assert run(capsys, "check", str(GOLDENS / "fig2.json"))[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", str(GOLDENS / "fig1.json"))
    assert code == 0 and out.strip() == "row-latin"
    code, out, _ = run(capsys, "classify", str(GOLDENS / "fig2.json"))
    assert out.splitlines()[0] == "latin, supersquare, extraordinary"
    code, out, _ = run(capsys, "classify", str(GOLDENS / "fig6.json"))
    kinds = [line for line in out.splitlines() if not line.startswith(" ")]
    assert kinds[4] == "general, supersquare, extraordinary"


def test_render(capsys):
    code, out, _ = run(capsys, "render", str(GOLDENS / "fig6.json"), "--transpose")
    assert code == 0 and out.strip().split("\n\n") == read_panels("fig6_drawn.txt")
    code, out, _ = run(capsys, "render", str(GOLDENS / "fig2.json"), "--origin", "top")
    (S,) = load_squares(GOLDENS / "fig2.json")
    assert out.strip() == render(S, origin="top")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "extraordinary", "--d", "4")
    assert code == 0 and json.loads(out)["counts"]["extraordinary"] == 15
    code, out, _ = run(capsys, "enumerate", "complete-sets", "--d", "4", "--extraordinary", "--no-timing")
    report = json.loads(out)
    assert report["counts"]["complete_sets"] == 6
    assert report["counts"]["kinds"] == {"TypeI": 1, "TypeII": 5}
    code, out2, _ = run(capsys, "enumerate", "complete-sets", "--d", "4", "--extraordinary",
                        "--no-timing", "--jobs", "2")
    assert out2 == out
    code, out, _ = run(capsys, "enumerate", "subgroups", "--d", "4", "--list", "--no-timing")
    assert len(json.loads(out)["items"]) == 35
    assert run(capsys, "enumerate", "subgroups", "--d", "32")[0] == 2
    assert run(capsys, "enumerate", "complete-sets", "--d", "16")[0] == 2


def test_enumerate_d8_digest_is_stable(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run(capsys, "enumerate", "complete-sets", "--d", "8", "--extraordinary",
                           "--count-only", "--jobs", jobs)
        assert code == 0
        outs.append(json.loads(out))
    assert outs[0]["counts"]["complete_sets"] == 960
    assert outs[0]["digest"] == outs[1]["digest"]


def test_jobs_default_from_env(monkeypatch):
    from supersquares import cli
    monkeypatch.setenv("SSQ_JOBS", "3")
    args = cli.build_parser().parse_args(["enumerate", "subgroups", "--d", "4"])
    assert args.jobs == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "4.13", "--d", "4")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "verify", "--theorem", "3.5b", "--d", "3")
    assert code == 0 and "max = 4 = d+1" in out
    assert run(capsys, "verify", "--theorem", "4.8", "--d", "3")[0] == 2
    assert run(capsys, "verify", "--theorem", "4.3", "--d", "4")[0] == 2
    for thm in ("3.3", "4.7", "4.8"):
        assert run(capsys, "verify", "--theorem", thm, "--d", "4")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supersquares", "field", "--p", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "K = {0}" in proc.stdout
