import json
import subprocess
import sys

import pytest

from hzcolor.cli import EXIT_BUDGET, EXIT_ERROR, EXIT_FAILS, EXIT_OK, EXIT_PARSE, main
from hzcolor.config import RunConfig
from hzcolor.io import parse_coloring, parse_edge_list


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fx(repo):
    return lambda name: repo / "fixtures" / name


def test_chi_on_p_star(capsys, fx):
    assert run(capsys, "chi", fx("Pstar.edges")) == (EXIT_OK, "4\n", "")


def test_chi_budget_exhaustion_prints_interval(capsys, fx):
    code, out, err = run(capsys, "chi", fx("K7-2K2-K3.edges"), "--budget", 5)
    assert code == EXIT_BUDGET
    assert out.strip() == "[5,6]"
    assert json.loads(err)["interval"] == [5, 6]


def test_color_output_is_a_proper_coloring(capsys, fx):
    code, out, _ = run(capsys, "color", fx("Petersen.edges"))
    g = parse_edge_list(fx("Petersen.edges").read_text())
    assert code == EXIT_OK
    parse_coloring(out, g, g.max_degree + 1).check()


def test_classify_emits_one_record_per_graph(capsys, fx, repo):
    code, out, _ = run(capsys, "classify", fx("K4.edges"), repo / "data" / "overfull_hz.g6", "--no-criticality")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == EXIT_OK
    assert recs[0]["class"] == 1 and recs[0]["graph"].endswith("K4.edges")
    assert len(recs) == 5
    assert all(r["class"] == 2 and r["overfull"] and r["is_hz"] for r in recs[1:])


def test_malformed_input_exits_with_parse_code(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 2\n0 1\n1 1\n")
    code, _, err = run(capsys, "chi", bad)
    assert code == EXIT_PARSE
    assert json.loads(err)["line"] == 3


def test_missing_file_exits_with_error_code(capsys, tmp_path):
    code, _, err = run(capsys, "chi", tmp_path / "absent.edges")
    assert code == EXIT_ERROR and "error" in json.loads(err)


def test_fan_reports_structure_for_p_star(capsys, fx):
    code, out, _ = run(capsys, "fan", fx("Pstar.edges"), "--edge", "3,4")
    rec = json.loads(out)
    assert code == EXIT_OK
    assert rec["center"] == 3 and rec["leaves"][0] == 4
    assert set(rec) >= {"spoke_colors", "missing", "inducing", "typical", "coloring"}
    assert rec["spoke_colors"][0] is None


def test_fan_rejects_non_edge(capsys, fx):
    code, _, _ = run(capsys, "fan", fx("C5.edges"), "--edge", "0,2")
    assert code == EXIT_PARSE


def test_replay_identity_and_swap_twice(capsys, fx, tmp_path):
    g = parse_edge_list(fx("C5.edges").read_text())
    col = tmp_path / "c.txt"
    col.write_text("".join(f"{u} {v} {c}\n" for (u, v), c in zip(g.edge_list, ("-", 1, 1, 2, 3))))
    script = tmp_path / "s.txt"
    script.write_text("")
    code, out, _ = run(capsys, "replay", fx("C5.edges"), col, script, "-k", 3)
    assert code == EXIT_OK and out == col.read_text()
    script.write_text("swap 0 3 1\nswap 0 3 1\n")
    code, out, _ = run(capsys, "replay", fx("C5.edges"), col, script, "-k", 3)
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0].startswith("step 0: swap 0 3 1") and lines[1].startswith("step 1: swap 0 3 1")
    assert "\n".join(lines[2:]) + "\n" == col.read_text()


def test_replay_bad_step_reports_index(capsys, fx, tmp_path):
    g = parse_edge_list(fx("C5.edges").read_text())
    col = tmp_path / "c.txt"
    col.write_text("".join(f"{u} {v} {c}\n" for (u, v), c in zip(g.edge_list, ("-", 1, 1, 2, 3))))
    script = tmp_path / "s.txt"
    script.write_text("swap 0 3 1\nswap 9 1 2\n")
    code, _, err = run(capsys, "replay", fx("C5.edges"), col, script, "-k", 3)
    assert code == EXIT_ERROR and json.loads(err)["step"] == 1


def test_verify_clean_corpus_exits_zero(capsys, fx, tmp_path):
    out_file = tmp_path / "rep.jsonl"
    code, out, _ = run(capsys, "verify", fx("Pstar.edges"), fx("C5.edges"), "--checks", "fan,crossfan", "--budget", 40, "--out", out_file)
    assert code == EXIT_OK
    summary = json.loads(out)["summary"]
    assert summary and all(v.get("fail", 0) == 0 for v in summary.values())
    assert out_file.read_text().count("\n") > 2


def test_verify_rejects_unknown_group(capsys, fx):
    code, _, err = run(capsys, "verify", fx("C5.edges"), "--checks", "nope")
    assert code == EXIT_ERROR and "unknown" in json.loads(err)["message"]


def test_verify_with_fails_exits_four(capsys, monkeypatch, fx):
    import hzcolor.cli as cli
    from hzcolor.verifier import CorpusEntry, run_campaign

    def planted(corpus, *a, **kw):
        return run_campaign([CorpusEntry(name, g, class2=True) for name, g in corpus], *a, **kw)

    monkeypatch.setattr(cli, "run_campaign", planted)
    code, _, _ = run(capsys, "verify", fx("K4.edges"), "--checks", "fan", "--budget", 40)
    assert code == EXIT_FAILS


@pytest.mark.parametrize(
    "kw", [{"seed": -1}, {"seed": 2**64}, {"bound": 0}, {"budget": 0}, {"workers": 0}, {"checks": ("x",)}]
)
def test_run_config_validation(kw):
    with pytest.raises(ValueError):
        RunConfig(**kw)


def test_console_entry_point(fx):
    proc = subprocess.run([sys.executable, "-m", "hzcolor.cli", "chi", str(fx("C5.edges"))], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"
