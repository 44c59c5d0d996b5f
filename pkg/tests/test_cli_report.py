from __future__ import annotations

import json


from morley_verify.cli_report import (
    RunConfig, build_report, main, render_report, report_from_dict,
)
from morley_verify.morley_core import PipelineConfig, run_pipeline
from morley_verify import displays
from morley_verify.morley_core import flip_one_sign


def test_full_json_run(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--degree", "8", "--format", "json", "-o", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["schema"] == 1 and d["verdict"] == "verified"
    assert len(d["steps"]) == 37 and all(s["status"] == "verified" for s in d["steps"])
    assert set(d["steps"][0]) == {"id", "claim", "status", "witness", "anchor", "millis"}
    assert d["constants"]["S04.K"] == "1/1"
    assert all("/" in v for v in d["constants"].values())


def test_single_step_run(capsys):
    assert main(["verify", "--steps", "S29"]) == 0
    out = capsys.readouterr().out
    assert "S29" in out and "S04" not in out and "verdict: verified" in out


def test_degree_too_low(capsys):
    assert main(["verify", "--degree", "5"]) == 2
    assert "degree" in capsys.readouterr().err


def test_unknown_flag(capsys):
    assert main(["verify", "--bogus"]) == 2


def test_unwritable_path(capsys):
    assert main(["verify", "--steps", "S29", "-o", "/nonexistent-dir/x.json"]) == 2


def test_empty_selection_is_vacuous():
    r = build_report(RunConfig(steps=[]))
    d = r.to_dict()
    assert d["verdict"] == "verified" and d["steps"] == [] and d["warnings"]


def test_failed_step_renders_witness():
    from morley_verify.cli_report import Report
    res = run_pipeline(PipelineConfig(steps=["S08"], overrides={
        "E1": flip_one_sign(displays.poly("E1"))}))
    rep = Report({"degree": 8, "precision_bits": 128, "steps": ["S08"]}, res)
    text = render_report(rep, "text")
    assert "failed" in text and "FAILED: " in text and "verdict: failed" in text
    assert rep.to_dict()["verdict"] == "failed"


def test_failure_exit_code(monkeypatch):
    import morley_verify.cli_report as cli
    real = cli.run_pipeline

    def broken(cfg):
        cfg.overrides = {"E1": flip_one_sign(displays.poly("E1"))}
        return real(cfg)

    monkeypatch.setattr(cli, "run_pipeline", broken)
    assert main(["verify", "--steps", "S08"]) == 1


def test_json_round_trip():
    r = build_report(RunConfig(steps=["S04", "S11", "S26"]))
    d = r.to_dict()
    back = report_from_dict(json.loads(render_report(r, "json")))
    assert back.to_dict() == d


def test_text_sorted_by_id():
    r = build_report(RunConfig(steps=["S11", "S04"]))
    text = render_report(r, "text")
    assert text.index("S04") < text.index("S11")


def test_scan_csv(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    assert main(["verify", "--scan", "--grid", "5", "-o", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "alpha,beta,GI,IJ,JG,defect"
    assert "max defect" in capsys.readouterr().out


def test_scan_inadmissible(capsys):
    assert main(["verify", "--scan", "--params", "0.5,0.5,0.5,0.5,0.5,0.5"]) == 2


def test_list_steps(capsys):
    assert main(["verify", "--list-steps"]) == 0
    assert capsys.readouterr().out.split() == [f"S{i:02d}" for i in range(1, 38)]
