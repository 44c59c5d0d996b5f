"""Command-line entry point and the verification report."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from .cevian import AdmissibilityError, CevianParams
from .exact_arith import Q, rat_str
from .morley_core import (
    FULL_DEGREE, PipelineConfig, PipelineError, StepResult, constants_table, run_pipeline,
    step_ids,
)
from .numeric_oracle import equilateral_scan

SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    degree: int = FULL_DEGREE
    precision_bits: int = 128
    steps: Sequence[str] | None = None
    format: str = "text"
    output: str | None = None

    def pipeline(self) -> PipelineConfig:
        return PipelineConfig(degree=self.degree, precision_bits=self.precision_bits,
                              steps=None if self.steps is None else list(self.steps))

    def to_dict(self) -> dict:
        return {"degree": self.degree, "precision_bits": self.precision_bits,
                "steps": None if self.steps is None else list(self.steps),
                "format": self.format}


@dataclass
class Report:
    config: dict
    steps: list                                   # StepResult
    constants: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def verdict(self) -> str:
        return "verified" if all(s.verified for s in self.steps) else "failed"

    @property
    def counts(self) -> tuple:
        return sum(s.verified for s in self.steps), len(self.steps)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "config": dict(self.config),
            "steps": [{k: v for k, v in s.to_dict().items()
                       if k in ("id", "claim", "status", "witness", "anchor", "millis")}
                      for s in self.steps],
            "constants": {k: rat_str(v) for k, v in self.constants.items()},
            "verdict": self.verdict,
            "warnings": list(self.warnings),
        }


def build_report(cfg: RunConfig) -> Report:
    """Run the selected steps; raises PipelineError on an invalid configuration."""
    warnings = []
    if cfg.steps is not None and not cfg.steps:
        warnings.append("no steps selected; verdict is vacuous")
    t0 = time.perf_counter()
    results = run_pipeline(cfg.pipeline()) if (cfg.steps is None or cfg.steps) else []
    for r in results:
        if r.id == "S26" and "61*t5^2+144*t5+111" in r.witness.get("t1 resultant, quadratic factor", ""):
            warnings.append("S26: the t1-eliminated resultant has quadratic factor "
                            "61*t5^2+144*t5+111; a constant term of 11 does not reproduce it")
        if r.id == "S36" and r.witness.get("t1 resultant, factor 11*t3-3") == "multiplicity 2":
            warnings.append("S36: the factor 11*t3-3 of R(p1, p3, t1) has multiplicity 2")
    return Report(cfg.to_dict(), results, constants_table(results), warnings,
                  time.perf_counter() - t0)


def report_from_dict(d: dict) -> Report:
    """Inverse of Report.to_dict for the schema fields."""
    if d.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {d.get('schema')!r}")
    steps = [StepResult(s["id"], s["claim"], s["status"], dict(s["witness"]), s["anchor"],
                        s["millis"]) for s in d["steps"]]
    return Report(dict(d["config"]), steps, {k: Q(v) for k, v in d["constants"].items()},
                  list(d.get("warnings", [])))


def render_report(r: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(r.to_dict(), indent=2, sort_keys=False)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    ok, n = r.counts
    lines = [f"config: degree={r.config['degree']} precision_bits={r.config['precision_bits']}"]
    for s in sorted(r.steps, key=lambda s: s.id):
        lines.append(f"{s.id}  {s.status:<8}  {s.millis:9.1f} ms  {s.claim}")
        if not s.verified:
            for k, v in s.witness.items():
                if v != "ok":
                    lines.append(f"      {k}: {v}")
    if r.constants:
        lines.append("constants:")
        lines.extend(f"  {k} = {rat_str(v)}" for k, v in r.constants.items())
    for w in r.warnings:
        lines.append(f"warning: {w}")
    lines.append(f"verdict: {r.verdict} ({ok}/{n} steps verified)")
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="morley-verify",
                                description="Exact verification of the converse trisector theorem.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the derivation checks or a numeric scan")
    v.add_argument("--degree", type=int, default=FULL_DEGREE, help="series truncation degree")
    v.add_argument("--precision", type=int, default=128, help="interval precision in bits")
    v.add_argument("--steps", default=None,
                   help="comma-separated step ids (e.g. S04,S29); empty selects none")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("-o", "--output", default=None, help="write the report (or scan CSV) here")
    v.add_argument("--scan", action="store_true", help="run the equilaterality scan instead")
    v.add_argument("--grid", type=int, default=50, help="scan resolution")
    v.add_argument("--params", default="1/3,1/3,1/3,1/3,1/3,1/3", help="t1,...,t6 for --scan")
    v.add_argument("--list-steps", action="store_true", help="print step ids and exit")
    return p


def _parse_steps(text: str | None) -> list | None:
    if text is None:
        return None
    return [s.strip().upper() for s in text.split(",") if s.strip()]


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _run_scan(args) -> int:
    params = CevianParams.parse(args.params)
    rep = equilateral_scan(args.grid, params)
    if args.output:
        rep.to_csv(args.output)
    w = rep.worst
    msg = (f"grid {args.grid}x{args.grid}, params {args.params}: max defect {rep.max_defect:.3e}"
           + (f" at alpha={w[0]:.6f}, beta={w[1]:.6f}" if w else "") + "\n")
    if args.format == "json":
        msg = json.dumps({"schema": SCHEMA_VERSION, "grid": args.grid, "params": args.params,
                          "max_defect": rep.max_defect, "cells": len(rep.rows)}) + "\n"
    sys.stdout.write(msg)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """Exit codes: 0 verified, 1 verification failure, 2 usage error."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if args.list_steps:
            sys.stdout.write("\n".join(step_ids()) + "\n")
            return 0
        if args.scan:
            return _run_scan(args)
        cfg = RunConfig(args.degree, args.precision, _parse_steps(args.steps), args.format,
                        args.output)
        report = build_report(cfg)
        _write(render_report(report, cfg.format), cfg.output)
    except (PipelineError, AdmissibilityError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 0 if report.verdict == "verified" else 1


if __name__ == "__main__":
    sys.exit(main())
