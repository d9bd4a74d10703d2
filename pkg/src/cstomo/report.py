"""CSV emission for sweep results.

One summary file per sweep, plus a sibling ``*_runs.csv`` with the raw
per-run scores so error bars can be re-aggregated differently.  Floats
are written with 12 significant digits; identical results produce
byte-identical files.
"""

from __future__ import annotations

import os

from .consistency import ConsistencyRates
from .harness import MinWalksResult, SweepResult
from .solvers import RecoveryResult


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def runs_path(out_path: str) -> str:
    stem, ext = os.path.splitext(out_path)
    return f"{stem}_runs{ext or '.csv'}"


def write_sweep_csv(result: SweepResult, out_path: str) -> None:
    axis = result.axis_name
    lines = [f"{axis}_percent,{axis},method,mean_f,stderr_f,runs"]
    for p in result.points:
        lines.append(
            f"{_fmt(p.axis_pct)},{p.axis_value},{p.method},"
            f"{_fmt(p.mean_f)},{_fmt(p.stderr_f)},{p.runs}"
        )
    _write_lines(out_path, lines)

    raw_lines = [f"{axis}_percent,{axis},method,run,f"]
    for r in result.raw:
        raw_lines.append(
            f"{_fmt(r.axis_pct)},{r.axis_value},{r.method},{r.run},{_fmt(r.f)}"
        )
    _write_lines(runs_path(out_path), raw_lines)


def write_min_walks_csv(result: MinWalksResult, out_path: str) -> None:
    lines = ["k_percent,k,method,min_m_percent,min_m"]
    for p in result.points:
        if p.min_m is None:
            lines.append(f"{_fmt(p.k_pct)},{p.k},{p.method},NA,NA")
        else:
            lines.append(
                f"{_fmt(p.k_pct)},{p.k},{p.method},{_fmt(p.min_m_pct)},{p.min_m}"
            )
    _write_lines(out_path, lines)

    raw_lines = ["k_percent,k,m_percent,m,method,run,f"]
    for r in result.raw:
        raw_lines.append(
            f"{_fmt(r.k_pct)},{r.k},{_fmt(r.m_pct)},{r.m},"
            f"{r.method},{r.run},{_fmt(r.f)}"
        )
    _write_lines(runs_path(out_path), raw_lines)


def write_consistency_csv(rates: list[ConsistencyRates], out_path: str) -> None:
    lines = ["M,ic_rate,eic_rate,runs"]
    for r in rates:
        lines.append(f"{r.m},{_fmt(r.ic_rate)},{_fmt(r.eic_rate)},{r.runs}")
    _write_lines(out_path, lines)


def write_solve_csv(result: RecoveryResult, out_path: str) -> None:
    lines = ["edge,x_hat,congested"]
    for j, v in enumerate(result.x_hat):
        flag = 1 if j in result.congested else 0
        lines.append(f"{j},{_fmt(float(v))},{flag}")
    _write_lines(out_path, lines)


def _write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")
