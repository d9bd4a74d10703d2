"""Command-line entry point.

Subcommands mirror the evaluation protocols: ``fscore-walks``,
``fscore-sparsity``, ``min-walks``, ``consistency``, and a one-shot
``solve`` on serialized inputs.  Every subcommand takes ``--config``,
``--seed``, and ``--out``; identical invocations produce byte-identical
CSV output.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import report
from .config import ExperimentConfig, load_config
from .errors import CstomoError
from .harness import (
    run_consistency_figure,
    run_fscore_vs_sparsity,
    run_fscore_vs_walks,
    run_min_walks_for_f50,
)
from .solvers import solve_cscd
from .textio import load_matrix, load_vector

SWEEPS = {
    "fscore-walks": (run_fscore_vs_walks, report.write_sweep_csv),
    "fscore-sparsity": (run_fscore_vs_sparsity, report.write_sweep_csv),
    "min-walks": (run_min_walks_for_f50, report.write_min_walks_csv),
    "consistency": (run_consistency_figure, report.write_consistency_csv),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cstomo",
        description="Congested-link detection experiments on synthetic topologies",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("fscore-walks", "F-score sweep over the number of random walks"),
        ("fscore-sparsity", "F-score sweep over the congested-set size"),
        ("min-walks", "least walks needed to reach F-score 0.5, per sparsity"),
        ("consistency", "IC/EIC satisfaction rates over the walk grid"),
        ("solve", "one-shot recovery from serialized A, y, and prior files"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="key = value config file")
        p.add_argument("--seed", required=True, type=int, help="master seed (u64)")
        p.add_argument("--out", required=True, help="output CSV path")
    return parser


def _run_solve(cfg: ExperimentConfig, out: str) -> None:
    if not cfg.a_path or not cfg.y_path:
        raise CstomoError("solve requires a_path and y_path in the config")
    A = load_matrix(cfg.a_path)
    y = load_vector(cfg.y_path)
    if cfg.prior_path:
        s = load_vector(cfg.prior_path)
    else:
        s = np.zeros(A.shape[1])
    result = solve_cscd(A, y, s, cfg.solver_config(), d_max=cfg.d_max)
    report.write_solve_csv(result, out)
    status = "converged" if result.converged else "max_iter reached"
    print(
        f"solve: objective {result.objective_value:.12g} after "
        f"{result.iterations} sweeps ({status}); "
        f"{len(result.congested)} congested links -> {out}"
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.command == "solve":
            _run_solve(cfg, args.out)
        else:
            runner, writer = SWEEPS[args.command]
            result = runner(cfg, args.seed)
            writer(result, args.out)
            print(f"{args.command}: wrote {args.out}")
    except (CstomoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
