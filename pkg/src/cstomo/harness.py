"""Experiment driver: the figure-style sweeps behind the CLI.

Each sweep is deterministic given (config, master seed): topology is
generated once per seed, per-trial generators come from
:mod:`cstomo.seeding`, and methods are compared on identical instances
(same truth, walks, and noise), which makes the per-point comparison a
paired one.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import ExperimentConfig
from .consistency import ConsistencyRates, consistency_probability
from .errors import ConfigError, SparsityWarning
from .graph import EdgeBetweenness, Graph, edge_betweenness, load_edge_list, sample_walks
from .metrics import score
from .prior import PriorVector, scale_prior
from .sampling import build_matrix, gen_ground_truth, observe
from .seeding import Stream, rng_for, topology_seed
from .solvers import SolverConfig, bc_only_rank, solve_cscd, solve_lasso
from .topology import grid2d, random_regular, scale_free

METHODS = ("cscd", "lasso", "bc")


@dataclass(frozen=True)
class SweepPoint:
    axis_pct: float
    axis_value: int
    method: str
    mean_f: float
    stderr_f: float
    runs: int


@dataclass(frozen=True)
class RawPoint:
    axis_pct: float
    axis_value: int
    method: str
    run: int
    f: float


@dataclass(frozen=True)
class SweepResult:
    axis_name: str
    points: tuple[SweepPoint, ...]
    raw: tuple[RawPoint, ...]


@dataclass(frozen=True)
class MinWalksPoint:
    k_pct: float
    k: int
    method: str
    min_m_pct: float | None
    min_m: int | None


@dataclass(frozen=True)
class MinWalksRaw:
    k_pct: float
    k: int
    m_pct: float
    m: int
    method: str
    run: int
    f: float


@dataclass(frozen=True)
class MinWalksResult:
    points: tuple[MinWalksPoint, ...]
    raw: tuple[MinWalksRaw, ...]


def generate_topology(cfg: ExperimentConfig, master_seed: int) -> Graph:
    """Build the configured topology; generators get a seed derived
    from the master."""
    if cfg.topology == "edgelist":
        if not cfg.edgelist_path:
            raise ConfigError("topology=edgelist requires edgelist_path")
        return load_edge_list(cfg.edgelist_path)
    seed = topology_seed(master_seed)
    if cfg.topology == "scale-free":
        return scale_free(cfg.nodes, cfg.attach, seed)
    if cfg.topology == "random-regular":
        return random_regular(cfg.nodes, cfg.degree, seed)
    return grid2d(cfg.grid_rows, cfg.grid_cols)


def pct_count(pct: float, n: int) -> int:
    """Percentage of n, rounded, at least 1."""
    return max(1, round(pct * n / 100.0))


@dataclass(frozen=True)
class _Bench:
    """Per-seed fixtures shared by every trial of a sweep."""

    g: Graph
    bc: EdgeBetweenness
    prior: PriorVector
    scfg: SolverConfig
    cfg: ExperimentConfig
    seed: int

    @property
    def n_edges(self) -> int:
        return self.g.edge_count


def _make_bench(cfg: ExperimentConfig, master_seed: int) -> _Bench:
    g = generate_topology(cfg, master_seed)
    bc = edge_betweenness(g)
    prior = scale_prior(bc, cfg.d_max)
    return _Bench(
        g=g, bc=bc, prior=prior, scfg=cfg.solver_config(), cfg=cfg, seed=master_seed
    )


def _trial_fscores(bench: _Bench, m: int, k: int, run: int) -> dict[str, float]:
    """One paired trial: same instance scored under all three methods."""
    cfg = bench.cfg
    with warnings.catch_warnings():
        # Sweeping sparsity past the "sparse" regime is intentional here.
        warnings.simplefilter("ignore", SparsityWarning)
        truth = gen_ground_truth(
            # Truth is keyed by (k, run) only: reused across the walk axis.
            bench.bc, k, cfg.d_max, cfg.corr_power,
            rng_for(bench.seed, Stream.TRUTH, k, run),
        )
    walks = sample_walks(
        bench.g, m, cfg.walk_steps, rng_for(bench.seed, Stream.WALKS, m, k, run)
    )
    A = build_matrix(walks, bench.n_edges)
    y = observe(
        A, truth.x, cfg.effective_sigma, rng_for(bench.seed, Stream.NOISE, m, k, run)
    )
    detected = {
        "cscd": solve_cscd(A, y, bench.prior, bench.scfg).congested,
        "lasso": solve_lasso(A, y, bench.scfg, cfg.d_max).congested,
        "bc": bc_only_rank(bench.bc, truth.sparsity),
    }
    return {name: score(det, truth.support).f_score for name, det in detected.items()}


def _aggregate(fs: Sequence[float]) -> tuple[float, float]:
    arr = np.asarray(fs, dtype=np.float64)
    mean = float(arr.mean())
    if len(arr) > 1:
        stderr = float(arr.std(ddof=1) / math.sqrt(len(arr)))
    else:
        stderr = 0.0
    return mean, stderr


def _sweep(
    bench: _Bench,
    axis_name: str,
    grid: Sequence[tuple[float, int]],
    m_of: callable,
    k_of: callable,
) -> SweepResult:
    points: list[SweepPoint] = []
    raw: list[RawPoint] = []
    runs = bench.cfg.runs
    for pct, value in grid:
        per_method: dict[str, list[float]] = {name: [] for name in METHODS}
        for run in range(runs):
            fs = _trial_fscores(bench, m_of(value), k_of(value), run)
            for name in METHODS:
                per_method[name].append(fs[name])
                raw.append(
                    RawPoint(
                        axis_pct=pct, axis_value=value, method=name, run=run,
                        f=fs[name],
                    )
                )
        for name in METHODS:
            mean, stderr = _aggregate(per_method[name])
            points.append(
                SweepPoint(
                    axis_pct=pct, axis_value=value, method=name,
                    mean_f=mean, stderr_f=stderr, runs=runs,
                )
            )
    return SweepResult(axis_name=axis_name, points=tuple(points), raw=tuple(raw))


def run_fscore_vs_walks(cfg: ExperimentConfig, master_seed: int) -> SweepResult:
    """F-score per method as the number of walks grows, at the
    configured fixed sparsity."""
    bench = _make_bench(cfg, master_seed)
    n = bench.n_edges
    k = pct_count(cfg.walks_k_percent, n)
    grid = [(pct, pct_count(pct, n)) for pct in cfg.m_percents]
    return _sweep(bench, "m", grid, m_of=lambda v: v, k_of=lambda v: k)


def run_fscore_vs_sparsity(cfg: ExperimentConfig, master_seed: int) -> SweepResult:
    """F-score per method as the congested-set size grows, at the
    configured fixed walk count."""
    bench = _make_bench(cfg, master_seed)
    n = bench.n_edges
    m = pct_count(cfg.sparsity_m_percent, n)
    grid = [(pct, pct_count(pct, n)) for pct in cfg.sparsity_percents]
    return _sweep(bench, "k", grid, m_of=lambda v: m, k_of=lambda v: v)


def run_min_walks_for_f50(cfg: ExperimentConfig, master_seed: int) -> MinWalksResult:
    """Smallest walk count on the grid whose mean F-score reaches 0.5,
    per sparsity and method; None when no grid point qualifies."""
    bench = _make_bench(cfg, master_seed)
    n = bench.n_edges
    runs = cfg.runs
    points: list[MinWalksPoint] = []
    raw: list[MinWalksRaw] = []
    m_grid = [(pct, pct_count(pct, n)) for pct in cfg.m_percents]
    for k_pct in cfg.sparsity_percents:
        k = pct_count(k_pct, n)
        found: dict[str, tuple[float, int]] = {}
        for m_pct, m in m_grid:
            if len(found) == len(METHODS):
                break
            per_method: dict[str, list[float]] = {name: [] for name in METHODS}
            for run in range(runs):
                fs = _trial_fscores(bench, m, k, run)
                for name in METHODS:
                    per_method[name].append(fs[name])
                    raw.append(
                        MinWalksRaw(
                            k_pct=k_pct, k=k, m_pct=m_pct, m=m, method=name,
                            run=run, f=fs[name],
                        )
                    )
            for name in METHODS:
                if name not in found:
                    mean, _ = _aggregate(per_method[name])
                    if mean >= 0.5:
                        found[name] = (m_pct, m)
        for name in METHODS:
            if name in found:
                m_pct, m = found[name]
                points.append(
                    MinWalksPoint(
                        k_pct=k_pct, k=k, method=name, min_m_pct=m_pct, min_m=m
                    )
                )
            else:
                points.append(
                    MinWalksPoint(
                        k_pct=k_pct, k=k, method=name, min_m_pct=None, min_m=None
                    )
                )
    return MinWalksResult(points=tuple(points), raw=tuple(raw))


def run_consistency_figure(
    cfg: ExperimentConfig, master_seed: int
) -> list[ConsistencyRates]:
    """IC/EIC satisfaction rates over the walk-count grid."""
    g = generate_topology(cfg, master_seed)
    n = g.edge_count
    m_grid = [pct_count(pct, n) for pct in cfg.m_percents]
    return consistency_probability(
        g,
        cfg.consistency_k,
        m_grid,
        cfg.runs,
        cfg.consistency_alpha,
        cfg.eta,
        seed=master_seed,
        corr_power=cfg.corr_power,
        D=cfg.d_max,
        steps=cfg.walk_steps,
    )
