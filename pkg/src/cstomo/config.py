"""Experiment configuration: a flat key = value text format.

Every field of :class:`ExperimentConfig` can be set from the file;
unknown keys are rejected so typos fail loudly.  Lines starting with
``#`` and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError
from .solvers import PRESETS, SolverConfig, preset

TOPOLOGIES = ("scale-free", "random-regular", "grid", "edgelist")

_DEFAULT_M_PERCENTS = (10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0)
_DEFAULT_SPARSITY_PERCENTS = (5.0, 10.0, 15.0, 20.0, 25.0, 30.0)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a sweep needs: topology, measurement design, ground
    truth generation, solver settings, and consistency-check knobs."""

    # Topology
    topology: str = "scale-free"
    edgelist_path: str = ""
    nodes: int = 94
    attach: int = 3
    degree: int = 3
    grid_rows: int = 12
    grid_cols: int = 12
    # Measurement design
    walk_steps: int = 15
    m_percents: tuple[float, ...] = _DEFAULT_M_PERCENTS
    sparsity_percents: tuple[float, ...] = _DEFAULT_SPARSITY_PERCENTS
    walks_k_percent: float = 10.0
    sparsity_m_percent: float = 50.0
    runs: int = 30
    # Ground truth
    d_max: float = 1.0
    sigma: float = -1.0  # negative means "default to 0.01 * d_max"
    corr_power: float = 2.0
    # Solver
    preset: str = "light"
    lam: float = -1.0  # negative means "use the preset value"
    gamma: float = -1.0
    alpha: float = -1.0
    max_iter: int = 2000
    tol: float = 1e-7
    theta: float = 0.5
    # Consistency experiment
    eta: float = 0.01
    consistency_k: int = 8
    consistency_alpha: float = 1e-5
    # One-shot solve inputs
    a_path: str = ""
    y_path: str = ""
    prior_path: str = ""

    def __post_init__(self):
        if self.topology not in TOPOLOGIES:
            raise ConfigError(
                f"topology must be one of {TOPOLOGIES}, got {self.topology!r}"
            )
        if self.preset not in PRESETS:
            raise ConfigError(
                f"preset must be one of {sorted(PRESETS)}, got {self.preset!r}"
            )
        if self.runs < 1:
            raise ConfigError(f"runs must be >= 1, got {self.runs}")
        if not self.m_percents or not self.sparsity_percents:
            raise ConfigError("percentage grids must be non-empty")
        for pct in (
            *self.m_percents,
            *self.sparsity_percents,
            self.walks_k_percent,
            self.sparsity_m_percent,
        ):
            if not (0.0 < pct <= 100.0):
                raise ConfigError(f"percentages must be in (0, 100], got {pct}")
        if self.d_max <= 0:
            raise ConfigError(f"d_max must be positive, got {self.d_max}")
        if self.walk_steps < 1:
            raise ConfigError(f"walk_steps must be >= 1, got {self.walk_steps}")
        if not (0.0 < self.theta < 1.0):
            raise ConfigError(f"theta must be in (0, 1), got {self.theta}")
        if self.eta <= 0:
            raise ConfigError(f"eta must be > 0, got {self.eta}")
        if self.consistency_k < 1:
            raise ConfigError(f"consistency_k must be >= 1, got {self.consistency_k}")

    @property
    def effective_sigma(self) -> float:
        return self.sigma if self.sigma >= 0 else 0.01 * self.d_max

    def solver_config(self) -> SolverConfig:
        overrides = {"max_iter": self.max_iter, "tol": self.tol, "theta": self.theta}
        if self.lam >= 0:
            overrides["lam"] = self.lam
        if self.gamma >= 0:
            overrides["gamma"] = self.gamma
        if self.alpha >= 0:
            overrides["alpha"] = self.alpha
        return preset(self.preset, **overrides)


def _parse_percent_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"bad percentage list {text!r}") from exc


_PARSERS = {
    "topology": str,
    "edgelist_path": str,
    "nodes": int,
    "attach": int,
    "degree": int,
    "grid_rows": int,
    "grid_cols": int,
    "walk_steps": int,
    "m_percents": _parse_percent_list,
    "sparsity_percents": _parse_percent_list,
    "walks_k_percent": float,
    "sparsity_m_percent": float,
    "runs": int,
    "d_max": float,
    "sigma": float,
    "corr_power": float,
    "preset": str,
    "lam": float,
    "gamma": float,
    "alpha": float,
    "max_iter": int,
    "tol": float,
    "theta": float,
    "eta": float,
    "consistency_k": int,
    "consistency_alpha": float,
    "a_path": str,
    "y_path": str,
    "prior_path": str,
}


def parse_config(text: str) -> ExperimentConfig:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {stripped!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key not in _PARSERS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = _PARSERS[key](raw)
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {raw!r}") from exc
    return ExperimentConfig(**values)


def load_config(path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
