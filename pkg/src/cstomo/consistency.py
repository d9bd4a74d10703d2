"""Support-recovery consistency conditions on measurement ensembles.

Two Gram-matrix conditions are checked on the column-partitioned
normalized Gram of the measurement matrix: the plain irrepresentable
condition (IC), tied to LASSO support consistency, and its elastic
variant (EIC), whose ridge term keeps it defined even when the support
block is singular.  The probability estimator reproduces the
rate-versus-measurements experiment: many independent walk ensembles
per measurement count, reporting how often each condition holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import NonFiniteInputError, SingularC11Error
from .graph import Graph, edge_betweenness, sample_walks
from .sampling import build_matrix, gen_ground_truth
from .seeding import rng_for, Stream

# Relative eigenvalue cutoff below which the support Gram block is
# treated as singular.
_SINGULAR_RTOL = 1e-12


@dataclass(frozen=True)
class PartitionedGram:
    """Normalized Gram blocks with support columns first.

    ``C11`` is the k x k support block, ``C21`` the (N-k) x k
    cross block; ``m`` is the number of measurement rows used for
    normalization.  ``C12``/``C22`` are optional completeness fields.
    """

    C11: np.ndarray
    C21: np.ndarray
    support: tuple[int, ...]
    m: int
    C12: np.ndarray | None = None
    C22: np.ndarray | None = None


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    lhs: float


def partition_gram(
    A: np.ndarray, support: Sequence[int], full: bool = False
) -> PartitionedGram:
    """Partition ``(1/M) A^T A`` around the given support columns."""
    A = np.asarray(A, dtype=np.float64)
    m, n = A.shape
    if m < 1:
        raise ValueError("need at least one measurement row")
    sup = tuple(int(j) for j in support)
    if len(set(sup)) != len(sup):
        raise ValueError("support indices must be distinct")
    if any(j < 0 or j >= n for j in sup):
        raise ValueError(f"support indices out of range [0, {n})")
    rest = [j for j in range(n) if j not in set(sup)]
    A1 = A[:, list(sup)]
    A2 = A[:, rest]
    C11 = (A1.T @ A1) / m
    C21 = (A2.T @ A1) / m
    C12 = (A1.T @ A2) / m if full else None
    C22 = (A2.T @ A2) / m if full else None
    return PartitionedGram(C11=C11, C21=C21, support=sup, m=m, C12=C12, C22=C22)


def _solve_support_block(C11: np.ndarray, v: np.ndarray) -> np.ndarray:
    eigs = np.linalg.eigvalsh(C11)
    if eigs[-1] <= 0 or eigs[0] <= _SINGULAR_RTOL * max(1.0, eigs[-1]):
        raise SingularC11Error(
            f"support Gram block is singular (eigenvalues in [{eigs[0]:.3e}, "
            f"{eigs[-1]:.3e}])"
        )
    return np.linalg.solve(C11, v)


def _inf_norm(w: np.ndarray) -> float:
    return float(np.abs(w).max()) if w.size else 0.0


def check_ic(
    pg: PartitionedGram, x1_signs: np.ndarray, eta: float
) -> CheckResult:
    """Irrepresentable condition:
    ``||C21 C11^-1 sign(x1)||_inf <= 1 - eta``.

    Raises :class:`SingularC11Error` when the support block cannot be
    inverted; probability estimates count that as not satisfied.
    """
    if eta <= 0:
        raise ValueError(f"eta must be > 0, got {eta}")
    signs = np.asarray(x1_signs, dtype=np.float64)
    if signs.shape != (pg.C11.shape[0],):
        raise ValueError(f"expected {pg.C11.shape[0]} signs, got {signs.shape}")
    w = _solve_support_block(pg.C11, signs)
    lhs = _inf_norm(pg.C21 @ w)
    return CheckResult(holds=lhs <= 1.0 - eta, lhs=lhs)


def check_eic(
    pg: PartitionedGram,
    x1: np.ndarray,
    lam: float,
    alpha: float,
    m: int,
    eta: float,
) -> CheckResult:
    """Elastic irrepresentable condition:
    ``||C21 (C11 + (alpha/M) I)^-1 (sign(x1) + (2 alpha/lam) x1)||_inf
    <= 1 - eta``.

    With ``alpha = 0`` this reduces exactly to the plain condition,
    including its singularity behavior.
    """
    if eta <= 0:
        raise ValueError(f"eta must be > 0, got {eta}")
    if lam <= 0:
        raise ValueError(f"lam must be > 0, got {lam}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    x1 = np.asarray(x1, dtype=np.float64)
    if not np.isfinite(x1).all():
        raise NonFiniteInputError("x1 must be finite")
    k = pg.C11.shape[0]
    if x1.shape != (k,):
        raise ValueError(f"expected {k} support values, got {x1.shape}")

    v = np.sign(x1) + (2.0 * alpha / lam) * x1
    if alpha == 0.0:
        w = _solve_support_block(pg.C11, v)
    else:
        ridge = pg.C11 + (alpha / m) * np.eye(k)
        w = np.linalg.solve(ridge, v)
    lhs = _inf_norm(pg.C21 @ w)
    return CheckResult(holds=lhs <= 1.0 - eta, lhs=lhs)


def default_lambda_rule(m: int) -> float:
    """Regularizer schedule for the probability experiment:
    ``sqrt(M) * ln(M)`` (natural log)."""
    return math.sqrt(m) * math.log(m)


@dataclass(frozen=True)
class ConsistencyRates:
    m: int
    ic_rate: float
    eic_rate: float
    runs: int


def consistency_probability(
    g: Graph,
    k: int,
    m_grid: Sequence[int],
    runs: int,
    alpha: float,
    eta: float,
    seed: int,
    corr_power: float = 2.0,
    D: float = 1.0,
    steps: int = 15,
    lambda_rule: Callable[[int], float] = default_lambda_rule,
) -> list[ConsistencyRates]:
    """Estimate how often IC and EIC hold per measurement count.

    Each trial samples fresh walks and a fresh betweenness-correlated
    support of size ``k``; a singular support block counts the plain
    condition as not satisfied for that trial.
    """
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    bc = edge_betweenness(g)
    out: list[ConsistencyRates] = []
    for m in m_grid:
        lam = lambda_rule(m)
        ic_hits = 0
        eic_hits = 0
        for run in range(runs):
            truth = gen_ground_truth(
                bc, k, D, corr_power, rng_for(seed, Stream.TRUTH, k, run, m)
            )
            walks = sample_walks(g, m, steps, rng_for(seed, Stream.WALKS, m, k, run))
            A = build_matrix(walks, g.edge_count)
            support = tuple(sorted(truth.support))
            pg = partition_gram(A, support)
            x1 = truth.x[list(support)]
            try:
                if check_ic(pg, np.sign(x1), eta).holds:
                    ic_hits += 1
            except SingularC11Error:
                pass
            try:
                if check_eic(pg, x1, lam, alpha, m, eta).holds:
                    eic_hits += 1
            except SingularC11Error:
                pass
        out.append(
            ConsistencyRates(
                m=int(m), ic_rate=ic_hits / runs, eic_rate=eic_hits / runs, runs=runs
            )
        )
    return out
