"""Ground-truth delay states, measurement matrices, and observations.

The measurement model is ``y = A x + eps``: row i of the binary matrix
A marks which links walk i traversed, and y_i is that walk's noisy
end-to-end delay.  Ground truth is synthetic: a sparse delay vector
whose support is biased toward high-betweenness links, with the bias
strength exposed as a power so experiments can sweep it from none to
strong.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    EdgeIndexOutOfRangeError,
    InvalidSparsityError,
    SparsityWarning,
)
from .graph import EdgeBetweenness, WalkPath

# Floor added to every sampling weight so zero-betweenness links remain
# reachable at any correlation power.
WEIGHT_FLOOR = 1e-6


@dataclass(frozen=True)
class DelayState:
    """Sparse ground-truth link delays.

    ``x[j]`` is zero off the support and in ``(0, D]`` on it; ``D`` is
    the maximum tolerable delay.
    """

    x: np.ndarray
    support: frozenset[int]
    D: float

    @property
    def sparsity(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class MeasurementSet:
    """Binary walk-membership matrix A, observations y, and the walks
    they came from."""

    A: np.ndarray
    y: np.ndarray
    sigma: float
    walks: tuple[WalkPath, ...]


def build_matrix(walks: list[WalkPath] | tuple[WalkPath, ...], n_edges: int) -> np.ndarray:
    """M x N binary matrix: ``A[i, j] = 1`` iff walk i traversed edge j.

    A walk that crosses an edge several times still contributes a
    single 1.  An empty walk list yields a valid 0 x N matrix.
    """
    A = np.zeros((len(walks), n_edges), dtype=np.float64)
    for i, walk in enumerate(walks):
        for e in walk.edge_set:
            if not (0 <= e < n_edges):
                raise EdgeIndexOutOfRangeError(
                    f"walk {i} references edge {e}, expected [0, {n_edges})"
                )
            A[i, e] = 1.0
    return A


def _weighted_support(weights: np.ndarray, k: int, rng: np.random.Generator) -> list[int]:
    # Successive sampling without replacement: draw proportional to the
    # remaining weights, remove, renormalize.
    remaining = weights.astype(np.float64).copy()
    chosen: list[int] = []
    for _ in range(k):
        total = remaining.sum()
        cuts = np.cumsum(remaining) / total
        j = int(np.searchsorted(cuts, rng.random(), side="right"))
        j = min(j, len(remaining) - 1)
        while remaining[j] == 0.0:  # roundoff pushed us past the last live cut
            j -= 1
        chosen.append(j)
        remaining[j] = 0.0
    return chosen


def gen_ground_truth(
    bc: EdgeBetweenness,
    k: int,
    D: float,
    corr_power: float,
    rng: np.random.Generator,
) -> DelayState:
    """Sample a k-sparse delay state correlated with betweenness.

    Support indices are drawn without replacement with probability
    proportional to ``(b_i / B)**corr_power + 1e-6``; power 0 is
    uniform, larger powers concentrate on high-betweenness links.
    Congested delays are uniform in ``[D/2, D]``.
    """
    n = len(bc.values)
    if k > n:
        raise InvalidSparsityError(f"k={k} exceeds edge count {n}")
    if k < 0:
        raise InvalidSparsityError(f"k must be non-negative, got {k}")
    if D <= 0:
        raise ValueError(f"D must be positive, got {D}")
    if k > n / 10:
        warnings.warn(
            f"k={k} exceeds a tenth of the {n} links; the delay vector "
            "is not very sparse",
            SparsityWarning,
            stacklevel=2,
        )

    if bc.max_value > 0:
        ratio = bc.values / bc.max_value
    else:
        ratio = np.zeros(n)
    weights = ratio**corr_power + WEIGHT_FLOOR

    chosen = _weighted_support(weights, k, rng)
    x = np.zeros(n, dtype=np.float64)
    for j in chosen:
        x[j] = rng.uniform(D / 2.0, D)
    return DelayState(x=x, support=frozenset(chosen), D=float(D))


def observe(
    A: np.ndarray, x: np.ndarray, sigma: float, rng: np.random.Generator
) -> np.ndarray:
    """Observations ``y = A x + eps`` with i.i.d. zero-mean Gaussian
    noise of standard deviation ``sigma`` (``sigma=0`` is exact)."""
    if A.ndim != 2 or x.ndim != 1 or A.shape[1] != x.shape[0]:
        raise DimensionMismatchError(
            f"A is {A.shape}, x is {x.shape}: columns must match x length"
        )
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    y = A @ x
    if sigma > 0:
        y = y + rng.normal(0.0, sigma, size=A.shape[0])
    return y


def assemble_measurements(
    walks: list[WalkPath] | tuple[WalkPath, ...],
    n_edges: int,
    x: np.ndarray,
    sigma: float,
    rng: np.random.Generator,
) -> MeasurementSet:
    """Convenience: build A from walks and observe y in one go."""
    A = build_matrix(walks, n_edges)
    y = observe(A, x, sigma, rng)
    return MeasurementSet(A=A, y=y, sigma=float(sigma), walks=tuple(walks))
