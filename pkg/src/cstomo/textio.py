"""Plain-text matrix/vector serialization for oracle cross-checking.

Matrices are one row per line with space-separated decimals; vectors
are one value per line.  Values are written with 17 significant digits
so float64 round-trips exactly.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError


def save_matrix(path, A: np.ndarray) -> None:
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D array, got shape {A.shape}")
    with open(path, "w", encoding="utf-8") as fh:
        for row in A:
            fh.write(" ".join(f"{v:.17g}" for v in row))
            fh.write("\n")


def load_matrix(path) -> np.ndarray:
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            rows.append([float(tok) for tok in stripped.split()])
    if not rows:
        return np.zeros((0, 0), dtype=np.float64)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatchError(f"{path}: ragged rows")
    return np.array(rows, dtype=np.float64)


def save_vector(path, v: np.ndarray) -> None:
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-D array, got shape {v.shape}")
    with open(path, "w", encoding="utf-8") as fh:
        for x in v:
            fh.write(f"{x:.17g}\n")


def load_vector(path) -> np.ndarray:
    vals: list[float] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            vals.extend(float(tok) for tok in stripped.split())
    return np.array(vals, dtype=np.float64)
