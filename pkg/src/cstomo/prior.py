"""Betweenness-scaled delay prior.

A link with the largest betweenness is believed to run at the maximum
tolerable delay D, a zero-betweenness link at zero; everything else is
linearly interpolated between those anchors: ``s[i] = D * b[i] / B``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroMaxBetweennessError
from .graph import EdgeBetweenness


@dataclass(frozen=True)
class PriorVector:
    """Per-link delay prior in the same units as the delay vector."""

    s: np.ndarray
    D: float
    B: float


def scale_prior(bc: EdgeBetweenness, D: float) -> PriorVector:
    """Interpolate betweenness onto the delay scale: ``s[i] = D * b[i] / B``.

    The maximum-betweenness link gets exactly D, a zero-betweenness
    link exactly 0.
    """
    if D <= 0:
        raise ValueError(f"D must be positive, got {D}")
    B = bc.max_value
    if B <= 0:
        raise ZeroMaxBetweennessError("maximum betweenness is zero")
    s = D * (bc.values / B)
    return PriorVector(s=s, D=float(D), B=float(B))
