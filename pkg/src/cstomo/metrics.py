"""Detection quality metrics over congested-link sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet


@dataclass(frozen=True)
class DetectionOutcome:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f_score: float


def score(detected: AbstractSet[int], truth: AbstractSet[int]) -> DetectionOutcome:
    """Precision, recall, and their harmonic mean (F-score) for a
    detected set against the true congested set.

    Degenerate denominators yield zero rather than an error, so an
    empty detection against a non-empty truth scores F = 0.
    """
    tp = len(detected & truth)
    fp = len(detected - truth)
    fn = len(truth - detected)
    precision = tp / (tp + fp) if (tp + fp) > 0 else 0.0
    recall = tp / (tp + fn) if (tp + fn) > 0 else 0.0
    f_score = (
        2.0 * precision * recall / (precision + recall)
        if (precision + recall) > 0
        else 0.0
    )
    return DetectionOutcome(
        tp=tp, fp=fp, fn=fn, precision=precision, recall=recall, f_score=f_score
    )
