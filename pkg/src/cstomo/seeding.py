"""Deterministic per-task random streams.

Every random draw in an experiment comes from a generator derived from
``(master seed, stream, task key...)``, so sweeps are order-independent
and tasks could run in parallel without sharing generator state.  The
truth stream deliberately excludes the measurement count from its key:
the same ground truth is reused across the walk-count axis, which makes
paired method comparisons tighter and keeps measurement-free baselines
exactly constant along that axis.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    TOPOLOGY = 0
    TRUTH = 1
    WALKS = 2
    NOISE = 3


def rng_for(master_seed: int, stream: Stream, *key: int) -> np.random.Generator:
    """Generator for one task, a pure function of its arguments."""
    entropy = (int(master_seed), int(stream)) + tuple(int(x) for x in key)
    return np.random.default_rng(np.random.SeedSequence(entropy))


def topology_seed(master_seed: int) -> int:
    """Integer seed for graph generators, derived from the master."""
    ss = np.random.SeedSequence((int(master_seed), int(Stream.TOPOLOGY)))
    return int(ss.generate_state(1)[0])
