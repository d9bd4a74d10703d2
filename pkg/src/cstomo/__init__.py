"""Sparse link-delay tomography from random-walk measurements, with a
betweenness-centrality prior."""

from .config import ExperimentConfig, load_config, parse_config
from .consistency import (
    CheckResult,
    ConsistencyRates,
    PartitionedGram,
    check_eic,
    check_ic,
    consistency_probability,
    partition_gram,
)
from .graph import (
    EdgeBetweenness,
    Graph,
    WalkPath,
    edge_betweenness,
    load_edge_list,
    load_graph,
    random_walk,
    sample_walks,
)
from .metrics import DetectionOutcome, score
from .prior import PriorVector, scale_prior
from .sampling import (
    DelayState,
    MeasurementSet,
    assemble_measurements,
    build_matrix,
    gen_ground_truth,
    observe,
)
from .solvers import (
    PRESETS,
    RecoveryResult,
    SolverConfig,
    bc_only_rank,
    cscd_objective,
    label_congested,
    preset,
    solve_cscd,
    solve_lasso,
)

__version__ = "0.1.0"
