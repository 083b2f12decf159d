"""Thresholds of F-free graph down-sets.

Library + CLI for graph densities m and m2, the random-alteration
construction of F-free graphs hitting adversarial families, Monte Carlo
threshold location, and exact tiny-n expectation thresholds with the chain
p_c <= q_f <= q.
"""

from .graphs import LabeledGraph, PatternGraph, PRESETS, complement, pair_from_index, pair_index, parse_pattern
from .density import DensityReport, density_gap_check, m2_density, m_density, minimal_m2_subgraph
from .subiso import Copy, contains_copy, copies_sharing_edge, enumerate_copies
from .sampling import EdgeThresholdTable, Seed, chernoff_tail_bound, coupled_realize, sample_gnp
from .alteration import (
    EPSILON,
    LemmaConstants,
    PackingResult,
    TrialRecord,
    WeightedFamily,
    alteration_graph,
    check_family_condition,
    fractional_trial,
    greedy_maximal_packing,
    lemma2_trial,
    lemma_constants,
    refute_certificate,
)
from .thresholds import ScalingFit, ThresholdEstimate, estimate_mu, estimate_pc, scaling_fit
from .exact_tiny import (
    Certificate,
    FractionalCertificate,
    GapReport,
    enumerate_maximal_ffree,
    gap_report,
    lp_min_cost,
    min_cover_cost,
    mu_exact,
    pc_exact,
    q_exact,
    qf_exact,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
