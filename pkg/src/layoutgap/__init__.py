"""Exact and sampled layout costs (cutwidth, vertex separation, edge and
vertex bisection) on random graphs and DAGs, with the bounds that predict
their MAX/MIN gap."""

from .bounds import (
    BoundParameters,
    PredictedBand,
    asymptotic_log_binom,
    central_binom_estimate,
    choose_parameters,
    failure_bound_edge,
    failure_bound_vertexsep,
    hoeffding_tail,
    log_binom,
    predicted_band,
    q_estimate,
)
from .experiments import (
    ConcentrationConfig,
    ExperimentConfig,
    ExperimentReport,
    run_concentration_experiment,
    run_gap_experiment,
    run_hoeffding_check,
    write_report,
)
from .graph import (
    Dag,
    Graph,
    enumerate_downsets,
    is_downset,
    is_valid_layout,
    make_dag,
    make_graph,
    parse_graph_file,
    write_graph_file,
)
from .measures import CostProfile, ProblemKind, boundary_size, cost, cut_size, delta, profile, theta
from .sampler import SparsitySchedule, derive_seed, sample_dnp, sample_gnp, schedule_p
from .solvers import GapReport, SolverLimitError, brute_force, estimate_extremes, gap, solve_max, solve_min

__version__ = "0.1.0"
