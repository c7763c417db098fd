"""weak-ham-lab: a random-hypergraph laboratory for weak Hamilton cycles.

A weak cycle alternates distinct vertices with hyperedges (repeats allowed)
such that consecutive vertices share their connecting edge; existence
questions therefore reduce to the shadow graph, which the whole package
exploits. The library samples the binomial and fixed-size random d-uniform
models, decides weak Hamiltonicity exactly on small instances and
heuristically via rotation-extension at scale, analyzes non-expanding vertex
sets and booster edges, and runs reproducible threshold experiments against
the limit law exp(-exp(-c)).
"""

from .errors import CapabilityError, InputError, ScheduleInfeasibleError
from .expansion import (
    ExpansionReport,
    GreedyProbeResult,
    SampledCheck,
    greedy_probe,
    is_non_expanding,
    minimal_nonexpanding_connected,
    pab_bound_exact,
    pab_bound_simple,
    u_exact,
    u_sampled_check,
)
from .harness import (
    ExperimentConfig,
    Table,
    estimate_mindeg_probability,
    load_table,
    make_config,
    parse_config_text,
    read_table,
    run_experiment,
    run_expansion,
    run_gnm_threshold,
    run_isolated_distribution,
    run_pab,
    run_process,
    run_threshold,
    wilson_interval,
)
from .hypercore import (
    Hypergraph,
    ShadowGraph,
    components,
    degree,
    degrees,
    dump_hypergraph,
    format_hypergraph,
    induced,
    is_connected_on,
    isolated_vertices,
    load_hypergraph,
    neighbors,
    non_isolated_vertices,
    parse_hypergraph,
    shadow_graph,
)
from .oracle import (
    OracleVerdict,
    exact_spanning_cycle_on_v1,
    exact_weak_hamiltonian,
    has_weak_cycle_of_length,
    longest_weak_path_exact,
    weak_cycle_of_length,
)
from .plotting import emit_plot, render_threshold_svg
from .randmodels import (
    GnmParams,
    GnpParams,
    SeededRng,
    SprinkleSchedule,
    default_sprinkle_constant,
    edge_process,
    limiting_probability,
    m_from_c,
    max_sprinkle_constant,
    p_from_c,
    sample_gnm,
    sample_gnp,
    sampled_covered_vertices,
    sprinkle_schedule,
    union_overlay,
)
from .weakpaths import (
    DlvResult,
    PosaSet,
    ProjectionGraph,
    SearchOutcome,
    ValidationResult,
    WeakCycle,
    WeakPath,
    booster_edges,
    booster_lower_bound,
    dlv_long_path,
    lift_cycle,
    lift_path,
    posa_set,
    projection_graph,
    rotate,
    rotation_extension_search,
    stalled_path,
    validate,
    weak_from_json,
    weak_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "InputError",
    "CapabilityError",
    "ScheduleInfeasibleError",
    # hypercore
    "Hypergraph",
    "ShadowGraph",
    "degree",
    "degrees",
    "isolated_vertices",
    "non_isolated_vertices",
    "neighbors",
    "shadow_graph",
    "induced",
    "components",
    "is_connected_on",
    "format_hypergraph",
    "parse_hypergraph",
    "load_hypergraph",
    "dump_hypergraph",
    # random models
    "SeededRng",
    "GnpParams",
    "GnmParams",
    "p_from_c",
    "m_from_c",
    "limiting_probability",
    "sample_gnp",
    "sample_gnm",
    "sampled_covered_vertices",
    "union_overlay",
    "edge_process",
    "SprinkleSchedule",
    "sprinkle_schedule",
    "max_sprinkle_constant",
    "default_sprinkle_constant",
    # weak paths and cycles
    "WeakPath",
    "WeakCycle",
    "ValidationResult",
    "PosaSet",
    "ProjectionGraph",
    "DlvResult",
    "SearchOutcome",
    "validate",
    "rotate",
    "posa_set",
    "booster_edges",
    "booster_lower_bound",
    "rotation_extension_search",
    "stalled_path",
    "projection_graph",
    "dlv_long_path",
    "lift_path",
    "lift_cycle",
    "weak_to_json",
    "weak_from_json",
    # oracle
    "OracleVerdict",
    "exact_weak_hamiltonian",
    "exact_spanning_cycle_on_v1",
    "longest_weak_path_exact",
    "has_weak_cycle_of_length",
    "weak_cycle_of_length",
    # expansion
    "ExpansionReport",
    "SampledCheck",
    "GreedyProbeResult",
    "is_non_expanding",
    "u_exact",
    "u_sampled_check",
    "minimal_nonexpanding_connected",
    "greedy_probe",
    "pab_bound_exact",
    "pab_bound_simple",
    # harness
    "ExperimentConfig",
    "Table",
    "parse_config_text",
    "make_config",
    "wilson_interval",
    "run_threshold",
    "run_gnm_threshold",
    "run_isolated_distribution",
    "run_process",
    "run_expansion",
    "run_pab",
    "run_experiment",
    "estimate_mindeg_probability",
    "read_table",
    "load_table",
    # plotting
    "emit_plot",
    "render_threshold_svg",
]
