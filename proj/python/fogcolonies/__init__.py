"""Fog colony layout optimization.

A hierarchical-clustering dendrogram enumerates candidate fog colonies and
a constrained NSGA-II selects the partition minimizing mean application
response time and mean per-colony service-placement time.
"""

from fogcolonies._core import (  # noqa: F401
    Application,
    CandidateColony,
    Chromosome,
    ColonyPlacement,
    Dendrogram,
    Evaluation,
    ExperimentResult,
    FitnessMode,
    FogDevice,
    FrontSummary,
    GAConfig,
    GAResult,
    GenerationTrace,
    Individual,
    Infrastructure,
    LayoutPlacement,
    NetworkLink,
    ObjectiveVector,
    PlacementCost,
    RoutingStats,
    Scenario,
    ScenarioConfig,
    Service,
    Study,
    TopologyParams,
    User,
    ValidityReport,
    Workload,
    WorkloadParams,
    app_request_pairs,
    assign_coordinators,
    betweenness,
    build_dendrogram,
    build_dendrogram_with_coordinators,
    coverage,
    crossover_subtree,
    crowding_distance,
    dominates,
    export_plot_data,
    fast_nondominated_sort,
    first_dominating_generation,
    format_dendrogram,
    generate_scenario,
    generate_topology,
    generate_workload,
    is_valid,
    load_config,
    load_scenario,
    metrics_from_result,
    mutate_join,
    mutate_split,
    random_layout,
    repair_agglomerative,
    repair_divisive,
    run_experiment,
    s_metric,
    save_scenario,
    select_small_ed,
    serialize_scenario,
    shortest_lat,
    summarize_front,
)

__version__ = "1.0.0"
