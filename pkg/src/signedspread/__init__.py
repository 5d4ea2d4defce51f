"""Information spread on signed graphs.

A discrete process places a value on one uninformed vertex per step;
every informed vertex then transmits through its edges, with negative
edges flipping the transmitted value. Vertices hearing both values at
once become confused and stay silent forever. The package provides the
process engine, exact and heuristic solvers for the minimum achievable
confusion, the relaxed variant where either value may be placed, the
switching/balance/frustration toolbox, generators for the graph
families with known closed-form values, and a claim registry that
re-derives those values at desk scale.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    CapacityError,
    InputError,
    SignedSpreadError,
    StrategyError,
)
from .graph import (
    BalancePartition,
    SignedGraph,
    equivalent,
    frustration_index,
    graph_from_json,
    graph_to_json,
    is_antibalanced,
    is_balanced,
    min_deletion_balancing,
    negate_signature,
    negative_cycles,
    realize_min_signature,
    switch,
)
from .engine import (
    MODE_ID,
    MODE_RID,
    Label,
    Placement,
    StepContext,
    Strategy,
    Trace,
    label_to_str,
    levels,
    mirror_trace,
    pending_signals,
    run,
    step,
    str_to_label,
    strategy_from_json,
    strategy_to_json,
    trace_to_json,
)
from .solver import (
    Budget,
    MinStepsReport,
    SolveReport,
    brute_oracle,
    exact_confusion,
    exact_relaxed_confusion,
    min_steps,
    relaxed_via_class,
)
from .strategies import (
    POLICIES,
    balanced_partition_first,
    circuit_strategy,
    max_degree_first,
    policy_bound,
    rescue_priority,
    tree_frontier,
)
from .families import (
    KINDS,
    FamilySpec,
    gen_cycle,
    gen_gn,
    gen_gst,
    gen_ktt_tau,
    gen_path,
    gen_random_connected,
    gen_random_tree,
    check_gst_member,
)
from .verify import (
    CLAIMS,
    ClaimResult,
    ExploreReport,
    burning_number_brute,
    conjecture_ceiling,
    explore_conjecture,
    family_instances,
    run_suite,
    verify_claim,
)

__all__ = [
    "__version__",
    "BalancePartition",
    "Budget",
    "BudgetExceeded",
    "CLAIMS",
    "CapacityError",
    "ClaimResult",
    "ExploreReport",
    "FamilySpec",
    "InputError",
    "KINDS",
    "Label",
    "MODE_ID",
    "MODE_RID",
    "MinStepsReport",
    "POLICIES",
    "Placement",
    "SignedGraph",
    "SignedSpreadError",
    "SolveReport",
    "StepContext",
    "Strategy",
    "StrategyError",
    "Trace",
    "balanced_partition_first",
    "brute_oracle",
    "burning_number_brute",
    "check_gst_member",
    "circuit_strategy",
    "conjecture_ceiling",
    "equivalent",
    "exact_confusion",
    "exact_relaxed_confusion",
    "explore_conjecture",
    "family_instances",
    "frustration_index",
    "gen_cycle",
    "gen_gn",
    "gen_gst",
    "gen_ktt_tau",
    "gen_path",
    "gen_random_connected",
    "gen_random_tree",
    "graph_from_json",
    "graph_to_json",
    "is_antibalanced",
    "is_balanced",
    "label_to_str",
    "levels",
    "max_degree_first",
    "min_deletion_balancing",
    "min_steps",
    "mirror_trace",
    "negate_signature",
    "negative_cycles",
    "pending_signals",
    "policy_bound",
    "realize_min_signature",
    "relaxed_via_class",
    "rescue_priority",
    "run",
    "run_suite",
    "step",
    "str_to_label",
    "strategy_from_json",
    "strategy_to_json",
    "switch",
    "trace_to_json",
    "tree_frontier",
    "verify_claim",
]
