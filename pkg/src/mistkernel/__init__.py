"""Linear-vertex kernelization for the internal-spanning-tree problem."""

from .expansion import ExpansionPair, find_expansion_2, verify_expansion
from .graph import (
    BipartiteSubgraph,
    Graph,
    InvariantError,
    Matching,
    PreconditionError,
    SpanningTree,
    bipartite_between,
    dfs_leaf_independent_set,
    dfs_tree,
    internal_count,
    is_connected,
    max_matching,
    saturating_matching,
)
from .hypermatroid import (
    Hyperforest,
    Hypergraph,
    Partition,
    border,
    deficient_partition,
    greedy_hypertree,
    is_hyperforest,
    shrink_to_tree,
)
from .kernelizer import (
    KernelResult,
    ReductionRecord,
    SLCertificate,
    apply_rule3,
    find_sl,
    kernelize,
    lift_solution,
    rearrange_tree,
    replay_reduction,
    validate_certificate,
)
from .oracle import OptResult, decide_pist, hamiltonian_path, opt_internal

__all__ = [
    "BipartiteSubgraph",
    "ExpansionPair",
    "Graph",
    "Hyperforest",
    "Hypergraph",
    "InvariantError",
    "KernelResult",
    "Matching",
    "OptResult",
    "Partition",
    "PreconditionError",
    "ReductionRecord",
    "SLCertificate",
    "SpanningTree",
    "apply_rule3",
    "bipartite_between",
    "border",
    "decide_pist",
    "deficient_partition",
    "dfs_leaf_independent_set",
    "dfs_tree",
    "find_expansion_2",
    "find_sl",
    "greedy_hypertree",
    "hamiltonian_path",
    "internal_count",
    "is_connected",
    "is_hyperforest",
    "kernelize",
    "lift_solution",
    "max_matching",
    "opt_internal",
    "rearrange_tree",
    "replay_reduction",
    "saturating_matching",
    "shrink_to_tree",
    "validate_certificate",
    "verify_expansion",
]
