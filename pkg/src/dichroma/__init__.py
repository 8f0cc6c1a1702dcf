"""Upper bounds on the dichromatic number of digraphs, with certificates.

The library builds DFS trees, classifies arcs, derives level-structure
bounds (spine, branches, condensation, residue families, circumference
over girth), and verifies every constructive bound's coloring before
reporting it. A brute-force oracle pins down small instances exactly.
"""

from .bounds import (
    BoundCertificate,
    BoundReport,
    EngineOptions,
    Hypothesis,
    METHOD_NAMES,
    best_bound,
    bound_branches,
    bound_chen_numeric,
    bound_circ_girth,
    bound_condensation,
    bound_mod_no1,
    bound_multi_residue,
    bound_path_girth,
    bound_spine,
    bound_window_residue,
    run_method,
)
from .coloring import (
    Coloring,
    VerificationReport,
    exact_chromatic_number,
    exact_dichromatic_number,
    greedy_coloring,
    lift_block_coloring,
    verify_acyclic,
    verify_proper,
)
from .cycles import (
    CycleProfile,
    circumference,
    cycle_profile,
    enumerate_cycles,
    find_cycle_with_residue,
    girth,
    residue_profile,
)
from .dfs import (
    ArcClass,
    DfsTree,
    RootInfo,
    backward_arcs,
    build_dfs_tree,
    classify_arcs,
    dfs_tree_to_dot,
    select_root,
    tree_path,
)
from .digraph import (
    Digraph,
    SccDecomposition,
    format_edge_list,
    induced_subdigraph,
    is_strong,
    parse_edge_list,
    strongly_connected_components,
)
from .errors import (
    AttemptsExhausted,
    CapExceeded,
    DichromaError,
    HypothesisViolated,
    ImproperInput,
    InternalInvariantError,
    NoCycle,
    ParseError,
    TruncatedEnumeration,
    Unreachable,
    WidthTooLarge,
)
from .auxgraphs import (
    AuxGraph,
    AuxKind,
    aux_to_dot,
    backward_spine,
    block_condensation_graph,
    residue_block_graph,
    underlying_backward_graph,
    underlying_graph,
)
from .generators import (
    GeneratorSpec,
    Lcg,
    complete_symmetric,
    directed_cycle,
    random_strong,
    residue_constrained,
)

__version__ = "0.1.0"
