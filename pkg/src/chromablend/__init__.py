"""chromablend: colour-cluster graph embodiments and chromatic blending.

A colour cluster lists how many vertices carry each of l colours. This
package builds the edge-maximal and edge-minimal graphs such a cluster can
properly colour, runs the blending recursion (edge colours become the new
vertices) to its all-blended fixed point, and checks every structural claim
against exhaustive desk-scale oracles.
"""

from ._kernels import active_backend, build_kernels, get_kernels
from .blending import (
    BlendStep,
    BlendTrace,
    blend_step_cluster,
    blend_step_graph,
    cluster_of_colouring,
    max_edge_iteration,
    parse_trace_json,
    run_total_blending,
    run_total_blending_from_graph,
    trace_to_json,
)
from .cluster import (
    ColourClass,
    ColourCluster,
    ColourLabel,
    add_colour_classwise,
    blend_labels,
    cluster_literal,
    normalize,
    parse_cluster,
    relabel_cluster,
    relabel_label,
)
from .embodiment import (
    DEFAULT_MATERIALIZATION_CAP,
    build_max_embodiment,
    build_min_chromatic_embodiment,
    build_min_proper_embodiment,
    eps_equality_holds,
    epsilon_minus,
    epsilon_plus,
    epsilon_plus_binomial,
    epsilon_plus_pairwise,
)
from .errors import (
    CapExceededError,
    ChromablendError,
    TerminalStateError,
    ValidationError,
)
from .graph import ColouredGraph, apply_colouring, induced_subgraph
from .oracle import (
    DEFAULT_ORACLE_CAP,
    GraphStats,
    chromatic_colouring,
    chromatic_number,
    clique_number,
    enumerate_chromatic_colourings,
    graph_stats,
    is_proper,
    mycielski,
    t_chi_graph,
    triangle_free,
)

__version__ = "0.1.0"

__all__ = [
    "BlendStep",
    "BlendTrace",
    "CapExceededError",
    "ChromablendError",
    "ColouredGraph",
    "ColourClass",
    "ColourCluster",
    "ColourLabel",
    "DEFAULT_MATERIALIZATION_CAP",
    "DEFAULT_ORACLE_CAP",
    "GraphStats",
    "TerminalStateError",
    "ValidationError",
    "active_backend",
    "add_colour_classwise",
    "apply_colouring",
    "blend_labels",
    "blend_step_cluster",
    "blend_step_graph",
    "build_kernels",
    "build_max_embodiment",
    "build_min_chromatic_embodiment",
    "build_min_proper_embodiment",
    "chromatic_colouring",
    "chromatic_number",
    "clique_number",
    "cluster_literal",
    "cluster_of_colouring",
    "enumerate_chromatic_colourings",
    "eps_equality_holds",
    "epsilon_minus",
    "epsilon_plus",
    "epsilon_plus_binomial",
    "epsilon_plus_pairwise",
    "get_kernels",
    "graph_stats",
    "induced_subgraph",
    "is_proper",
    "max_edge_iteration",
    "mycielski",
    "normalize",
    "parse_cluster",
    "parse_trace_json",
    "relabel_cluster",
    "relabel_label",
    "run_total_blending",
    "run_total_blending_from_graph",
    "t_chi_graph",
    "trace_to_json",
    "triangle_free",
]
