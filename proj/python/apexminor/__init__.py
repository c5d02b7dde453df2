"""Grid minors, apex-minor extraction and K_{3,t} certificates."""

from ._core import (
    ApexminorError,
    Graph,
    add_apex,
    apex_grid_threshold,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    extract_k3t,
    find_minor,
    genus_grid_threshold,
    genus_to_k3t,
    grid_graph,
    is_planar,
    k3t_grid_threshold,
    layered_bags,
    lower_bound_graph,
    path_graph,
    simple_threshold,
    treewidth,
    ttw_upper,
    verify_model,
)

__all__ = [
    "ApexminorError",
    "Graph",
    "add_apex",
    "apex_grid_threshold",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "extract_k3t",
    "find_minor",
    "genus_grid_threshold",
    "genus_to_k3t",
    "grid_graph",
    "is_planar",
    "k3t_grid_threshold",
    "layered_bags",
    "lower_bound_graph",
    "path_graph",
    "simple_threshold",
    "treewidth",
    "ttw_upper",
    "verify_model",
]
