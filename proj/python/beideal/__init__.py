"""Graph invariants, depth rules and an exact Groebner/Hochster oracle for
binomial edge ideals."""

try:  # wheel layout: the extension lives inside the package
    from . import _beideal as _core
except ImportError:  # cmake build: the extension sits on sys.path
    import _beideal as _core

_EXPORTS = [
    "Graph",
    "LimitError",
    "block_profile",
    "chain_of_cliques",
    "check_structural_theorem",
    "classify",
    "clique_sum",
    "cliques_attached",
    "coc_lower_bound",
    "components_after",
    "construct",
    "delete_edge",
    "delete_vertex",
    "depth_bounds",
    "depth_exact",
    "diameter",
    "distance",
    "enumerate_connected",
    "feasibility",
    "gbg_depth",
    "induced_cycle_scan",
    "invariants",
    "is_chordal",
    "is_cutset",
    "is_decomposable",
    "is_unicyclic",
    "maximal_cliques",
    "minimal_cutsets",
    "ohtani_check",
    "ohtani_completion",
    "predict_depth",
    "simplicial_partition",
    "sweep",
    "vertex_connectivity",
]

globals().update({name: getattr(_core, name) for name in _EXPORTS})

__all__ = _EXPORTS
__version__ = "0.1.0"
