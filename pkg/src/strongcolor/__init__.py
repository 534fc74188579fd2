"""Strong edge colorings with certified color counts."""

from .coloring import (
    EdgeColoring,
    NotBipartiteError,
    SearchResult,
    Status,
    VertexColoring,
    bipartite_edge_color,
    chromatic_number,
    degeneracy_coloring,
    edge_color_best,
    edge_color_target,
    exact_chromatic,
    greedy_vertex_color,
    is_bipartite,
    vizing_edge_color,
)
from .density import (
    DegeneracyReport,
    DensityReport,
    SparsityVerdict,
    degeneracy_order,
    induced_edge_count,
    is_ab_graph,
    maximum_average_degree,
)
from .graph import (
    Drawing,
    Graph,
    InputError,
    Multigraph,
    Origin,
    contract_matching,
    edges_conflict,
    is_matching,
    is_strong_matching,
    split_by_drawing,
)
from .instances import (
    FAMILIES,
    InstanceError,
    ParseError,
    emit_coloring,
    emit_instance,
    generate,
    parse_coloring,
    parse_instance,
)
from .oracle import (
    Violation,
    build_conflict_graph,
    exact_strong_coloring,
    exact_strong_index,
    verify_proper_edge,
    verify_proper_vertex,
    verify_strong,
)
from .strong import (
    METHODS,
    NotOnePlanarError,
    PaletteExhausted,
    StrongColoring,
    extend_at_vertex,
    list_size_bounds,
    partition_matching,
    peel_and_extend,
    rho_upper,
    strong_color,
    strong_color_exact,
    strong_color_greedy,
    strong_color_ic,
    strong_color_mad,
    strong_color_oneplanar,
    strong_color_optimal,
    strong_color_split,
)

__version__ = "0.1.0"
