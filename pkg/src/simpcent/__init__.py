"""Higher-order adjacency, Laplacian, walk, and centrality computations on
finite simplicial complexes, with a brute-force oracle layer for
verification."""

from .adjacency import (
    DegreeQuery,
    degree,
    degree_report,
    lower_adjacent,
    maximal_p_adjacent,
    p_adjacent,
    upper_adjacent,
)
from .centrality import (
    adjacency_degree_centrality,
    average_degree_centrality,
    betweenness_centrality,
    centrality_report,
    closeness_centrality,
    clustering_coefficient,
    eigenvector_centrality,
    linked,
    maximal_degree_centrality,
    maximal_neighbours,
    upper_degree_centrality,
    vertex_upper_degree_centrality,
)
from .core import SimplicialComplex, build_complex, faces
from .errors import (
    ArgumentError,
    EmptyComplexError,
    GuardError,
    MembershipError,
    ParseError,
    SimpcentError,
    UndefinedValueError,
)
from .generate import GeneratorConfig, generate_complex
from .io_formats import emit_complex, emit_report, load_complex, parse_complex
from .spectral import adjacency_matrix, boundary_matrix, laplacian, theorem_degrees
from .walks import (
    build_nearness_graph,
    components,
    distances_from,
    p_distance,
    q_star_vector,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "DegreeQuery",
    "EmptyComplexError",
    "GeneratorConfig",
    "GuardError",
    "MembershipError",
    "ParseError",
    "SimplicialComplex",
    "SimpcentError",
    "UndefinedValueError",
    "adjacency_degree_centrality",
    "adjacency_matrix",
    "average_degree_centrality",
    "betweenness_centrality",
    "boundary_matrix",
    "build_complex",
    "build_nearness_graph",
    "centrality_report",
    "closeness_centrality",
    "clustering_coefficient",
    "components",
    "degree",
    "degree_report",
    "distances_from",
    "eigenvector_centrality",
    "emit_complex",
    "emit_report",
    "faces",
    "generate_complex",
    "laplacian",
    "linked",
    "load_complex",
    "lower_adjacent",
    "maximal_degree_centrality",
    "maximal_neighbours",
    "maximal_p_adjacent",
    "p_adjacent",
    "p_distance",
    "parse_complex",
    "q_star_vector",
    "theorem_degrees",
    "upper_adjacent",
    "upper_degree_centrality",
    "vertex_upper_degree_centrality",
    "__version__",
]
