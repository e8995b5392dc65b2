"""Signed-graph neighbourhood coronas: construction, exact and numeric
spectra, closed-form spectrum formulas, and mechanical verification."""

from .graphs import (
    DegreeProfile,
    DuplicateEdgeError,
    GraphError,
    ParseError,
    SelfLoopError,
    SignedGraph,
    SizeLimitError,
    VertexIndexError,
    alternating_cycle,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edgeless,
    format_graph,
    from_edge_list,
    is_isomorphic,
    is_switching_isomorphic,
    neighbourhood_corona,
    parse_graph,
    path_graph,
    read_graph,
    star_graph,
    unbalanced_c4,
    write_graph,
)
from .linalg import (
    ComplexRootsError,
    Matrix,
    NotSquareError,
    NotSymmetricError,
    Polynomial,
    RationalFunction,
    SpectrumMultiset,
    char_poly_exact,
    coronal,
    coronal_constant_row_sum,
    det_exact_at,
    kronecker_product,
    kronecker_sum,
    real_roots_cubic,
    real_roots_quadratic,
    spectra_equal,
    sym_eigenvalues,
)
from .spectra import (
    ClosedFormEntry,
    ClosedFormError,
    ClosedFormSpectrum,
    MatrixKind,
    NetDegreeNotEigenvalueError,
    NotNetRegularError,
    NotRegularError,
    PoleError,
    RowSumEigenvalueMissingError,
    ZeroNetDegreeError,
    assemble_corona_blocks,
    closed_form_adjacency,
    closed_form_adjacency_kpq,
    closed_form_laplacian,
    closed_form_netlaplacian,
    corona_adjacency_charpoly_eval,
    corona_vertex_permutation,
    matrix_of,
    numeric_spectrum,
    realize,
)
from .experiments import (
    CospectralCertificate,
    DistinctReport,
    HypothesisNotMetError,
    IsomorphicInputsError,
    NotCospectralError,
    PaperExampleReport,
    VerifyResult,
    catalog_two_eigenvalue_seeds,
    corona_distinct_report,
    cospectral_demo,
    default_cospectral_pair,
    distinct_count,
    few_distinct_construct,
    netlaplacian_switching_witness,
    paper_example,
    verify_theorem,
)

__version__ = "0.1.0"
