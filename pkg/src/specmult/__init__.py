"""Eigenvalue multiplicities of Hermitian matrices with a prescribed graph.

For a graph G, S(G) is the set of Hermitian matrices whose off-diagonal
support is exactly the edge set of G (diagonal unrestricted). The library
computes eigenvalue multiplicities m_B(G, lambda) exactly, evaluates the
structural bound m <= 2*theta + p and every characterization of the
equality and near-equality cases as executable predicates, and
cross-verifies predicates against direct spectral computation over
enumerated and randomized instances.
"""

from .errors import SpecmultError
from .graphs import (
    Graph,
    components,
    cycle_graph,
    cyclomatic_number,
    delete_edge,
    delete_vertices,
    induced_subgraph,
    infinity_graph,
    is_connected,
    parse_graph,
    path_graph,
    pendant_vertices,
    serialize_graph,
    star_graph,
    tadpole_graph,
    theta_graph,
)
from .hermitian import (
    ExactComplex,
    GainGraph,
    HermitianMatrix,
    a_alpha_gain,
    adjacency_matrix,
    cycle_gain,
    gain_graph,
    parse_matrix,
    random_in_S,
    serialize_matrix,
)
from .oracle import (
    CAMPAIGNS,
    CampaignConfig,
    CertifiedCluster,
    Discrepancy,
    certified_spectrum,
    enumerate_connected,
    enumerate_cstar_shapes,
    enumerate_theta_infinity,
    enumerate_trees,
    enumerate_unicyclic,
    run_campaign,
)
from .spectra import (
    AlgebraicEigenvalue,
    IntPolynomial,
    MultiplicityResult,
    eigenvalues_numeric,
    exact_rank,
    min_poly_2cos,
    multiplicity,
    scaled_char_poly,
)
from .structure import (
    blocks,
    classify_family,
    cycle_vertices,
    major_sets,
    pendant_cycles,
    pendant_paths,
    structure_report,
)
from .theorems import (
    RELATIONS,
    ClassificationOutcome,
    CheckReport,
    RelationProbe,
    check_upper_bound,
    conclusion_classifier,
    corollary_minus_one_tree,
    corollary_nullity_tree,
    cstar_adjacency_predicate,
    lemma_relation_checks,
    weighted_counterexample_check,
    structural_bound,
    tree_equality_predicate,
    unicyclic_equality_predicate,
)

__version__ = "1.0.0"

__all__ = [
    "AlgebraicEigenvalue",
    "CAMPAIGNS",
    "CampaignConfig",
    "CertifiedCluster",
    "CheckReport",
    "ClassificationOutcome",
    "Discrepancy",
    "ExactComplex",
    "GainGraph",
    "Graph",
    "HermitianMatrix",
    "IntPolynomial",
    "MultiplicityResult",
    "RELATIONS",
    "RelationProbe",
    "SpecmultError",
    "a_alpha_gain",
    "adjacency_matrix",
    "blocks",
    "certified_spectrum",
    "check_upper_bound",
    "classify_family",
    "components",
    "conclusion_classifier",
    "corollary_minus_one_tree",
    "corollary_nullity_tree",
    "cstar_adjacency_predicate",
    "cycle_gain",
    "cycle_graph",
    "cycle_vertices",
    "cyclomatic_number",
    "delete_edge",
    "delete_vertices",
    "eigenvalues_numeric",
    "enumerate_connected",
    "enumerate_cstar_shapes",
    "enumerate_theta_infinity",
    "enumerate_trees",
    "enumerate_unicyclic",
    "exact_rank",
    "gain_graph",
    "induced_subgraph",
    "infinity_graph",
    "is_connected",
    "lemma_relation_checks",
    "major_sets",
    "min_poly_2cos",
    "multiplicity",
    "parse_graph",
    "parse_matrix",
    "path_graph",
    "pendant_cycles",
    "pendant_paths",
    "pendant_vertices",
    "random_in_S",
    "weighted_counterexample_check",
    "run_campaign",
    "scaled_char_poly",
    "serialize_graph",
    "serialize_matrix",
    "star_graph",
    "structural_bound",
    "structure_report",
    "tadpole_graph",
    "theta_graph",
    "tree_equality_predicate",
    "unicyclic_equality_predicate",
]
