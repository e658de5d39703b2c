"""Distance spectral radius toolkit for integer k-matchings.

Deficiency and barrier computation, property deciders (perfect
k-matching, factor-critical, bicritical, d-critical), distance spectra,
equitable quotient closed forms for the extremal clique-join families,
desk-scale graph enumeration, and the exhaustive verification harness.
"""

from .backend import ACTIVE_BACKEND
from .graphs import (
    ComponentStats,
    Graph,
    complete_bipartite,
    complete_graph,
    component_stats,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    is_connected,
    iter_graph6,
    join,
    parse_graph6,
    path_graph,
    read_graph6_file,
    split_star,
    write_graph6,
)
from .spectra import (
    Eigenpair,
    SPECTRAL_EPS,
    compare_spectral,
    distance_matrix,
    distance_spectral_radius,
    dominant_eigenpair,
    rayleigh_lower_bound,
    wiener,
)
from .quotients import (
    CliqueJoinFamily,
    QuotientMatrix,
    balanced_split_family,
    build_family,
    clique_join_family,
    closed_form_lambda1,
    double_pendant_clique_family,
    family_cells,
    family_quotient,
    is_equitable,
    largest_real_root,
    pendant_clique_cubic,
    pendant_clique_family,
    quotient_matrix,
    split_star_family,
    surplus_split_family,
)
from .matching import (
    DeficiencyReport,
    Property,
    PropertyQuery,
    PropertyVerdict,
    decide_property,
    deficiency,
    direct_property_oracle,
    direct_search,
    k_barriers,
)
from .enumeration import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    connected_graphs,
    graph_from_canonical,
)
from .harness import (
    LemmaReport,
    TheoremReport,
    TheoremSpec,
    VerdictRow,
    lemma_numeric_check,
    minimizer_search,
    report_csv,
    report_json,
    sample_source,
    sharpness_check,
    theorem_query,
    threshold_for,
    verify_theorem,
)

__version__ = "0.1.0"
