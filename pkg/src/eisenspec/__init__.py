"""Exact spectral analysis of signed directed graphs.

Signed digraphs are handled as gain graphs over the six unit sixth roots
of unity; their Hermitian adjacency matrices have unit Eisenstein-integer
entries, and every spectral decision (characteristic polynomial, rank,
inertia, cospectrality, switching isomorphism) is made in exact integer or
rational arithmetic.
"""

from .algebra import (
    EisensteinRational,
    IntPolynomial,
    Unit,
    eis_real_part,
    poly_real_root_counts,
    sturm_root_counts,
    unit_conj,
    unit_mul,
    unit_to_eis,
)
from .catalog import named
from .census import (
    CensusReport,
    CensusTask,
    cospectral_mates,
    enumerate_signatures,
    is_des,
    known_family,
    rank2_mate_solver,
)
from .classify import (
    ClassificationVerdict,
    c5_signature_type,
    check_c5_table,
    check_two_nonneg_necessary,
    classify_lambda2_negative,
    classify_rank2,
    classify_rank3,
    kite_condition,
    semicomplete_bridge_classify,
)
from .digraph import (
    SignedDigraph,
    converse,
    disjoint_union,
    from_edge_list,
    induced,
    negate,
    parse_sdg,
    to_sdg,
    underlying,
)
from .expansions import (
    clique_expand,
    clique_reduce,
    find_pseudotwins,
    find_twins,
    twin_expand,
    twin_reduce,
)
from .graphs import UnderlyingGraph, graph_isomorphisms, has_independent_triple
from .sachs import char_poly_sachs, enumerate_elementary
from .spectra import (
    EisensteinMatrix,
    Spectrum,
    char_poly_exact,
    cycle_gain,
    eigenvalues_numeric,
    eisenstein_matrix,
    inertia,
    rank_exact,
    spectrum,
    spectrum_is_symmetric,
    trace_power,
    triangle_census,
    verify_interlacing,
)
from .switching import (
    SwitchingFunction,
    TreeNormalForm,
    apply_switch,
    canonical_form,
    find_nonisomorphic_switch_partner,
    fundamental_cycle_gains,
    normalize_tree,
    switching_equivalent_labeled,
    switching_isomorphic,
)

__version__ = "0.1.0"
