"""Exact toolkit for systems of parameters and Cohen-Macaulay verdicts.

Subpackages cover monomial-ideal arithmetic, Groebner bases over a prime
field, simplicial complexes with the face-sum sop test, simplicial homology
with Hochster Betti tables, Koenig graphs with their difference sops,
two-chain posets, and multiplicity defect diagnostics.
"""

from .exceptions import SopcmError
from .field import DEFAULT_CHARACTERISTIC, PrimeField
from .monomial import Monomial, format_monomial, parse_monomial
from .ideal import (
    IdentificationSop,
    IdentifiedIdeal,
    MonomialIdeal,
    edge_ideal,
    height,
    identify_variables,
    koenig_type,
    mgrade,
    minimalize,
    polarize,
    socle_dimension,
    standard_monomials,
    verify_identification_sop,
)
from .hilbert import HilbertSeries, hilbert_series
from .groebner import (
    FieldPolynomial,
    GroebnerBasis,
    buchberger,
    hilbert_consistency,
    initial_ideal,
    normal_form,
    parse_polynomial,
    quotient_length,
)
from .complexes import (
    CmReport,
    SimplicialComplex,
    chessboard_complex,
    cm_test_universal,
    depth_via_skeletons,
    from_facets,
    independence_complex,
    skeleton,
    stanley_reisner_ideal,
    top_facet_count,
    universal_sop,
)
from .homology import (
    BettiTable,
    hochster_betti_table,
    reduced_homology_dims,
    reg_of_squarefree_quotient,
)
from .graphs import (
    Graph,
    GraphInvariants,
    cycle_graph,
    graph,
    graph_invariants,
    im_bound_test,
    koenig_sop,
    mu_compare,
    reduced_edge_ring,
    reg_reduction_check,
    whisker,
)
from .posets import (
    TwoChainPoset,
    build_poset,
    diagonal_conditions,
    linear_resolution_test,
    order_complex,
    poset_cm_verdict,
    shelling_order,
)
from .diagnostics import DefectProfile, defect_profile, surprising_probe

__version__ = "0.1.0"
