"""Distance spectral radius criteria for odd-factor criticality."""

from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    build_family,
    complete,
    disjoint_union,
    extremal_graph,
    extremal_partition,
    family_partition,
    from_edge_list,
    join,
    odd_components,
    to_edge_list,
    vertex_connectivity,
)
from .spectrum import (
    DistanceMatrix,
    OddFactorParams,
    SpectralEstimate,
    SpectrumError,
    distance_matrix,
    spectral_radius,
    spectral_radius_dense,
    wiener_bound,
    wiener_index,
)
from .quotient import (
    Cubic,
    Quadratic,
    QuotientError,
    QuotientMatrix,
    char_poly_B,
    char_poly_Bstar,
    char_poly_from_entries,
    extremal_quotient_entries,
    family_quotient_entries,
    g_poly,
    largest_root,
    quotient_largest_eigenvalue,
    quotient_matrix,
)
from .factors import (
    CriticalityWitness,
    FactorError,
    OddBoundFunction,
    find_odd_factor_bruteforce,
    has_odd_factor,
    is_k_critical,
    is_k_critical_definitional,
)
from .theorem import (
    MonotonicityReport,
    ProofChainReport,
    TheoremError,
    TheoremReport,
    check_identity_33,
    check_monotonicity_lemmas,
    check_proof_chain,
    g2_family_spec,
    theorem_grid,
    verify_theorem_instance,
)

__version__ = "0.1.0"
