"""Monomial ideals via polarization, facet ideals, and simplicial forests.

The package turns a monomial ideal into its square-free polarization, reads
the polarization as the facet ideal of a simplicial complex, and uses the
combinatorics of that complex (covers, leaves, forests) to answer algebraic
questions about the original ideal: primary decomposition, associated
primes, height, Cohen-Macaulay verdicts under the tree hypothesis, and the
filtration by component height.
"""

from .decomposition import (
    IrreducibleComponent,
    associated_primes,
    height,
    irreducible_decomposition,
    is_unmixed_ideal,
    minimal_primes,
    quotient_associated_prime_witnesses,
    quotient_associated_primes,
)
from .monomials import (
    UNIT_IDEAL,
    ZERO_IDEAL,
    Monomial,
    MonomialIdeal,
    Prime,
    Ring,
    RingMismatchError,
    UnitIdeal,
    ZeroIdeal,
    change_ring,
    change_ring_ideal,
    colon,
    coprime_independence_number,
    divides,
    gcd,
    ideal_sum,
    intersect,
    intersect_all,
    lcm,
    localize,
    minimalize,
    prime,
    ring,
    sort_primes,
)
from .polarization import (
    CorrespondenceReport,
    PolarRing,
    associated_prime_correspondence,
    depolarize_ideal,
    depolarize_prime,
    infer_polar_ring,
    parse_polar_name,
    polar_decomposition,
    polar_decomposition_of_component,
    polar_decomposition_of_power,
    polar_variable_name,
    polarization_sequence,
    polarize_ideal,
    polarize_ideal_in,
    polarize_monomial,
    polarize_prime,
)
from .simplicial import (
    ForestCheck,
    SimplicialComplex,
    alexander_dual_complex,
    alexander_dual_ideal,
    complex_on,
    covering_number,
    facet_complex,
    facet_ideal,
    free_vertices,
    independence_number,
    is_connected,
    is_forest,
    is_leaf,
    is_tree,
    is_unmixed,
    joints,
    minimal_vertex_covers,
    nonface_complex,
    nonface_ideal,
    remove_facet,
)
from .structure import (
    CMVerdict,
    Filtration,
    FiltrationReport,
    HeightStrata,
    JointRemovalReport,
    KonigReport,
    LocalizationReport,
    ScmReport,
    ScmVerdict,
    check_filtration_strata,
    check_joint_removal,
    check_konig,
    check_localization,
    cm_verdict,
    height_strata,
    joint_generators,
    scm_filtration,
    scm_verdict,
    squarefree_component,
)
from .textio import ParseError, parse_ideal, parse_prime, render_ideal, render_prime

__version__ = "0.1.0"
