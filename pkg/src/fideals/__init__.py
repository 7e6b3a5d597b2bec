"""Bitset combinatorics of square-free monomial ideals.

Core objects: square-free monomial ideals with explicit ambient size, their
facet and non-face complexes, complementary duals, the f-ideal property with
certificates, Kruskal-Katona realizability tests, and census searches.
"""

from .ideals import (
    AmbientMismatchError,
    ExponentMonomial,
    InternalCheckError,
    MinimalPrimes,
    MonomialIdeal,
    SquareFreeMonomial,
    UnitIdealError,
    ZeroIdealError,
    contains,
    iter_antichain_ideals,
    minimal_primes,
    minimalize,
    monomials_of_degree,
)
from .complexes import (
    SimplicialComplex,
    UnitIdealWarning,
    alexander_dual,
    dimension,
    f_vector,
    facet_complex,
    nonface_complex,
    nonface_ideal,
)
from .duality import (
    ExponentIdeal,
    InvalidBetaError,
    dual_divisor_count,
    exponent_ideal_of,
    generalized_newton_dual,
    newton_dual,
)
from .fideal import (
    DegreeNMinus2Report,
    DegreePartition,
    FIdealCertificate,
    GeneratorDegreeReport,
    NecessaryConditionsReport,
    certify,
    degree_n_minus_2_equivalence,
    degree_partition,
    generator_degree_implications,
    is_f_ideal,
    necessary_conditions,
)
from .kruskal_katona import (
    MacaulayExpansion,
    NotComplementableError,
    OracleUnavailableError,
    complement_fvector,
    complement_fvector_raw,
    exists_complex,
    exists_complex_brute,
    kk_valid,
    kk_valid_dual,
    macaulay_bound,
    macaulay_expansion,
)
from .census import (
    CensusRecord,
    PairingReport,
    enumerate_all_fideals,
    enumerate_equigenerated,
    random_ideal,
    random_ideals,
    search_degree_gap,
    verify_duality_pairing,
)

__version__ = "0.1.0"
