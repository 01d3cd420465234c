"""Exact computation of Hilbert-Samuel functions, Hilbert coefficients,
sectional genera, colon ideals q:m and indices of reducibility for m-primary
ideals in quotients of polynomial rings and in affine semigroup rings, with
Cohen-Macaulay / Gorenstein / quasi-Buchsbaum classification checks."""

from .errors import (
    CalcError,
    DegenerateColon,
    DegreeMismatch,
    InfiniteQuotient,
    MissingType,
    NotCofinite,
    NotDim2,
    NotFinite,
    NotPrimary,
    NotStabilized,
    SpecFormatError,
)
from .groebner import (
    INFINITE,
    GroebnerBasis,
    StandardMonomialSet,
    buchberger,
    is_origin_supported,
    normal_form,
    quotient_length,
    standard_monomials,
)
from .hilbert import (
    CohomologyEstimate,
    HilbertData,
    InvariantReport,
    LengthSequence,
    build_bundle,
    build_report,
    fit_hilbert,
    hilbert_value,
    hs_sequence,
    infer_cohomology_dim2,
)
from .idealops import (
    Ideal,
    ideal_colon,
    ideal_combine,
    ideal_intersect,
    ideal_membership,
    ideal_power,
    make_ideal,
)
from .polyring import (
    EQ,
    GT,
    LT,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyParseError,
    RingSpec,
    compare_monomials,
    format_polynomial,
    parse_polynomial,
    poly_arith,
    polynomial_ring,
    semigroup_ring,
)
from .semigroup import (
    AffineSemigroup,
    SemigroupIdeal,
    sg_closure_gap,
    sg_colon_max,
    sg_complement,
    sg_length,
    sg_membership,
)
from .verdict import (
    ASSERTION_FLAGS,
    VerdictRecord,
    check_e2_chain,
    check_goto_nishida,
    check_gorenstein,
    check_lemma31,
    check_quasi_buchsbaum,
    check_sg_chain,
    run_checks,
)

__version__ = "0.1.0"
