"""Exact computation and certification for D'Arcais polynomials.

The package computes the polynomials P_n(x) defined by the Euler-product
expansion prod (1 - q^m)^(-x) = sum P_n(x) q^n, verifies the hook-length
identities satisfied by their shifts Q_n(x) = P_n(x + 1) over several
independent computation routes, and certifies analytic properties of the
coefficient sequences: Polya frequency (via Toeplitz minors and the
Aissen-Schoenberg-Whitney equivalence), real-rootedness and root
location (Sturm chains), Hurwitz stability (fraction-free Routh table),
and coefficient shape (unimodality, log-concavity, ultra-log-concavity).

Every computation is exact: arbitrary-precision integers and rationals
throughout, no floating point on any certification path.
"""

from .exactnum import (
    BigInt,
    BigRat,
    ExactPoly,
    binomial,
    poly_add,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
)
from .partitions import (
    Cell,
    HookConsistencyError,
    HookMultiset,
    HookSelector,
    Partition,
    enumerate_partitions,
    partition_count,
)
from .pf_tnn import (
    MinorSpec,
    MinorWitness,
    PFVerdict,
    ToeplitzSeq,
    contiguous_minor_spec,
    pf_test,
    toeplitz_minor,
)
from .polynomials import (
    DArcaisRecord,
    DEFAULT_ROUTE_BOUNDS,
    binomial_sum,
    darcais_poly,
    darcais_record,
    euler_series_poly,
    finite_product_coefficient,
    hook_sum_full,
    hook_sum_trivial_arm,
    hook_sum_trivial_leg,
    q_poly,
    q_scaled_coeffs,
    scaled_coeffs,
    seed_records,
    sigma,
    verify_identity,
)
from .reports import ARTIFACT_VERSION, CertReport
from .rootcert import (
    FactorizationError,
    RootAtEndpointError,
    RootInterval,
    RouthVerdict,
    SturmChain,
    all_real_roots_negative,
    count_real_roots,
    hurwitz_stable,
    is_real_rooted,
    is_square_free,
    isolate_real_roots,
    square_free_part,
    verify_factorization,
)
from .shape import (
    InternalConsistencyError,
    ShapeVerdict,
    is_log_concave,
    is_ultra_log_concave,
    is_unimodal,
    shape_report,
    shape_summary,
)

__version__ = ARTIFACT_VERSION

__all__ = [
    "ARTIFACT_VERSION",
    "BigInt",
    "BigRat",
    "Cell",
    "CertReport",
    "DArcaisRecord",
    "DEFAULT_ROUTE_BOUNDS",
    "ExactPoly",
    "FactorizationError",
    "HookConsistencyError",
    "HookMultiset",
    "HookSelector",
    "InternalConsistencyError",
    "MinorSpec",
    "MinorWitness",
    "PFVerdict",
    "Partition",
    "RootAtEndpointError",
    "RootInterval",
    "RouthVerdict",
    "ShapeVerdict",
    "SturmChain",
    "ToeplitzSeq",
    "all_real_roots_negative",
    "binomial",
    "binomial_sum",
    "contiguous_minor_spec",
    "count_real_roots",
    "darcais_poly",
    "darcais_record",
    "enumerate_partitions",
    "euler_series_poly",
    "finite_product_coefficient",
    "hook_sum_full",
    "hook_sum_trivial_arm",
    "hook_sum_trivial_leg",
    "hurwitz_stable",
    "is_log_concave",
    "is_real_rooted",
    "is_square_free",
    "is_ultra_log_concave",
    "is_unimodal",
    "isolate_real_roots",
    "partition_count",
    "pf_test",
    "poly_add",
    "poly_derivative",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "poly_mul",
    "q_poly",
    "q_scaled_coeffs",
    "scaled_coeffs",
    "seed_records",
    "shape_report",
    "shape_summary",
    "sigma",
    "square_free_part",
    "toeplitz_minor",
    "verify_factorization",
    "verify_identity",
]
