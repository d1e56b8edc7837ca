"""Exact computations with integer-valued polynomials on finite-rank Z-algebras."""

from .algebra import (
    BUILTIN_NAMES,
    StructAlgebra,
    alg_centralizer,
    alg_direct_sum,
    alg_from_matrix_basis,
    alg_integers,
    alg_matrix,
    alg_quaternion,
    alg_quotient_ring,
    alg_stabilizer,
    builtin,
    companion,
    elem_eval,
    min_poly_elem,
    reduce_algebra,
)
from .errors import *  # noqa: F401,F403
from .intval import (
    MembershipVerdict,
    NontrivialityCertificate,
    NullComparison,
    NullIdealGen,
    QuaternionSplitting,
    WitnessSpec,
    compare_null_ideals,
    divisible_by_all_monics,
    hensel_split_quaternion,
    int_member,
    is_null_mod,
    is_split_at,
    minimal_witness_exponent,
    nontriviality_check,
    null_ideal_field,
    split_obstruction,
    witness,
)
from .matalg import (
    Matrix,
    char_poly,
    det,
    enumerate_matrices,
    mat_eval,
    min_poly_field,
    nilpotency_index,
    parse_matrix,
)
from .poly import (
    DEG_ZERO,
    Poly,
    RatPoly,
    all_monic_lcm_oracle,
    divides,
    format_poly,
    gcd_lcm,
    is_irreducible,
    least_irreducible,
    monic_divmod,
    monic_polys,
    parse_poly,
    parse_ratpoly,
    phi,
    reduce_mod,
)
from .rings import (
    DEFAULT_MAX_ENUM,
    ZZ,
    FqCtx,
    IntegerRing,
    ModRing,
    enumerate_elements,
    enumeration_limit,
    frobenius_power,
    make_fq,
    max_enum,
    parse_ring,
    set_max_enum,
)

__version__ = "0.1.0"
