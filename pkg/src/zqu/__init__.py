"""Exact algebra and analysis of cyclic codes over R = Z_q + uZ_q (u^2 = 0)."""

from .ring import (
    IdealDescriptor,
    RingElem,
    RingParams,
    enumerate_ideals,
    ideal_elements,
    is_unit,
    make_ring,
    p_adic_digits,
    residue,
    ring_mul,
    teichmuller_set,
)
from .poly import (
    Factorization,
    RPoly,
    ZqPoly,
    coprime_with_witness,
    divmod_monic,
    factor_xn_minus_1,
    format_r_poly,
    format_zq_poly,
    hensel_lift,
    is_basic_irreducible,
    is_basic_primitive,
    parse_r_poly,
    parse_zq_poly,
    r_poly_from_json,
    r_poly_to_json,
    xn_minus_1,
)
from .galois import (
    GaloisRingCtx,
    GrElem,
    build_ctx,
    eval_at,
    gr_ideal_elements,
    gr_ideals,
    gr_is_unit,
    nth_root_of_unity,
    unit_group_order,
)
from .codes import (
    BchCertificate,
    CanonicalGenerators,
    ComponentIdeal,
    CrtSystem,
    CyclicCode,
    bch_bound_of,
    build_crt,
    code_from_components,
    components_of,
    count_cyclic_codes,
    enumerate_cyclic_codes,
)
from .metrics import (
    DistanceReport,
    WordR,
    gray_map,
    hamming_weight,
    lee_weight_z4,
    min_distance,
    phi_map,
)

__version__ = "0.1.0"
