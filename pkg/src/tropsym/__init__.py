"""Exact min-plus polynomials, rational functions and their symmetric pieces."""
from .blocksym import (
    Barcode,
    BlockMonomial,
    DecompositionTrace,
    ExponentMatrix,
    Gen2Expr,
    OrbitRep,
    compare_s,
    correction_terms,
    decompose2_polynomial,
    decompose2_symmetric,
    decompose2_symmetric_rational,
    elementary2,
    enumerate_orbits,
    is_2symmetric,
    non_generation_witness,
    orbit_fingerprint2,
    parse_orbit_label,
    symmetrize2,
)
from .canon import (
    EquivResult,
    EssentialityCertificate,
    essential_certificates,
    is_essential,
    minimal_representation,
    poly_equiv,
    rational_equiv,
)
from .errors import (
    DimensionError,
    DomainError,
    NotSymmetricError,
    ParseError,
    ResourceError,
    TropError,
)
from .expr import eval_expr, normalize_to_rational, parse_expr
from .poly import (
    Monomial,
    TropPoly,
    TropRational,
    cancel_monomial_content,
    eval_poly,
    eval_rational,
    frobenius_pow,
    poly_add,
    poly_mul,
    poly_pow,
)
from .semiring import INF, trop_add, trop_inv, trop_mul, trop_pow
from .sym import (
    GeneratorExpr,
    decompose_symmetric,
    decompose_symmetric_rational,
    elementary,
    is_symmetric,
    orbit_fingerprint,
    symmetrize,
)

__version__ = "0.1.0"
