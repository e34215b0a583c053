"""Reversible DNA codes from skew cyclic codes over R_{k,s}."""

from .codes import (
    Codeword,
    EnumerationLimitError,
    SkewCyclicCode,
    build_code,
    contains,
    dna_min_distance,
    encode,
    enumerate_codewords,
    reverse_codeword,
    search_divisors,
    skew_shift,
    verify_reversible,
)
from .dna import (
    DnaCodebook,
    build_codebook,
    dna_reverse,
    encode_codeword,
    encode_gray_tuple,
    wcc_complement,
)
from .gf import Field, build_field
from .ring import Ring, RingElement, build_ring
from .skewpoly import (
    SkewPoly,
    UnsupportedDivisorError,
    apply_theta,
    is_palindromic,
    is_theta_palindromic,
    right_divides_xn_minus_1,
    right_divmod,
    skew_mul,
)
from .text import ParseError, format_poly, format_ring, parse_poly_expr, parse_ring_expr

__version__ = "0.1.0"
