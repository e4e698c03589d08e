"""Normal ordering of (A†A)^n for generally deformed bosons.

Exact computation of the operator-valued deformed Stirling polynomials
``P(n, k)(N)`` by recurrence, generating-function extraction and the explicit
formula, checked against a brute-force rewriting oracle.
"""

from .algebra import (
    BRACKET_MODE,
    N_MODE,
    BracketPoly,
    parse_poly,
    poly_arith,
    poly_eval,
    poly_shift_n,
    poly_substitute_brackets,
    render,
)
from .box import BoxFunction, bracket, bracket_diff, canonical, canonical_shifted, parse_box, so3, so21, symbolic
from .errors import (
    BoundExceeded,
    DegenerateBox,
    ExponentError,
    InterpolationMismatch,
    NonPolynomial,
    ParseError,
    ShiftOutOfRange,
    UnsupportedRoute,
    VarsetMismatch,
)
from .gen_stirling import (
    CanonicalNormalForm,
    GenStirlingRow,
    canonical_normal_order_word_power,
    s22_enumerate,
    s22_formula,
    s22_via_s11,
    so21_realization_check,
)
from .oracle import NormalForm, normal_multiply, normal_order_power, oracle_check
from .stirling import (
    StirlingTable,
    classical_stirling,
    stirling_explicit,
    stirling_ogf,
    stirling_recurrence,
)

__version__ = "0.1.0"
