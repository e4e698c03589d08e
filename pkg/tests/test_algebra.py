from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deformed_stirling.algebra import (
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
from deformed_stirling.box import so3
from deformed_stirling.errors import VarsetMismatch

from strategies import bracket_polys, n_polys, small_ints

N = BracketPoly.n_var()
B0, B1, B2 = (BracketPoly.bracket_var(j) for j in range(3))


def test_binomial_square():
    assert poly_arith(B0 - B1, B0 - B1, "mul") == B0**2 - 2 * B0 * B1 + B1**2
    assert render((B0 - B1) * (B0 - B1)) == "[N]^2 - 2*[N]*[N-1] + [N-1]^2"


def test_add_zero_is_identity():
    p = 3 * N**2 - N
    assert poly_arith(p, BracketPoly.zero(N_MODE), "add") == p


def test_hand_expansion():
    assert poly_arith(2 * N - 1, N - 1, "mul") == parse_poly("2*N^2 - 3*N + 1")


def test_zero_has_no_terms():
    assert (N - N).terms == {}
    assert render(N - N) == "0"


def test_mixing_modes_rejected():
    with pytest.raises(VarsetMismatch):
        poly_arith(N, B0, "add")
    with pytest.raises(VarsetMismatch):
        N * B0


def test_shift_examples():
    assert poly_shift_n(N**2, 1) == N**2 - 2 * N + 1
    p = 7 * N**2 - 19 * N + 13
    assert poly_shift_n(p, 0) == p


def test_shift_so3_box():
    shifted = poly_shift_n(-N * (N - 1) / 2, 1)
    assert shifted == -(N**2 - 3 * N + 2) / 2
    for n in range(4):
        assert shifted(n) == Fraction(-(n - 1) * (n - 2), 2)


def test_eval_examples():
    assert poly_eval(7 * N**2 - 19 * N + 13, 1) == 1
    assert poly_eval(BracketPoly.zero(N_MODE), Fraction(3, 7)) == 0
    assert poly_eval(N, 5) == 5


def test_substitute_examples():
    assert poly_substitute_brackets(2 * B0 - B1 - B2, N) == 3
    assert poly_substitute_brackets(B0 - B1, so3()) == -N + 1
    assert poly_substitute_brackets(BracketPoly.const(1, BRACKET_MODE), so3()) == BracketPoly.const(1, N_MODE)


def test_render_normative_forms():
    assert render(7 * N**2 - 19 * N + 13) == "7*N^2 - 19*N + 13"
    assert render(2 * B0 - B1 - B2) == "2*[N] - [N-1] - [N-2]"
    assert render(-N**2 / 2 + N / 2) == "-1/2*N^2 + 1/2*N"
    assert render(BracketPoly.bracket_var(-1) - B0) == "[N+1] - [N]"


def test_graded_lex_order():
    p = B2**2 + B1 * B2 + B1**2 + B0 * B2 + B0 * B1 + B0**2 + B0 + 1
    assert render(p) == "[N]^2 + [N]*[N-1] + [N]*[N-2] + [N-1]^2 + [N-1]*[N-2] + [N-2]^2 + [N] + 1"


@given(n_polys, n_polys, n_polys)
def test_ring_axioms_n_mode(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(bracket_polys, bracket_polys, bracket_polys)
def test_ring_axioms_bracket_mode(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(n_polys)
def test_roundtrip_n_mode(p):
    assert parse_poly(render(p), mode=N_MODE) == p


@given(bracket_polys)
def test_roundtrip_bracket_mode(p):
    assert parse_poly(render(p), mode=BRACKET_MODE) == p


@given(n_polys, small_ints, small_ints)
def test_shift_composes(p, a, b):
    assert poly_shift_n(poly_shift_n(p, a), b) == poly_shift_n(p, a + b)


@given(n_polys, small_ints, small_ints)
def test_shift_matches_pointwise(p, c, n):
    assert poly_shift_n(p, c)(n) == p(n - c)


@given(bracket_polys, n_polys, st.integers(-5, 8))
def test_substitution_commutes_with_evaluation(p, box_expr, n):
    specialized = poly_substitute_brackets(p, box_expr)
    values = {j: box_expr(n - j) for j in p.indices() | {0}}
    assert specialized(n) == p.evaluate_brackets(values)


def test_parse_bracket_text():
    assert parse_poly("[N+2] - 3*[N-1]^2") == BracketPoly.bracket_var(-2) - 3 * B1**2
    assert parse_poly("[ N - 1 ]") == B1
    with pytest.raises(VarsetMismatch):
        parse_poly("[N] + N")
    with pytest.raises(VarsetMismatch):
        parse_poly("N", mode=BRACKET_MODE)


def test_constant_text_takes_requested_mode():
    assert parse_poly("7", mode=BRACKET_MODE) == BracketPoly.const(7, BRACKET_MODE)
    assert parse_poly("-1/2").mode == N_MODE
