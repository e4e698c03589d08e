import pytest
from hypothesis import given
from hypothesis import strategies as st

from deformed_stirling.algebra import BracketPoly
from deformed_stirling.box import bracket, canonical, parse_box, so3, so21, symbolic
from deformed_stirling.errors import ShiftOutOfRange
from deformed_stirling.oracle import (
    NormalForm,
    commutator_with_adag,
    normal_multiply,
    normal_order_power,
    oracle_check,
)
from deformed_stirling.stirling import classical_stirling, stirling_recurrence

from partitions import count_partitions
from strategies import n_polys

B = BracketPoly.bracket_var
N = BracketPoly.n_var()
BOXES = [symbolic(), canonical(), so3(), so21(), parse_box("N^2")]


def number_op(box):
    return NormalForm.monomial(box, 1, 1)


def test_square_symbolic():
    box = symbolic()
    sq = normal_multiply(number_op(box), number_op(box), box)
    assert sq.terms == {(1, 1): B(0) - B(1), (2, 2): box.one()}


def test_identity_product():
    box = so3()
    p = NormalForm(box.mode, {(2, 1): N + 1, (0, 3): N**2})
    assert normal_multiply(NormalForm.identity(box), p, box) == p
    assert normal_multiply(p, NormalForm.identity(box), box) == p


def test_square_canonical():
    box = canonical()
    sq = normal_multiply(number_op(box), number_op(box), box)
    one = BracketPoly.const(1, "N")
    assert sq.terms == {(1, 1): one, (2, 2): one}
    assert count_partitions(2, 1) == count_partitions(2, 2) == 1


def test_power_symbolic_n3():
    nf = normal_order_power(symbolic(), 3)
    assert nf.terms == {
        (1, 1): (B(0) - B(1)) ** 2,
        (2, 2): 2 * B(0) - B(1) - B(2),
        (3, 3): BracketPoly.const(1, "bracket"),
    }


def test_power_so3_n2():
    nf = normal_order_power(so3(), 2)
    assert nf.terms == {(1, 1): -N + 1, (2, 2): BracketPoly.const(1, "N")}


def test_power_canonical_n4():
    nf = normal_order_power(canonical(), 4)
    expected = [count_partitions(4, k) for k in range(1, 5)]
    assert expected == [1, 7, 6, 1]
    assert {k: nf.coefficient(k, k) for k in range(1, 5)} == {
        k + 1: BracketPoly.const(v, "N") for k, v in enumerate(expected)
    }


@pytest.mark.parametrize("box", BOXES, ids=lambda b: b.label())
def test_only_diagonal_terms(box):
    for n in range(1, 7):
        assert set(normal_order_power(box, n).terms) == {(k, k) for k in range(1, n + 1)}


@pytest.mark.parametrize("box", BOXES, ids=lambda b: b.label())
def test_oracle_equivalence(box):
    assert oracle_check(stirling_recurrence(box, 6)).passed


def test_oracle_check_so21_n4():
    assert oracle_check(stirling_recurrence(so21(), 4)).passed


def test_oracle_detects_corruption():
    table = stirling_recurrence(symbolic(), 4)
    bad = table.with_entry(2, 1, symbolic().zero())
    report = oracle_check(bad)
    assert report.mismatches == [(2, 1)]
    assert not report.passed


def test_derived_commutator():
    box = symbolic()
    for k in range(1, 6):
        assert commutator_with_adag(box, k).terms == {(0, k - 1): B(-k) - B(0)}


def test_derived_commutator_concrete():
    box = so3()
    for k in range(1, 5):
        expected = bracket(box, 0).shift(-k) - box.expr
        assert commutator_with_adag(box, k).terms == {(0, k - 1): expected}


def test_bound_enforced():
    box = symbolic()
    a3 = NormalForm.monomial(box, 0, 3)
    adag = NormalForm.monomial(box, 1, 0)
    with pytest.raises(ShiftOutOfRange):
        normal_multiply(a3, adag, box, bound=2)


@st.composite
def normal_forms(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 2))):
        key = (draw(st.integers(0, 2)), draw(st.integers(0, 2)))
        terms[key] = draw(n_polys.filter(lambda p: p.degree() <= 2))
    return NormalForm("N", terms)


@given(normal_forms(), normal_forms(), normal_forms())
def test_associativity(a, b, c):
    box = so3()
    left = normal_multiply(normal_multiply(a, b, box), c, box)
    right = normal_multiply(a, normal_multiply(b, c, box), box)
    assert left == right


@st.composite
def symbolic_forms(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 2))):
        key = (draw(st.integers(0, 2)), draw(st.integers(0, 2)))
        j = draw(st.integers(-1, 2))
        terms[key] = B(j) * draw(st.integers(-3, 3)) + draw(st.integers(-2, 2))
    return NormalForm("bracket", terms)


@given(symbolic_forms(), symbolic_forms(), symbolic_forms())
def test_associativity_symbolic(a, b, c):
    box = symbolic()
    left = normal_multiply(normal_multiply(a, b, box), c, box)
    right = normal_multiply(a, normal_multiply(b, c, box), box)
    assert left == right


def test_canonical_power_matches_classical():
    nf = normal_order_power(canonical(), 6)
    for k in range(1, 7):
        assert nf.coefficient(k, k) == classical_stirling(6, k)
