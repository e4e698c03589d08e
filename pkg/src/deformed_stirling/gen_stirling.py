"""Generalized Stirling numbers S_{2,2}(n, k) and the so(2,1) realization.

Canonical bosons satisfy ``[a, a†] = 1``; ``((a†)^2 a^2)^n`` normally orders to
``sum_k S22(n, k) (a†)^k a^k``.  The realization ``A = aa / (2 sqrt 2)``,
``N = {a†, a} / 4`` is handled without irrationals: only ``A†^k A^k`` appears,
which equals ``8^-k (a†)^(2k) a^(2k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .algebra import BracketPoly, n_coefficients
from .box import so21
from .errors import BoundExceeded
from .stirling import classical_stirling, stirling_recurrence

ENUMERATION_BOUND = 5
PROVENANCES = ("formula", "via_s11", "enumeration")


def s22_formula(n: int, k: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if k < 2 or k > 2 * n:
        return 0
    total = sum((-1) ** p * comb(k, p) * (p * (p - 1)) ** n for p in range(2, k + 1))
    value = Fraction((-1) ** k * total, factorial(k))
    if value.denominator != 1:
        raise ArithmeticError(f"S22({n},{k}) formula produced a non-integer {value}")
    return int(value)


def s22_via_s11(n: int, k: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return sum((-1) ** l * comb(n, l) * classical_stirling(2 * n - l, k) for l in range(n + 1))


def s22_enumerate(n: int, k: int) -> int:
    """Count partitions of ``n`` colour pairs into ``k`` blocks, no block holding a pair.

    Elements ``2c`` and ``2c+1`` share colour ``c``.  Partitions are walked as
    restricted growth strings, pruning as soon as a pair lands in one block or
    too few elements remain to open the missing blocks.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATION_BOUND:
        raise BoundExceeded(f"enumeration limited to n <= {ENUMERATION_BOUND}")
    size = 2 * n
    if k < 1 or k > size:
        return 0
    labels = [0] * size

    def walk(i: int, blocks: int) -> int:
        if size - i < k - blocks:
            return 0
        if i == size:
            return int(blocks == k)
        count = 0
        mate = labels[i - 1] if i % 2 else None
        for b in range(min(blocks + 1, k)):
            if b == mate:
                continue
            labels[i] = b
            count += walk(i + 1, max(blocks, b + 1))
        return count

    return walk(0, 0)


@dataclass
class GenStirlingRow:
    n: int
    values: dict[int, int]
    provenance: str

    def __getitem__(self, k: int) -> int:
        return self.values.get(k, 0)


def s22_row(n: int, provenance: str = "formula") -> GenStirlingRow:
    fn = {"formula": s22_formula, "via_s11": s22_via_s11, "enumeration": s22_enumerate}[provenance]
    return GenStirlingRow(n, {k: fn(n, k) for k in range(2, 2 * n + 1)}, provenance)


# --- canonical boson normal forms ------------------------------------------------


class CanonicalNormalForm:
    """``sum c_{a,b} (a†)^a a^b`` with rational coefficients, under ``[a, a†] = 1``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self.terms = {key: Fraction(c) for key, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, c) -> CanonicalNormalForm:
        return cls({(0, 0): c})

    @classmethod
    def word(cls, a: int, b: int, c=1) -> CanonicalNormalForm:
        return cls({(a, b): c})

    def __add__(self, other: CanonicalNormalForm) -> CanonicalNormalForm:
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return CanonicalNormalForm(terms)

    def scale(self, c) -> CanonicalNormalForm:
        return CanonicalNormalForm({key: v * c for key, v in self.terms.items()})

    def __mul__(self, other: CanonicalNormalForm) -> CanonicalNormalForm:
        result = CanonicalNormalForm()
        for (a, b), c in self.terms.items():
            x = other
            for _ in range(b):
                x = _left_a(x)
            x = CanonicalNormalForm({(p + a, q): v for (p, q), v in x.terms.items()})
            result = result + x.scale(c)
        return result

    def __pow__(self, n: int) -> CanonicalNormalForm:
        result = CanonicalNormalForm.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, CanonicalNormalForm):
            return NotImplemented
        return self.terms == other.terms

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def render(self) -> str:
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            parts.append(f"{c}*ad^{a}*a^{b}")
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"CanonicalNormalForm({self.render()})"


def _a_times_word(a: int, b: int) -> dict[tuple[int, int], Fraction]:
    # a (a†)^a a^b: each commutation a a† -> a† a + 1
    if a == 0:
        return {(0, b + 1): Fraction(1)}
    inner = {(p + 1, q): c for (p, q), c in _a_times_word(a - 1, b).items()}
    inner[a - 1, b] = inner.get((a - 1, b), 0) + 1
    return inner


def _left_a(x: CanonicalNormalForm) -> CanonicalNormalForm:
    result = CanonicalNormalForm()
    for (a, b), c in x.terms.items():
        result = result + CanonicalNormalForm(_a_times_word(a, b)).scale(c)
    return result


def canonical_normal_order_word_power(n: int) -> CanonicalNormalForm:
    """Normal form of ``((a†)^2 a^2)^n`` by direct rewriting."""
    if n < 1:
        raise ValueError("n must be positive")
    return CanonicalNormalForm.word(2, 2) ** n


# --- so(2,1) realization ----------------------------------------------------------

EIGHTH = Fraction(1, 8)


def number_operator_realized() -> CanonicalNormalForm:
    """``N = {a†, a} / 4 = (a†a + 1/2) / 2``."""
    return CanonicalNormalForm({(1, 1): Fraction(1, 2), (0, 0): Fraction(1, 4)})


def realize_polynomial(p: BracketPoly) -> CanonicalNormalForm:
    """Substitute the realized ``N`` into an N-mode polynomial (Horner)."""
    number = number_operator_realized()
    result = CanonicalNormalForm()
    for c in reversed(n_coefficients(p)):
        result = result * number + CanonicalNormalForm.scalar(c)
    return result


def realized_lhs(n: int) -> CanonicalNormalForm:
    """``(A†A)^n = 8^-n ((a†)^2 a^2)^n``."""
    return canonical_normal_order_word_power(n).scale(EIGHTH**n)


def realized_rhs(n: int) -> CanonicalNormalForm:
    """Right side of the reduced so(2,1) expansion, mapped to canonical operators.

    ``sum_k 8^(k-n) (S22(n,2k) + S22(n,2k+1)(2N - 2k - 1/2)) A†^k A^k``.
    """
    number = number_operator_realized()
    total = CanonicalNormalForm()
    for k in range(1, n + 1):
        factor = (
            CanonicalNormalForm.scalar(s22_formula(n, 2 * k))
            + (number.scale(2) + CanonicalNormalForm.scalar(Fraction(-4 * k - 1, 2))).scale(s22_formula(n, 2 * k + 1))
        )
        term = factor * CanonicalNormalForm.word(2 * k, 2 * k, EIGHTH**k)
        total = total + term.scale(Fraction(8) ** (k - n))
    return total


def realized_table(n: int) -> CanonicalNormalForm:
    """``sum_k P^{so21}(n,k)(N) A†^k A^k`` from the recurrence table, realized."""
    table = stirling_recurrence(so21(), n)
    total = CanonicalNormalForm()
    for k in range(1, n + 1):
        coeff = realize_polynomial(table[n, k])
        total = total + coeff * CanonicalNormalForm.word(2 * k, 2 * k, EIGHTH**k)
    return total


@dataclass
class RealizationReport:
    n: int
    lhs: CanonicalNormalForm
    rhs: CanonicalNormalForm
    from_table: CanonicalNormalForm = field(repr=False)

    @property
    def identity_holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def table_agrees(self) -> bool:
        return self.lhs == self.from_table


def so21_realization_report(n: int) -> RealizationReport:
    if n < 1:
        raise ValueError("n must be positive")
    return RealizationReport(n, realized_lhs(n), realized_rhs(n), realized_table(n))


def so21_realization_check(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return realized_lhs(n) == realized_rhs(n)
