"""Brute-force normal ordering straight from the algebra relations.

Operators are kept as :class:`NormalForm` sums ``f(N) (A†)^a A^b``.  The only
rewrite rules are

* ``A f(N) = f(N+1) A`` and ``A† f(N) = f(N-1) A†``;
* ``A A† = A† A + ([N+1] - [N])``.

Everything else, including ``[A^k, A†] = ([N+k] - [N]) A^(k-1)``, is a
consequence that the tests check rather than assume.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BRACKET_MODE, BracketPoly
from .box import BoxFunction, _bracket
from .errors import ShiftOutOfRange
from .stirling import StirlingTable

Key = tuple[int, int]


class NormalForm:
    """Finite sum ``sum f_{a,b}(N) (A†)^a A^b`` with no zero coefficients."""

    __slots__ = ("mode", "terms")

    def __init__(self, mode: str, terms: dict[Key, BracketPoly] | None = None):
        self.mode = mode
        self.terms = {key: c for key, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def identity(cls, box: BoxFunction) -> NormalForm:
        return cls(box.mode, {(0, 0): box.one()})

    @classmethod
    def monomial(cls, box: BoxFunction, a: int, b: int, coeff: BracketPoly | None = None) -> NormalForm:
        return cls(box.mode, {(a, b): box.one() if coeff is None else coeff})

    def __add__(self, other: NormalForm) -> NormalForm:
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return NormalForm(self.mode, terms)

    def __neg__(self) -> NormalForm:
        return NormalForm(self.mode, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: NormalForm) -> NormalForm:
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    def coefficient(self, a: int, b: int) -> BracketPoly:
        return self.terms.get((a, b), BracketPoly.zero(self.mode))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.terms.items()))
        return f"NormalForm({{{body}}})"


@dataclass
class _Rewriter:
    box: BoxFunction
    bound: int | None = None
    _commutator: BracketPoly = field(init=False)

    def __post_init__(self):
        # [A, A†] = [N+1] - [N]
        self._commutator = _bracket(self.box, -1) - _bracket(self.box, 0)

    def shift(self, f: BracketPoly, c: int) -> BracketPoly:
        """``f(N - c)``, enforcing the bracket index bound in symbolic mode."""
        g = f.shift(c)
        if self.bound is not None and g.mode == BRACKET_MODE:
            bad = [j for j in g.indices() if abs(j) > self.bound]
            if bad:
                raise ShiftOutOfRange(f"bracket index {bad[0]} outside -{self.bound}..{self.bound}")
        return g

    def left_adag(self, x: NormalForm) -> NormalForm:
        # A† f(N) (A†)^a A^b = f(N-1) (A†)^(a+1) A^b
        return NormalForm(x.mode, {(a + 1, b): self.shift(f, 1) for (a, b), f in x.terms.items()})

    def left_a(self, x: NormalForm) -> NormalForm:
        result = NormalForm(x.mode)
        for (a, b), f in x.terms.items():
            moved = self._a_times_word(a, b)
            g = self.shift(f, -1)  # A f(N) = f(N+1) A
            result = result + NormalForm(x.mode, {key: g * c for key, c in moved.terms.items()})
        return result

    def _a_times_word(self, a: int, b: int) -> NormalForm:
        """Normal form of ``A (A†)^a A^b``."""
        if a == 0:
            return NormalForm.monomial(self.box, 0, b + 1)
        # A (A†)^a A^b = A† (A (A†)^(a-1) A^b) + ([N+1]-[N]) (A†)^(a-1) A^b
        inner = self.left_adag(self._a_times_word(a - 1, b))
        return inner + NormalForm.monomial(self.box, a - 1, b, self._commutator)

    def multiply(self, lhs: NormalForm, rhs: NormalForm) -> NormalForm:
        result = NormalForm(self.box.mode)
        for (a, b), f in lhs.terms.items():
            x = rhs
            for _ in range(b):
                x = self.left_a(x)
            for _ in range(a):
                x = self.left_adag(x)
            result = result + NormalForm(x.mode, {key: f * c for key, c in x.terms.items()})
        return result


def normal_multiply(lhs: NormalForm, rhs: NormalForm, box: BoxFunction, bound: int | None = None) -> NormalForm:
    """Product of two normal forms, renormalized.

    ``bound`` limits bracket indices to ``-bound..bound`` in symbolic mode.
    """
    if lhs.mode != box.mode or rhs.mode != box.mode:
        raise ValueError("normal forms do not match the box")
    return _Rewriter(box, bound).multiply(lhs, rhs)


def normal_order_power(box: BoxFunction, n: int) -> NormalForm:
    """Normal form of ``(A†A)^n``."""
    if n < 1:
        raise ValueError("n must be positive")
    rewriter = _Rewriter(box, bound=n)
    number = NormalForm.monomial(box, 1, 1)
    result = number
    for _ in range(n - 1):
        result = rewriter.multiply(result, number)
    if box.is_symbolic:
        for (a, b), f in result.terms.items():
            if not f.indices() <= set(range(a + 1)):
                raise ShiftOutOfRange(f"coefficient of (A†)^{a} A^{b} uses brackets {sorted(f.indices())}")
    return result


def commutator_with_adag(box: BoxFunction, k: int) -> NormalForm:
    """``A^k A† - A† A^k`` computed by rewriting."""
    ak = NormalForm.monomial(box, 0, k)
    adag = NormalForm.monomial(box, 1, 0)
    return normal_multiply(ak, adag, box) - normal_multiply(adag, ak, box)


@dataclass
class OracleReport:
    box: BoxFunction
    nmax: int
    mismatches: list[tuple[int, int]] = field(default_factory=list)
    off_diagonal: list[tuple[int, tuple[int, int]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.off_diagonal


def oracle_check(table: StirlingTable) -> OracleReport:
    """Compare each table row with the rewriting oracle's ``(A†A)^n``."""
    report = OracleReport(table.box, table.nmax)
    for n in range(1, table.nmax + 1):
        nf = normal_order_power(table.box, n)
        for key in sorted(nf.terms):
            if key[0] != key[1] or not 1 <= key[0] <= n:
                report.off_diagonal.append((n, key))
        for k in range(1, n + 1):
            if nf.coefficient(k, k) != table[n, k]:
                report.mismatches.append((n, k))
    return report
