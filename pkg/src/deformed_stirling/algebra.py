"""Exact multivariate polynomials with rational coefficients.

Two variable sets are supported.  In *N-mode* a polynomial is a function of
the single variable ``N``.  In *bracket-mode* the variables are the opaque
indeterminates ``B_j`` standing for ``[N-j]``; ``j`` may be negative while
rewriting (``B_{-1}`` is ``[N+1]``).

Monomials are stored sparsely as sorted ``((index, exponent), ...)`` tuples;
N-mode uses index 0 for ``N``.  Printing and iteration use graded
lexicographic order with lower indices more significant, so ``[N]`` sorts
before ``[N-1]``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from math import comb
from numbers import Rational as _RationalABC
from typing import Union

from .errors import VarsetMismatch

N_MODE = "N"
BRACKET_MODE = "bracket"
MODES = (N_MODE, BRACKET_MODE)

Monomial = tuple[tuple[int, int], ...]
Scalar = Union[int, Fraction]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class BracketPoly:
    """Immutable polynomial over exact rationals.

    Supports ``+ - *``, integer powers, scalar arithmetic with ``int`` and
    ``Fraction``, equality and hashing.  Mixing modes raises
    :class:`VarsetMismatch`.
    """

    __slots__ = ("mode", "_terms", "_hash")

    def __init__(self, mode: str, terms: Mapping[Monomial, Scalar] | None = None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                mono = tuple(sorted((v, e) for v, e in mono if e))
                if mode == N_MODE and any(v != 0 for v, _ in mono):
                    raise VarsetMismatch("N-mode monomials may only use variable 0")
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
        self.mode = mode
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, mode: str) -> BracketPoly:
        return cls(mode)

    @classmethod
    def const(cls, value: Scalar, mode: str) -> BracketPoly:
        return cls(mode, {(): value})

    @classmethod
    def n_var(cls) -> BracketPoly:
        """The N-mode polynomial ``N``."""
        return cls(N_MODE, {((0, 1),): 1})

    @classmethod
    def bracket_var(cls, j: int) -> BracketPoly:
        """The bracket-mode indeterminate ``B_j`` (that is, ``[N-j]``)."""
        return cls(BRACKET_MODE, {((j, 1),): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> BracketPoly:
        """N-mode polynomial from ascending coefficients ``c0 + c1*N + ...``."""
        return cls(N_MODE, {((0, i),) if i else (): c for i, c in enumerate(coeffs)})

    # inspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical (graded lex, descending) order."""
        if not self._terms:
            return []
        indices = sorted({v for m in self._terms for v, _ in m})

        def key(mono: Monomial):
            exps = dict(mono)
            return (-_mono_degree(mono), tuple(-exps.get(v, 0) for v in indices))

        return sorted(self._terms.items(), key=lambda t: key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((_mono_degree(m) for m in self._terms), default=-1)

    def indices(self) -> set[int]:
        """Variable indices that occur with nonzero exponent."""
        return {v for m in self._terms for v, _ in m}

    def is_homogeneous(self, degree: int) -> bool:
        return all(_mono_degree(m) == degree for m in self._terms)

    # arithmetic

    def _coerce(self, other) -> BracketPoly:
        if isinstance(other, BracketPoly):
            if other.mode != self.mode:
                raise VarsetMismatch(f"cannot combine {self.mode}-mode and {other.mode}-mode polynomials")
            return other
        if isinstance(other, (int, _RationalABC)):
            return BracketPoly.const(Fraction(other), self.mode)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return BracketPoly(self.mode, terms)

    __radd__ = __add__

    def __neg__(self):
        return BracketPoly(self.mode, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                terms[m] = terms.get(m, 0) + ca * cb
        return BracketPoly(self.mode, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BracketPoly.const(1, self.mode)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, BracketPoly):
            return self.mode == other.mode and self._terms == other._terms
        if isinstance(other, (int, _RationalABC)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mode, frozenset(self._terms.items())))
        return self._hash

    # substitution

    def shift(self, c: int) -> BracketPoly:
        """Return ``p(N - c)``.

        In N-mode this expands ``(N - c)^e``; in bracket-mode it re-indexes
        ``B_j -> B_{j+c}``.
        """
        if c == 0:
            return self
        if self.mode == BRACKET_MODE:
            return BracketPoly(
                self.mode,
                {tuple((v + c, e) for v, e in m): coeff for m, coeff in self._terms.items()},
            )
        terms: dict[Monomial, Fraction] = {}
        for m, coeff in self._terms.items():
            e = dict(m).get(0, 0)
            for i in range(e + 1):
                mono = ((0, i),) if i else ()
                terms[mono] = terms.get(mono, 0) + coeff * comb(e, i) * (-c) ** (e - i)
        return BracketPoly(self.mode, terms)

    def __call__(self, value: Scalar) -> Fraction:
        return poly_eval(self, value)

    def evaluate_brackets(self, values: Mapping[int, Scalar]) -> Fraction:
        """Numeric value with ``B_j`` replaced by ``values[j]``."""
        if self.mode != BRACKET_MODE:
            raise VarsetMismatch("evaluate_brackets needs a bracket-mode polynomial")
        total = Fraction(0)
        for m, coeff in self._terms.items():
            term = coeff
            for v, e in m:
                term *= Fraction(values[v]) ** e
            total += term
        return total

    # text

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"BracketPoly({self.mode!r}, {render(self)!r})"


def poly_arith(a: BracketPoly, b: BracketPoly, op: str) -> BracketPoly:
    """Apply ``op`` in ``{"add", "sub", "mul"}``."""
    if a.mode != b.mode:
        raise VarsetMismatch(f"cannot combine {a.mode}-mode and {b.mode}-mode polynomials")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def _require_n_mode(p: BracketPoly) -> None:
    if p.mode != N_MODE:
        raise VarsetMismatch("operation needs an N-mode polynomial")


def poly_shift_n(p: BracketPoly, c: int) -> BracketPoly:
    """Substitute ``N -> N - c`` in an N-mode polynomial."""
    _require_n_mode(p)
    return p.shift(c)


def poly_eval(p: BracketPoly, n: Scalar) -> Fraction:
    """Exact value of an N-mode polynomial at ``N = n`` (Horner)."""
    _require_n_mode(p)
    n = Fraction(n)
    coeffs = n_coefficients(p)
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * n + c
    return value


def n_coefficients(p: BracketPoly) -> list[Fraction]:
    """Ascending coefficient list of an N-mode polynomial (``[]`` for zero)."""
    _require_n_mode(p)
    coeffs = [Fraction(0)] * (p.degree() + 1)
    for m, c in p.terms.items():
        coeffs[dict(m).get(0, 0)] = c
    return coeffs


def poly_substitute_brackets(p: BracketPoly, box) -> BracketPoly:
    """Replace each ``B_j`` by ``[N-j]`` for a concrete box function.

    ``box`` is either a polynomial :class:`~deformed_stirling.box.BoxFunction`
    or the N-mode polynomial ``[N]`` itself.
    """
    if p.mode != BRACKET_MODE:
        raise VarsetMismatch("substitution needs a bracket-mode polynomial")
    expr = getattr(box, "expr", box)
    if not isinstance(expr, BracketPoly) or expr.mode != N_MODE:
        raise ValueError("box must be a concrete polynomial box function")
    cache: dict[int, BracketPoly] = {}
    result = BracketPoly.zero(N_MODE)
    for m, coeff in p.terms.items():
        term = BracketPoly.const(coeff, N_MODE)
        for v, e in m:
            if v not in cache:
                cache[v] = expr.shift(v)
            term = term * cache[v] ** e
        result = result + term
    return result


# --- text rendering -------------------------------------------------------


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def variable_name(mode: str, index: int) -> str:
    if mode == N_MODE:
        return "N"
    if index == 0:
        return "[N]"
    return f"[N-{index}]" if index > 0 else f"[N+{-index}]"


def _render(p: BracketPoly, var, power, times: str, scalar) -> str:
    pieces = []
    for i, (m, c) in enumerate(p.items()):
        mag = abs(c)
        factors = [var(v) if e == 1 else power(var(v), e) for v, e in m]
        mono = times.join(factors)
        if not mono:
            body = scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = scalar(mag) + times + mono
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) or "0"


def render(p: BracketPoly) -> str:
    """Normative text form, e.g. ``7*N^2 - 19*N + 13`` or ``2*[N] - [N-1] - [N-2]``."""
    return _render(
        p,
        var=lambda v: variable_name(p.mode, v),
        power=lambda name, e: f"{name}^{e}",
        times="*",
        scalar=format_rational,
    )


def render_latex(p: BracketPoly) -> str:
    """LaTeX form with juxtaposed factors, e.g. ``3[N]^{2}-3[N][N-1]``."""

    def scalar(c: Fraction) -> str:
        if c.denominator == 1:
            return str(c.numerator)
        return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"

    return _render(
        p,
        var=lambda v: variable_name(p.mode, v),
        power=lambda name, e: f"{name}^{{{e}}}",
        times="",
        scalar=scalar,
    )


def parse_poly(text: str, mode: str | None = None) -> BracketPoly:
    """Parse the normative text form back into a polynomial."""
    from .parser import parse_expression

    return parse_expression(text, mode=mode)
