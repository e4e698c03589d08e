"""Box functions ``[N]`` defining the deformed boson algebra.

A box is either *symbolic* (every ``[N-j]`` stays an opaque indeterminate
``B_j``) or a concrete polynomial in ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BRACKET_MODE, N_MODE, BracketPoly, poly_substitute_brackets
from .parser import parse_expression

SYMBOLIC = "symbolic"
POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class BoxFunction:
    kind: str
    expr: BracketPoly | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == SYMBOLIC:
            if self.expr is not None:
                raise ValueError("symbolic box carries no expression")
        elif self.kind == POLYNOMIAL:
            if self.expr is None or self.expr.mode != N_MODE:
                raise ValueError("polynomial box needs an N-mode expression")
        else:
            raise ValueError(f"unknown box kind {self.kind!r}")

    @property
    def is_symbolic(self) -> bool:
        return self.kind == SYMBOLIC

    @property
    def mode(self) -> str:
        """Variable set of every polynomial derived from this box."""
        return BRACKET_MODE if self.is_symbolic else N_MODE

    @property
    def is_constant(self) -> bool:
        return not self.is_symbolic and self.expr.is_constant()

    def one(self) -> BracketPoly:
        return BracketPoly.const(1, self.mode)

    def zero(self) -> BracketPoly:
        return BracketPoly.zero(self.mode)

    def label(self) -> str:
        if self.name:
            return self.name
        return str(self.expr) if self.expr is not None else SYMBOLIC

    def __str__(self):
        if self.is_symbolic:
            return SYMBOLIC
        return f"[N] = {self.expr}"


def symbolic() -> BoxFunction:
    return BoxFunction(SYMBOLIC, name="symbolic")


def canonical() -> BoxFunction:
    return BoxFunction(POLYNOMIAL, BracketPoly.n_var(), name="canonical")


def canonical_shifted(c: int) -> BoxFunction:
    if c == 0:
        return canonical()
    return BoxFunction(POLYNOMIAL, BracketPoly.n_var() + c, name=f"canonical_shifted({c})")


def so3() -> BoxFunction:
    n = BracketPoly.n_var()
    return BoxFunction(POLYNOMIAL, -n * (n - 1) / 2, name="so3")


def so21() -> BoxFunction:
    n = BracketPoly.n_var()
    return BoxFunction(POLYNOMIAL, n * (n - 1) / 2, name="so21")


PRESETS = {
    "symbolic": symbolic,
    "canonical": canonical,
    "so3": so3,
    "so21": so21,
}


def parse_box(src: str) -> BoxFunction:
    """Parse a preset name (case-insensitive) or a polynomial expression in N."""
    key = src.strip().lower()
    if key in PRESETS:
        return PRESETS[key]()
    expr = parse_expression(src, mode=N_MODE)
    for name in ("canonical", "so3", "so21"):
        preset = PRESETS[name]()
        if preset.expr == expr:
            return preset
    return BoxFunction(POLYNOMIAL, expr)


def bracket(box: BoxFunction, j: int) -> BracketPoly:
    """``[N-j]`` for this box: ``B_j`` when symbolic, the shifted polynomial otherwise."""
    if j < 0:
        raise ValueError("bracket index must be nonnegative")
    return _bracket(box, j)


def _bracket(box: BoxFunction, j: int) -> BracketPoly:
    # Negative j gives [N+|j|]; only the rewriting oracle needs those.
    if box.is_symbolic:
        return BracketPoly.bracket_var(j)
    return box.expr.shift(j)


def bracket_diff(box: BoxFunction, j: int, r: int) -> BracketPoly:
    """``[N-j] - [N-r]``."""
    if j < 0 or r < 0:
        raise ValueError("bracket indices must be nonnegative")
    return _bracket(box, j) - _bracket(box, r)


def substitute_brackets(p: BracketPoly, box: BoxFunction) -> BracketPoly:
    """Specialize a bracket-mode polynomial to a concrete box."""
    if box.is_symbolic:
        raise ValueError("cannot substitute a symbolic box")
    return poly_substitute_brackets(p, box)


def box_value(box: BoxFunction, n) -> Fraction:
    """``[n]`` for a concrete box."""
    return box.expr(n)
