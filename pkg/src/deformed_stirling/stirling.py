"""Deformed Stirling polynomials ``P(n, k)`` by three independent routes.

``P(n, k)`` is the coefficient of ``(A†)^k A^k`` in the normally ordered
expansion of ``(A†A)^n``.  Every route is expressed through the bracket
differences ``d_j = [N] - [N-j]``.

* recurrence: ``P(n+1, k) = P(n, k-1) + d_k P(n, k)``, the reference route;
* ogf: coefficient extraction from ``prod_j x / (1 - d_j x)``;
* explicit: ``sum_r d_r^(n-1) / prod_{j != r} (d_r - d_j)`` evaluated
  pointwise and interpolated (concrete boxes only).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import BRACKET_MODE, N_MODE, BracketPoly, variable_name
from .box import BoxFunction, bracket_diff
from .errors import DegenerateBox, InterpolationMismatch, UnsupportedRoute

log = logging.getLogger(__name__)

ROUTES = ("recurrence", "ogf", "explicit")

# evaluation points scanned before giving up on finding non-colliding ones
_MAX_SCAN = 10_000
_EXTRA_CHECK_POINTS = 3


@dataclass(frozen=True)
class StirlingTable:
    """Triangle ``(n, k) -> P(n, k)`` for ``1 <= k <= n <= nmax``.

    Indexing outside the triangle follows the boundary convention: zero,
    except ``table[0, 0] == 1``.
    """

    box: BoxFunction
    nmax: int
    entries: dict[tuple[int, int], BracketPoly] = field(repr=False)
    route: str = "recurrence"

    def __getitem__(self, nk: tuple[int, int]) -> BracketPoly:
        n, k = nk
        if n == 0 and k == 0:
            return self.box.one()
        if n <= 0 or k <= 0 or k > n:
            return self.box.zero()
        if n > self.nmax:
            raise KeyError(f"row {n} beyond nmax={self.nmax}")
        return self.entries[n, k]

    def keys(self):
        return sorted(self.entries)

    def with_entry(self, n: int, k: int, value: BracketPoly) -> StirlingTable:
        """Copy with one entry replaced (used to build negative controls)."""
        entries = dict(self.entries)
        entries[n, k] = value
        return StirlingTable(self.box, self.nmax, entries, self.route)


def difference(box: BoxFunction, j: int) -> BracketPoly:
    """``d_j = [N] - [N-j]``."""
    return bracket_diff(box, 0, j)


def stirling_recurrence(box: BoxFunction, nmax: int) -> StirlingTable:
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    d = {k: difference(box, k) for k in range(1, nmax + 1)}
    zero = box.zero()
    prev = {0: box.one()}  # row n = 0
    entries = {}
    for n in range(nmax):
        row = {}
        for k in range(1, n + 2):
            value = prev.get(k - 1, zero) + d[k] * prev.get(k, zero)
            row[k] = value
            entries[n + 1, k] = value
        prev = row
    return StirlingTable(box, nmax, entries, "recurrence")


def stirling_ogf(box: BoxFunction, k: int, nmax: int) -> list[BracketPoly]:
    """Coefficients of ``x^k .. x^nmax`` in ``prod_{j=1..k} x / (1 - d_j x)``."""
    if not 1 <= k <= nmax:
        raise ValueError("need 1 <= k <= nmax")
    order = nmax - k  # truncation degree after factoring out x^k
    series = [box.one()] + [box.zero()] * order
    for j in range(1, k + 1):
        d = difference(box, j)
        geometric = [box.one()]
        for _ in range(order):
            geometric.append(geometric[-1] * d)
        series = [
            sum((series[i] * geometric[m - i] for i in range(m + 1)), box.zero())
            for m in range(order + 1)
        ]
    return series


def stirling_ogf_table(box: BoxFunction, nmax: int) -> StirlingTable:
    entries = {}
    for k in range(1, nmax + 1):
        for offset, value in enumerate(stirling_ogf(box, k, nmax)):
            entries[k + offset, k] = value
    return StirlingTable(box, nmax, entries, "ogf")


# --- explicit formula ------------------------------------------------------


def check_nondegenerate(box: BoxFunction, k: int) -> None:
    """Raise :class:`DegenerateBox` if some ``[N-j] - [N-r]`` vanishes identically."""
    for j in range(k + 1):
        for r in range(j + 1, k + 1):
            if bracket_diff(box, j, r).is_zero():
                raise DegenerateBox(
                    f"{variable_name(BRACKET_MODE, j)} - {variable_name(BRACKET_MODE, r)} "
                    f"is identically zero for box {box.label()}"
                )


def explicit_value(box: BoxFunction, n: int, k: int, at) -> Fraction | None:
    """The explicit formula at ``N = at``; ``None`` if a denominator vanishes there."""
    at = Fraction(at)
    top = box.expr(at)
    d = {r: top - box.expr(at - r) for r in range(1, k + 1)}
    total = Fraction(0)
    for r in range(1, k + 1):
        denom = Fraction(1)
        for j in range(1, k + 1):
            if j != r:
                # [N-j] - [N-r] = d_r - d_j
                denom *= d[r] - d[j]
        if denom == 0:
            return None
        total += d[r] ** (n - 1) / denom
    return total


def degree_bound(box: BoxFunction, n: int, k: int) -> int:
    """Upper bound on ``deg_N P(n, k)``.

    ``P(n, k)`` is homogeneous of degree ``n-k`` in differences of brackets,
    each of degree ``deg[N] - 1``; ``k*(n-k)`` is kept as a floor.
    """
    step = max(box.expr.degree() - 1, 0)
    return max(k * (n - k), step * (n - k))


def sample_points(box: BoxFunction, n: int, k: int, count: int) -> tuple[list[int], list[int]]:
    """``count`` consecutive integers from ``k+1`` avoiding pointwise collisions.

    Returns ``(points, skipped)`` where ``skipped`` lists the integers at which
    two brackets ``[N-j]`` and ``[N-r]`` coincide.
    """
    points, skipped = [], []
    x = k + 1
    while len(points) < count:
        if x - (k + 1) > _MAX_SCAN:
            raise DegenerateBox("could not find enough evaluation points without collisions")
        if explicit_value(box, n, k, x) is None:
            skipped.append(x)
        else:
            points.append(x)
        x += 1
    return points, skipped


def interpolate(xs: list, ys: list) -> BracketPoly:
    """Exact N-mode interpolating polynomial through ``(xs[i], ys[i])`` (Newton form)."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    m = len(xs)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    n_var = BracketPoly.n_var()
    result = BracketPoly.zero(N_MODE)
    for i in range(m - 1, -1, -1):
        result = result * (n_var - xs[i]) + coef[i]
    return result


def stirling_explicit(box: BoxFunction, n: int, k: int) -> BracketPoly:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if box.is_symbolic:
        raise UnsupportedRoute("the explicit route needs a concrete polynomial box")
    check_nondegenerate(box, k)
    needed = degree_bound(box, n, k) + 1
    points, skipped = sample_points(box, n, k, needed + _EXTRA_CHECK_POINTS)
    if skipped:
        log.debug("explicit P(%d,%d): skipped colliding points %s", n, k, skipped)
    fit, check = points[:needed], points[needed:]
    poly = interpolate(fit, [explicit_value(box, n, k, x) for x in fit])
    for x in check:
        if poly(x) != explicit_value(box, n, k, x):
            raise InterpolationMismatch(f"interpolated P({n},{k}) disagrees with the formula at N={x}")
    return poly


def stirling_explicit_table(box: BoxFunction, nmax: int) -> StirlingTable:
    entries = {(n, k): stirling_explicit(box, n, k) for n in range(1, nmax + 1) for k in range(1, n + 1)}
    return StirlingTable(box, nmax, entries, "explicit")


def compute_table(box: BoxFunction, nmax: int, route: str = "recurrence") -> StirlingTable:
    if route == "recurrence":
        return stirling_recurrence(box, nmax)
    if route == "ogf":
        return stirling_ogf_table(box, nmax)
    if route == "explicit":
        return stirling_explicit_table(box, nmax)
    raise ValueError(f"unknown route {route!r}")


# --- classical numbers -------------------------------------------------------


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1) + (0,)
    return (0,) + tuple(prev[k - 1] + k * prev[k] for k in range(1, n + 1))


def classical_stirling(n: int, k: int) -> int:
    """Stirling number of the second kind ``S(n, k)``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling_row(n)[k]


def is_homogeneous_entry(table: StirlingTable, n: int, k: int) -> bool:
    """Symbolic-mode check: every term has degree ``n-k`` in ``B_0..B_k`` only."""
    p = table[n, k]
    return p.is_homogeneous(n - k) and p.indices() <= set(range(k + 1))


__all__ = [
    "ROUTES",
    "StirlingTable",
    "check_nondegenerate",
    "classical_stirling",
    "compute_table",
    "degree_bound",
    "difference",
    "explicit_value",
    "interpolate",
    "is_homogeneous_entry",
    "sample_points",
    "stirling_explicit",
    "stirling_explicit_table",
    "stirling_ogf",
    "stirling_ogf_table",
    "stirling_recurrence",
]
