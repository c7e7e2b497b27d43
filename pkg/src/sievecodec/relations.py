"""Search for integer linear relations with a bounded coefficient norm.

A *relation* on a finite set of positive integers is an integer coefficient
vector y with sum(y_b * b) == 0; its norm is sum(y_b ** 2).  The searches here
are exhaustive and exact: a relation of norm below a bound k can use at most
k - 1 nonzero coefficients, each of magnitude at most isqrt(k - 1), so the
space is finite.  No lattice reduction, no approximation.

Witness determinism: relations come in +/- pairs (negate every coefficient),
so witnesses are canonicalised to a positive anchor coefficient.  Among
minimal-norm canonical witnesses the one with the lexicographically smallest
coefficient tuple (coefficients read along increasing elements) is returned,
and repeated calls return the identical object contents.

The incremental :class:`CostTable` answers existence queries in O(1) after a
vectorised update per added element; it backs the hot paths elsewhere in the
package.  Module-level caches are grow-only and idempotent, so concurrent use
is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

#: Largest norm bound the search machinery accepts; beyond it we refuse loudly
#: instead of silently truncating the search space.
DEFAULT_MAX_NORM_BOUND = 16

# A relation of norm < 16 splits into an anchor part (coefficient magnitude
# <= 3) and a rest of norm <= 14, so one table budget serves every bound.
_TABLE_BUDGET = DEFAULT_MAX_NORM_BOUND - 2

_INF = np.int16(999)


@dataclass(frozen=True)
class Relation:
    """An integer relation: coefficients by element, plus the norm.

    ``coeffs`` maps each participating element to its nonzero coefficient,
    stored as (element, coefficient) pairs in increasing element order.
    """

    coeffs: tuple[tuple[int, int], ...]
    norm: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(tuple(p) for p in self.coeffs))
        prev = 0
        for element, coeff in self.coeffs:
            if element <= prev:
                raise ValueError("coefficients must be keyed by increasing elements")
            if coeff == 0:
                raise ValueError("stored coefficients must be nonzero")
            prev = element
        if self.norm != sum(c * c for _, c in self.coeffs):
            raise ValueError("norm does not match the sum of squared coefficients")
        if sum(e * c for e, c in self.coeffs) != 0:
            raise ValueError("coefficients do not satisfy sum(y_b * b) == 0")

    def coefficient(self, element: int) -> int:
        for e, c in self.coeffs:
            if e == element:
                return c
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __str__(self) -> str:
        # Largest element first, e.g. "1*6 - 2*3 = 0 (norm 5)".
        parts: list[str] = []
        for element, coeff in reversed(self.coeffs):
            sign = "-" if coeff < 0 else "+"
            term = f"{abs(coeff)}*{element}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        body = " ".join(parts) if parts else "0"
        return f"{body} = 0 (norm {self.norm})"


class CostTable:
    """Minimum sum of squared coefficients realising each weighted sum.

    Tracks, over the elements added so far, the cheapest integer vector y
    (cost sum(y**2), one coefficient per element) achieving every value of
    sum(y_b * b).  Exact for costs up to ``budget``: any such vector over
    elements <= ``limit`` keeps all its partial sums within
    ``budget * limit``, so the bounded array loses nothing.  Adding an
    element beyond ``limit`` rebuilds the table at a doubled limit.
    """

    __slots__ = ("budget", "limit", "elements", "_cost", "_offset")

    def __init__(self, budget: int, limit: int = 64) -> None:
        if budget < 1:
            raise ValueError("budget must be at least 1")
        self.budget = budget
        self.limit = max(1, limit)
        self.elements: list[int] = []
        self._alloc()

    def _alloc(self) -> None:
        self._offset = self.budget * self.limit
        self._cost = np.full(2 * self._offset + 1, _INF, dtype=np.int16)
        self._cost[self._offset] = 0

    def _grow(self, need: int) -> None:
        while self.limit < need:
            self.limit *= 2
        replay = self.elements
        self.elements = []
        self._alloc()
        for b in replay:
            self.add(b)

    def add(self, element: int) -> None:
        """Admit one more element; relaxes every sum over its coefficients."""
        if element < 1:
            raise ValueError("elements must be positive")
        if element > self.limit:
            self._grow(element)
        base = self._cost
        out = base.copy()
        j = 1
        while j * j <= self.budget:
            w = np.int16(j * j)
            shift = j * element
            np.minimum(out[shift:], base[:-shift] + w, out=out[shift:])
            np.minimum(out[:-shift], base[shift:] + w, out=out[:-shift])
            j += 1
        self.elements.append(element)
        self._cost = out

    def min_cost(self, value: int) -> int | None:
        """Cheapest cost achieving ``value``, or None if above budget."""
        v = abs(value)
        if v > self._offset:
            return None
        c = int(self._cost[self._offset + v])
        return c if c <= self.budget else None


@lru_cache(maxsize=2048)
def _cached_table(elements: tuple[int, ...]) -> CostTable:
    table = CostTable(_TABLE_BUDGET, limit=max(elements, default=1))
    for b in elements:
        table.add(b)
    return table


def min_relation_norm(base: frozenset[int] | set[int], anchor: int) -> int | None:
    """Smallest norm of a relation on base | {anchor} with a nonzero anchor
    coefficient, or None when every candidate exceeds the table budget.

    Valid for deciding "norm < k" for any k up to DEFAULT_MAX_NORM_BOUND.
    """
    rest = tuple(sorted(set(base) - {anchor}))
    table = _cached_table(rest)
    best: int | None = None
    for y in (1, 2, 3):
        c = table.min_cost(y * anchor)
        if c is not None:
            total = c + y * y
            if best is None or total < best:
                best = total
    return best


@lru_cache(maxsize=65536)
def _lex_min_witness(
    variables: tuple[int, ...], anchor: int, target: int, pinned_unit: bool
) -> tuple[int, ...] | None:
    """Lexicographically least coefficient vector of norm exactly ``target``.

    Coefficients are assigned along increasing elements, each tried in
    increasing numeric order, so the first full assignment found is the
    lexicographic minimum.  The anchor coefficient is restricted to positive
    values (canonical sign), or pinned to exactly 1 when ``pinned_unit``.
    """
    n = len(variables)
    largest = variables[-1]
    out = [0] * n

    def descend(i: int, total: int, used: int) -> bool:
        if i == n:
            return total == 0 and used == target
        remaining = target - used
        # With remaining budget R every later contribution is at most R * max
        # element (sum |y| <= sum y^2 for integers), so a larger imbalance is dead.
        if abs(total) > remaining * largest:
            return False
        v = variables[i]
        if v == anchor:
            choices = (1,) if pinned_unit else range(1, isqrt(remaining) + 1)
        else:
            bound = isqrt(remaining)
            choices = range(-bound, bound + 1)
        for y in choices:
            out[i] = y
            if descend(i + 1, total + y * v, used + y * y):
                return True
        out[i] = 0
        return False

    return tuple(out) if descend(0, 0, 0) else None


def _validated_elements(values, *, forbid: int | None = None, name: str = "set") -> frozenset[int]:
    elements = frozenset(values)
    for b in elements:
        if not isinstance(b, int) or b < 1:
            raise ValueError(f"{name} must contain positive integers, got {b!r}")
    if forbid is not None and forbid in elements:
        raise ValueError(f"{name} must not contain {forbid}")
    return elements


def _check_norm_bound(k: int, max_norm_bound: int) -> None:
    if max_norm_bound > DEFAULT_MAX_NORM_BOUND:
        raise ValueError(
            f"norm bounds above {DEFAULT_MAX_NORM_BOUND} are not supported"
        )
    if k < 2:
        raise ValueError("norm bound k must be at least 2")
    if k > max_norm_bound:
        raise ValueError(f"norm bound {k} exceeds the configured maximum {max_norm_bound}")


def _relation_from(variables: tuple[int, ...], vector: tuple[int, ...]) -> Relation:
    coeffs = tuple((e, c) for e, c in zip(variables, vector) if c != 0)
    return Relation(coeffs, sum(c * c for c in vector))


def find_relation(
    base, anchor: int, k: int, *, max_norm_bound: int = DEFAULT_MAX_NORM_BOUND
) -> Relation | None:
    """Minimal relation on base | {anchor} with y_anchor != 0 and norm < k.

    Returns None when no such relation exists.  The witness is deterministic:
    minimal norm, positive anchor coefficient, then lexicographically least
    coefficients along increasing elements.
    """
    _check_norm_bound(k, max_norm_bound)
    elements = _validated_elements(base, forbid=anchor, name="base set")
    if not isinstance(anchor, int) or anchor < 1:
        raise ValueError(f"anchor must be a positive integer, got {anchor!r}")
    best = min_relation_norm(elements, anchor)
    if best is None or best >= k:
        return None
    variables = tuple(sorted(elements | {anchor}))
    vector = _lex_min_witness(variables, anchor, best, False)
    assert vector is not None, "existence and witness search disagree"
    return _relation_from(variables, vector)


def find_anchored_relation(
    base, k: int, *, max_norm_bound: int = DEFAULT_MAX_NORM_BOUND
) -> Relation | None:
    """Minimal relation on base | {1} with the coefficient of 1 pinned to 1
    and norm at most k - 2, or None.
    """
    _check_norm_bound(k, max_norm_bound)
    elements = _validated_elements(base, forbid=1, name="base set")
    rest = tuple(sorted(elements))
    cost = _cached_table(rest).min_cost(1)
    if cost is None or cost + 1 > k - 2:
        return None
    variables = tuple(sorted(elements | {1}))
    vector = _lex_min_witness(variables, 1, cost + 1, True)
    assert vector is not None, "existence and witness search disagree"
    return _relation_from(variables, vector)
