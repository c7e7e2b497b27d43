"""Forbidden-structure operators on sets of positive integers.

An operator J maps a finite set S to the set of integers it *forbids*, with
J(empty) = empty.  Four operators ship:

* ``sumfree``    -- J(S) = {a + b : a, b in S} (a == b allowed),
* ``normk:<k>``  -- values admitting an integer relation of norm below k with
  a nonzero coefficient on the value itself (see :mod:`sievecodec.relations`),
* ``coprime``    -- multiples of any prime factor of any member of S,
* ``fs``         -- sums of nonempty finite subsets of S (experimental; see
  the family note below).

Family membership.  A prefix {a1 < a2 < ...} belongs to the family of an
operator when no element lies in J of its strict predecessors, i.e.
a_{i+1} not in J({a1, ..., ai}) for every i.  Note that the weaker-looking
condition "A is disjoint from the union of its gap-restricted forbidden sets"
holds for *every* set by construction (the gap sets are carved out of the
complement of A), so it defines no family at all; the predecessor condition
is the one that reproduces classical sum-free and coprime semantics, and it
is the one implemented here.

For ``sumfree``, ``normk`` and ``coprime`` the family is closed under taking
subsets (each J is monotone in S, and the predecessor test only ever shrinks).
For ``fs`` closure is *not* asserted: its status is an open question, and the
test suite records what it observes on samples instead of assuming an answer.

All operations are pure; the prime-factor cache is grow-only and idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .core import IntSetPrefix
from .relations import DEFAULT_MAX_NORM_BOUND, CostTable, min_relation_norm

_KINDS = ("sumfree", "normk", "coprime", "fs")


@dataclass(frozen=True)
class OperatorKind:
    """Which forbidden-structure operator is in force."""

    kind: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind == "normk":
            if not isinstance(self.k, int) or self.k < 2:
                # k < 2 makes the relation condition unsatisfiable: a nonzero
                # coefficient already contributes norm >= 1.
                raise ValueError("normk requires an integer norm bound k >= 2")
            if self.k > DEFAULT_MAX_NORM_BOUND:
                raise ValueError(
                    f"norm bound {self.k} exceeds the supported maximum "
                    f"{DEFAULT_MAX_NORM_BOUND}"
                )
        elif self.k is not None:
            raise ValueError(f"operator {self.kind!r} takes no parameter")

    def __str__(self) -> str:
        return format_operator(self)


def sum_free() -> OperatorKind:
    return OperatorKind("sumfree")


def norm_k(k: int) -> OperatorKind:
    return OperatorKind("normk", k)


def coprime() -> OperatorKind:
    return OperatorKind("coprime")


def finite_sums() -> OperatorKind:
    return OperatorKind("fs")


ALL_OPERATOR_NAMES = ("sumfree", "normk:<k>", "coprime", "fs")


def format_operator(op: OperatorKind) -> str:
    return f"normk:{op.k}" if op.kind == "normk" else op.kind


def parse_operator(text: str) -> OperatorKind:
    """Parse ``sumfree | normk:<k> | coprime | fs``."""
    name, _, param = text.strip().partition(":")
    if name == "normk":
        try:
            return norm_k(int(param))
        except ValueError as exc:
            raise ValueError(f"bad operator {text!r}: {exc}") from None
    if param:
        raise ValueError(f"operator {name!r} takes no parameter")
    if name not in _KINDS:
        raise ValueError(f"unknown operator {text!r}; expected one of {ALL_OPERATOR_NAMES}")
    return OperatorKind(name)


# --- prime factors -----------------------------------------------------------

# Smallest-prime-factor sieve, grown on demand.  Rebuilds are idempotent, so a
# racing refill at worst duplicates work.
_spf: list[int] = [0, 1]


def _ensure_spf(n: int) -> None:
    global _spf
    if n < len(_spf):
        return
    size = max(n + 1, 2 * len(_spf))
    table = list(range(size))
    for p in range(2, isqrt(size - 1) + 1):
        if table[p] == p:
            for multiple in range(p * p, size, p):
                if table[multiple] == multiple:
                    table[multiple] = p
    table[1] = 1
    _spf = table


def prime_factors(n: int) -> frozenset[int]:
    """Distinct prime factors of n (empty for n == 1)."""
    if n < 1:
        raise ValueError("prime_factors expects a positive integer")
    _ensure_spf(n)
    out = set()
    while n > 1:
        p = _spf[n]
        out.add(p)
        while n % p == 0:
            n //= p
    return frozenset(out)


# --- incremental oracles -----------------------------------------------------
#
# Each oracle ingests the elements of a growing set (in any order) and answers
# "does the current set forbid this value?".  The encoder, decoder and the
# membership test all walk a prefix left to right, so an incremental structure
# avoids recomputing J from scratch at every position.


class _SumFreeOracle:
    __slots__ = ("_members", "_sorted")

    def __init__(self) -> None:
        self._members: set[int] = set()
        self._sorted: list[int] = []

    def add(self, element: int) -> None:
        self._members.add(element)
        self._sorted.append(element)
        self._sorted.sort()

    def forbids(self, value: int) -> bool:
        members = self._members
        for b in self._sorted:
            if 2 * b > value:
                return False
            if value - b in members:
                return True
        return False


class _NormOracle:
    __slots__ = ("k", "_table")

    def __init__(self, k: int, limit: int) -> None:
        self.k = k
        self._table = CostTable(k - 1, limit)

    def add(self, element: int) -> None:
        self._table.add(element)

    def forbids(self, value: int) -> bool:
        # Exists y != 0 on the value with the rest of the set making up the
        # difference: min_cost(y * value) + y**2 < k.  The value must not be
        # one of the added elements (callers only probe outside the set).
        y = 1
        while y * y < self.k:
            c = self._table.min_cost(y * value)
            if c is not None and c + y * y < self.k:
                return True
            y += 1
        return False


class _CoprimeOracle:
    __slots__ = ("_primes",)

    def __init__(self) -> None:
        self._primes: set[int] = set()

    def add(self, element: int) -> None:
        self._primes |= prime_factors(element)

    def forbids(self, value: int) -> bool:
        return any(value % p == 0 for p in self._primes)


class _SubsetSumOracle:
    __slots__ = ("_mask",)

    def __init__(self) -> None:
        self._mask = 0  # bit s set <=> s is a nonempty subset sum

    def add(self, element: int) -> None:
        self._mask |= (self._mask << element) | (1 << element)

    def forbids(self, value: int) -> bool:
        return bool((self._mask >> value) & 1)


def incremental_oracle(op: OperatorKind, limit_hint: int = 64):
    """Fresh oracle for one left-to-right sweep under ``op``."""
    if op.kind == "sumfree":
        return _SumFreeOracle()
    if op.kind == "normk":
        return _NormOracle(op.k, max(1, limit_hint))
    if op.kind == "coprime":
        return _CoprimeOracle()
    return _SubsetSumOracle()


# --- the operator itself -----------------------------------------------------


def forbids(op: OperatorKind, base, value: int) -> bool:
    """Is ``value`` in J(base)?  Works whether or not value is in base."""
    if value < 1:
        raise ValueError("values below 1 are outside the domain")
    elements = set(base)
    if not elements:
        return False
    if op.kind == "normk":
        # A nonzero coefficient on the value itself, with the rest of the set
        # balancing it; valid for value inside or outside the set.
        best = min_relation_norm(elements, value)
        return best is not None and best < op.k
    oracle = incremental_oracle(op, limit_hint=max(max(elements), value))
    for b in sorted(elements):
        oracle.add(b)
    return oracle.forbids(value)


def apply_J(op: OperatorKind, base, lo: int, hi: int) -> set[int]:
    """J(base) intersected with the interval [lo, hi].

    ``lo`` must be at least 1; an empty interval (hi < lo) yields the empty
    set.  J(empty) is empty for every operator.
    """
    if lo < 1:
        raise ValueError(f"interval must start at 1 or later, got lo={lo}")
    elements = set(base)
    out: set[int] = set()
    if hi < lo or not elements:
        return out
    if op.kind == "sumfree":
        ordered = sorted(elements)
        for i, a in enumerate(ordered):
            if 2 * a > hi:
                break
            for b in ordered[i:]:
                s = a + b
                if s > hi:
                    break
                if s >= lo:
                    out.add(s)
        return out
    if op.kind == "normk":
        for value in range(lo, hi + 1):
            best = min_relation_norm(elements, value)
            if best is not None and best < op.k:
                out.add(value)
        return out
    if op.kind == "coprime":
        primes: set[int] = set()
        for a in elements:
            primes |= prime_factors(a)
        for p in primes:
            first = lo + (-lo) % p
            out.update(range(first, hi + 1, p))
        return out
    # fs: subset sums with a cutoff at hi keep the enumeration exact and finite.
    mask = 0
    cutoff = (1 << (hi + 1)) - 1
    for b in sorted(elements):
        if b > hi:
            break
        mask = (mask | (mask << b) | (1 << b)) & cutoff
    for value in range(lo, hi + 1):
        if (mask >> value) & 1:
            out.add(value)
    return out


def apply_Ji(op: OperatorKind, prefix: IntSetPrefix, i: int) -> set[int]:
    """Forbidden values in the i-th gap of a prefix.

    For i < |A| this is J({a1..ai}) restricted to the open interval
    (a_i, a_{i+1}); for i == |A| the tail interval (a_i, horizon] is used,
    which is the largest interval the prefix certifies.
    """
    n = len(prefix.elements)
    if i < 1 or i > n:
        raise ValueError(f"gap index must be in [1, {n}], got {i}")
    head = prefix.elements[:i]
    lo = head[-1] + 1
    hi = prefix.elements[i] - 1 if i < n else prefix.horizon
    return apply_J(op, head, lo, hi)


def is_member(op: OperatorKind, prefix: IntSetPrefix) -> bool:
    """Does the prefix satisfy the family condition of ``op``?

    True iff no element is forbidden by its strict predecessors.  The empty
    prefix and singletons are always members.
    """
    elements = prefix.elements
    if len(elements) < 2:
        return True
    oracle = incremental_oracle(op, limit_hint=elements[-1])
    oracle.add(elements[0])
    for a in elements[1:]:
        if oracle.forbids(a):
            return False
        oracle.add(a)
    return True
