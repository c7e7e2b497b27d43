"""Iterating the decoder as a self-map: orbits, limits, fixed points,
and ultimate completeness.

Under the identification of sets with their indicator words, decoding under
the norm-k operator maps one set prefix to another (with a smaller certified
horizon, one position lost per forbidden mark).  Per step, each element moves
down by the number of stars below it, so consecutive gaps never grow; a
position is *frozen* once one decode pass produces no star at or below it,
because from then on every later pass sees the identical prefix below that
boundary.  Frozen prefixes are the finite certificates of orbit limits used
throughout this module.

Orbit computation is sequential per orbit; distinct orbits are independent
and all records are immutable once returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import decode, encode
from .core import IntSetPrefix, characteristic, from_characteristic
from .operators import OperatorKind, incremental_oracle, is_member, norm_k
from .relations import Relation, find_anchored_relation

#: Exhaustive fixed-point enumeration refuses ground sets larger than this.
FIXED_POINT_ENUMERATION_BOUND = 32


@dataclass(frozen=True)
class OrbitRecord:
    """A decoded orbit: every iterate, stars shed per step, and the verdict.

    ``iterates[0]`` is the starting prefix and each following entry is one
    decode step (horizon shrinks by the stars produced).  ``verdict`` is one
    of ``"ok"``, ``"stabilized"``, ``"horizon-exhausted"`` or
    ``"insufficient-horizon"``.  For stabilized limit searches,
    ``stabilized_prefix`` holds the frozen prefix and
    ``iterations_to_stability`` the index of the iterate that froze it; a
    failed limit search still reports the largest frozen prefix found.
    """

    iterates: tuple[IntSetPrefix, ...]
    stars_per_step: tuple[int, ...]
    stabilized_prefix: IntSetPrefix | None
    iterations_to_stability: int | None
    verdict: str


def _step(k: int, prefix: IntSetPrefix) -> tuple[IntSetPrefix, int, int]:
    """One decode pass: next iterate, star count, leading star-free length."""
    result = decode(norm_k(k), prefix)
    first_star = result.ternary.find("*")
    frozen_len = prefix.horizon if first_star < 0 else first_star
    return from_characteristic(result.bits), result.ternary.count("*"), frozen_len


def decode_orbit(k: int, start: IntSetPrefix, steps: int) -> OrbitRecord:
    """Apply the decoder ``steps`` times, recording every iterate."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    iterates = [start]
    stars: list[int] = []
    current = start
    verdict = "ok"
    for _ in range(steps):
        if current.horizon < 1:
            verdict = "horizon-exhausted"
            break
        current, shed, _ = _step(k, current)
        iterates.append(current)
        stars.append(shed)
    return OrbitRecord(tuple(iterates), tuple(stars), None, None, verdict)


def find_limit(k: int, start: IntSetPrefix, prefix_len: int) -> OrbitRecord:
    """Iterate the decoder until the first ``prefix_len`` positions freeze.

    Freezing is certified by a decode pass with no star at or below the
    boundary; the returned ``stabilized_prefix`` is then exact for the orbit
    limit.  If the certified horizon drops below ``prefix_len`` first, the
    verdict is ``"insufficient-horizon"`` and the largest prefix that did
    freeze is reported instead; a wrong limit is never returned.
    """
    if prefix_len < 1:
        raise ValueError("prefix_len must be at least 1")
    iterates = [start]
    stars: list[int] = []
    best_frozen: IntSetPrefix | None = None
    current = start
    iteration = 0
    while current.horizon >= prefix_len:
        nxt, shed, frozen_len = _step(k, current)
        iterates.append(nxt)
        stars.append(shed)
        if best_frozen is None or frozen_len > best_frozen.horizon:
            best_frozen = current.truncate(frozen_len)
        if frozen_len >= prefix_len:
            return OrbitRecord(
                tuple(iterates),
                tuple(stars),
                current.truncate(prefix_len),
                iteration,
                "stabilized",
            )
        current = nxt
        iteration += 1
    return OrbitRecord(
        tuple(iterates), tuple(stars), best_frozen, None, "insufficient-horizon"
    )


def is_encoder_fixed_point(k: int, prefix: IntSetPrefix) -> bool:
    """Does encoding the indicator word of ``prefix`` reproduce it?

    Equivalent to running the encoder on ``characteristic(prefix)`` and
    comparing on the common certified horizon, but classified position by
    position so a mismatch stops the scan early.
    """
    horizon = prefix.horizon
    members = prefix.members()
    oracle = incremental_oracle(norm_k(k), limit_hint=max(8, 2 * horizon))
    candidate = 0
    for step in range(1, horizon + 1):
        candidate += 1
        while oracle.forbids(candidate):
            if candidate <= horizon and candidate in members:
                return False  # claimed member, but skipped as forbidden
            candidate += 1
        accept = step in members
        inside = candidate <= horizon and candidate in members
        if accept:
            if candidate <= horizon and not inside:
                return False  # encoder admits an integer the prefix excludes
            oracle.add(candidate)
        elif inside:
            return False  # encoder rejects an element of the prefix
    return True


def encoder_fixed_points(
    k: int, max_element: int, *, bound: int = FIXED_POINT_ENUMERATION_BOUND
) -> list[IntSetPrefix]:
    """All subsets of [1, max_element] fixed by the encoder at norm bound k.

    Each subset is tested as a prefix with horizon ``max_element``, i.e. with
    an all-zero indicator tail, which is the only reading under which a finite
    set can be a fixed point at all.  Exhaustive; refuses ground sets beyond
    ``bound``.
    """
    if max_element < 1:
        raise ValueError("max_element must be at least 1")
    if max_element > bound:
        raise ValueError(
            f"exhaustive enumeration over [1, {max_element}] exceeds the bound {bound}"
        )
    found: list[IntSetPrefix] = []
    for mask in range(1 << max_element):
        elements = tuple(i + 1 for i in range(max_element) if (mask >> i) & 1)
        candidate = IntSetPrefix(elements, max_element)
        if is_encoder_fixed_point(k, candidate):
            found.append(candidate)
    return found


@dataclass(frozen=True)
class SplitResult:
    """Partition of a stabilized limit prefix into a decoder-fixed head and
    the rest.

    ``fixed`` is the longest leading run of elements that the decoder maps to
    itself (verified by re-applying the decoder); ``residual`` is whatever
    remains.  ``nontrivial`` is False when only the empty head is fixed.
    ``head_is_encoder_fixed`` reports whether the part of the head below
    twice the least element is also an encoder fixed point, and
    ``residual_above_double_min`` whether the residual starts at or above
    twice the least element; both are observations, not guarantees.
    """

    fixed: IntSetPrefix
    residual: IntSetPrefix
    nontrivial: bool
    head_is_encoder_fixed: bool
    residual_above_double_min: bool


def _is_decoder_fixed(k: int, prefix: IntSetPrefix) -> bool:
    """Re-apply the decoder and compare on the certified horizon."""
    result = decode(norm_k(k), prefix)
    certified = len(result.bits)
    if prefix.elements and prefix.elements[-1] > certified:
        return False  # too many stars to certify the elements themselves
    return from_characteristic(result.bits).elements == tuple(
        a for a in prefix.elements if a <= certified
    )


def split_limit(k: int, limit_prefix: IntSetPrefix) -> SplitResult:
    """Split a stabilized limit into its decoder-fixed head and residual."""
    elements = limit_prefix.elements
    fixed_count = 0
    for m in range(len(elements), -1, -1):
        if _is_decoder_fixed(k, IntSetPrefix(elements[:m], limit_prefix.horizon)):
            fixed_count = m
            break
    fixed = IntSetPrefix(elements[:fixed_count], limit_prefix.horizon)
    residual = IntSetPrefix(elements[fixed_count:], limit_prefix.horizon)
    nontrivial = fixed_count > 0 or not elements
    head_fixed = True
    residual_high = True
    if fixed_count:
        least = elements[0]
        head_bound = min(2 * least - 1, limit_prefix.horizon)
        head_fixed = is_encoder_fixed_point(k, fixed.truncate(head_bound))
        residual_high = all(a >= 2 * least for a in residual.elements)
    return SplitResult(fixed, residual, nontrivial, head_fixed, residual_high)


@dataclass(frozen=True)
class CompletenessVerdict:
    """Window-restricted ultimate-completeness verdict.

    ``kind`` is ``"complete-on-window"``, ``"incomplete"`` (with the least
    unforbidden non-member as ``witness``), or ``"undecided"`` when the
    window starts beyond the certified horizon.  Finite data never yields an
    unconditional "complete".
    """

    kind: str
    witness: int | None = None


def ultimately_complete_on(
    op: OperatorKind, prefix: IntSetPrefix, window_start: int
) -> CompletenessVerdict:
    """Is every non-member in [window_start, horizon] forbidden by the
    elements below it?"""
    if window_start < 1:
        raise ValueError("window_start must be at least 1")
    if window_start > prefix.horizon:
        return CompletenessVerdict("undecided")
    members = prefix.members()
    oracle = incremental_oracle(op, limit_hint=max(1, prefix.horizon))
    for position in range(1, prefix.horizon + 1):
        if position in members:
            oracle.add(position)
        elif position >= window_start and not oracle.forbids(position):
            return CompletenessVerdict("incomplete", position)
    return CompletenessVerdict("complete-on-window")


@dataclass(frozen=True)
class SufficiencyEvidence:
    """The three-part sufficient condition for ultimate completeness of the
    encoder image of an orbit limit, with per-part evidence.

    * ``in_family``: the prefix is a member at norm bound k,
    * ``augmented_escapes``: adjoining 1 breaks membership at bound k - 1,
    * ``unit_relation``: a relation on the set plus 1 with the coefficient of
      1 pinned to 1 and norm at most k - 2 (None when there is none).

    ``holds`` is the conjunction.
    """

    in_family: bool
    augmented_escapes: bool
    unit_relation: Relation | None
    holds: bool


def completeness_sufficient_condition(
    k: int, prefix: IntSetPrefix
) -> SufficiencyEvidence:
    """Evaluate the sufficient condition at norm bound k (k >= 3)."""
    if k < 3:
        raise ValueError("the condition needs k >= 3 so that k - 1 is a valid bound")
    in_family = is_member(norm_k(k), prefix)
    augmented = IntSetPrefix.of(set(prefix.elements) | {1}, max(prefix.horizon, 1))
    augmented_escapes = not is_member(norm_k(k - 1), augmented)
    if 1 in prefix.members():
        # Adjoining 1 changes nothing, so the middle condition decides alone;
        # the pinned-coefficient search is only defined without 1.
        return SufficiencyEvidence(in_family, augmented_escapes, None, False)
    witness = find_anchored_relation(prefix.elements, k)
    holds = in_family and augmented_escapes and witness is not None
    return SufficiencyEvidence(in_family, augmented_escapes, witness, holds)


def encoder_image(k: int, prefix: IntSetPrefix):
    """Encode the indicator word of a prefix at norm bound k.

    Convenience for the completeness pipeline: the claim under test is about
    the encoder image of a stabilized orbit limit.
    """
    return encode(norm_k(k), characteristic(prefix))
