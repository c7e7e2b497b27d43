"""Bijections between 0/1 words and subset-closed families of integer sets.

A forbidden-structure operator turns a set of positive integers into the set
of integers it rules out; a greedy encoder maps any bit word to a member of
the operator's family, and a star-deletion decoder inverts it.  Iterating the
decoder gives a discrete dynamical system whose fixed points and limits this
package computes over explicit finite prefixes.
"""

from .codec import (
    DEFAULT_CANDIDATE_CEILING,
    CandidateCeilingExceeded,
    DecodeResult,
    EncodeResult,
    decode,
    encode,
    roundtrip_ok,
)
from .core import (
    IntSetPrefix,
    RhoVerdict,
    characteristic,
    delete_stars,
    from_characteristic,
    prefix_distance,
)
from .dynamics import (
    CompletenessVerdict,
    OrbitRecord,
    SplitResult,
    SufficiencyEvidence,
    completeness_sufficient_condition,
    decode_orbit,
    encoder_fixed_points,
    encoder_image,
    find_limit,
    is_encoder_fixed_point,
    split_limit,
    ultimately_complete_on,
)
from .operators import (
    OperatorKind,
    apply_J,
    apply_Ji,
    coprime,
    finite_sums,
    forbids,
    format_operator,
    is_member,
    norm_k,
    parse_operator,
    prime_factors,
    sum_free,
)
from .relations import (
    DEFAULT_MAX_NORM_BOUND,
    CostTable,
    Relation,
    find_anchored_relation,
    find_relation,
    min_relation_norm,
)

__all__ = [
    "CandidateCeilingExceeded",
    "CompletenessVerdict",
    "CostTable",
    "DecodeResult",
    "DEFAULT_CANDIDATE_CEILING",
    "DEFAULT_MAX_NORM_BOUND",
    "EncodeResult",
    "IntSetPrefix",
    "OperatorKind",
    "OrbitRecord",
    "Relation",
    "RhoVerdict",
    "SplitResult",
    "SufficiencyEvidence",
    "apply_J",
    "apply_Ji",
    "characteristic",
    "completeness_sufficient_condition",
    "coprime",
    "decode",
    "decode_orbit",
    "delete_stars",
    "encode",
    "encoder_fixed_points",
    "encoder_image",
    "find_anchored_relation",
    "find_limit",
    "find_relation",
    "finite_sums",
    "forbids",
    "format_operator",
    "from_characteristic",
    "is_encoder_fixed_point",
    "is_member",
    "min_relation_norm",
    "norm_k",
    "parse_operator",
    "prefix_distance",
    "prime_factors",
    "roundtrip_ok",
    "split_limit",
    "sum_free",
    "ultimately_complete_on",
]
