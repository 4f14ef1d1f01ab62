"""Counting h-vectors of artinian graded algebras by their length."""

from hvec.conditions import (
    ALL,
    SYMMETRIC,
    UNIMODAL,
    WLP,
    Condition,
    FirstEntry,
    PositivePart,
    first_difference,
    h_sequence,
    has_wlp,
    is_symmetric,
    is_unimodal,
    positive_part,
)
from hvec.enumeration import (
    LengthCensus,
    check_shift_identity,
    count_L,
    count_Lk,
    enumerate_L,
    s_of,
    tau_direct,
    tau_recursive,
)
from hvec.fibbound import BFamily, build_B, characterize_B, check_containment, fib
from hvec.macaulay import (
    CandidateVector,
    HVector,
    MacaulayRep,
    binom,
    is_h_vector,
    is_valid_growth,
    macaulay_bound,
    macaulay_rep,
)
from hvec.staircase import (
    Partition,
    Staircase,
    contains_monomial,
    distinct_partitions,
    hilbert_from_staircase,
    is_lex,
    minimal_generators,
    partition_to_staircase,
    render_staircase,
    staircase_to_partition,
)

__version__ = "0.1.0"
