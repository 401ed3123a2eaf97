"""Jordan block decompositions of tensor products of unipotent blocks over GF(p).

The recursion lives in :mod:`jordanblocks.partitions`, the brute-force matrix
oracle in :mod:`jordanblocks.oracle`, cross-checking sweeps in
:mod:`jordanblocks.verify`, and the command-line tool in
:mod:`jordanblocks.cli`.
"""

from .oracle import (
    DEFAULT_MAX_DIM,
    GfMatrix,
    RankSequence,
    kronecker,
    oracle_jordan_partition,
    oracle_rank_sequence,
    partition_from_ranks,
    rank_gfp,
    rank_sequence_of_nilpotent,
    tensor_rank_sequence,
    unipotent_jordan_block,
)
from .partitions import (
    MAX_BLOCK_SIZE,
    BlockPair,
    CaseId,
    Composition,
    JordanDecomposition,
    Prime,
    RadixParams,
    as_prime,
    classify_case,
    clear_cache,
    composition,
    is_standard,
    jordan_partition,
    lambda_from_composition,
    radix_params,
    reverse,
    standard_predicate_p2,
)
from .verify import (
    SUITE_NAMES,
    Failure,
    SweepSpec,
    VerifyReport,
    check_corollary1,
    check_invariants,
    check_oracle_agreement,
    check_periodicity,
    check_reflection,
    check_theorem1,
)

__version__ = "0.1.0"
