"""Double occurrence words: canonical forms, repeat/return insertions,
the structure of equivalent insertion pairs, and the insertion graph."""

from .classifier import (
    PairReport,
    StructureWitness,
    check_structure,
    enumerate_equivalent_pairs,
    pair_equivalent,
    predict_pairs,
    verify_generator_families,
    verify_no_mixed,
    verify_sequential_gaps,
    verify_structure_witnesses,
)
from .generators import gen_int, gen_nes, gen_tangled
from .insertions import (
    InsertionKind,
    InsertionSpec,
    PairPositionType,
    classify_positions,
    insert,
    insert_normalized,
    insertions_equal,
    parse_spec,
    reverse_spec,
    rho,
    tau,
)
from .patterns import (
    LsDecomposition,
    PatternInstance,
    find_repeat_words,
    find_return_words,
    is_palindrome,
    ls_verify,
    maximal_instances,
    strip_common_factor,
)
from .word_graph import WordGraph, build, export_graph
from .words import (
    EMPTY_WORD,
    Word,
    all_canonical_dows,
    dow_size,
    equivalent,
    format_word,
    is_ascending,
    is_dow,
    is_sow,
    normalize,
    parse_word,
    reverse,
)

__all__ = [
    "EMPTY_WORD",
    "InsertionKind",
    "InsertionSpec",
    "LsDecomposition",
    "PairPositionType",
    "PairReport",
    "PatternInstance",
    "StructureWitness",
    "Word",
    "WordGraph",
    "all_canonical_dows",
    "build",
    "check_structure",
    "classify_positions",
    "dow_size",
    "enumerate_equivalent_pairs",
    "equivalent",
    "export_graph",
    "find_repeat_words",
    "find_return_words",
    "format_word",
    "gen_int",
    "gen_nes",
    "gen_tangled",
    "insert",
    "insert_normalized",
    "insertions_equal",
    "is_ascending",
    "is_dow",
    "is_palindrome",
    "is_sow",
    "ls_verify",
    "maximal_instances",
    "normalize",
    "pair_equivalent",
    "parse_spec",
    "parse_word",
    "predict_pairs",
    "reverse",
    "reverse_spec",
    "rho",
    "strip_common_factor",
    "tau",
    "verify_generator_families",
    "verify_no_mixed",
    "verify_sequential_gaps",
    "verify_structure_witnesses",
]
