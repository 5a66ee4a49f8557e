"""Hard instances and reductions for text indexing with k mismatches or
k differences, checked against brute-force oracles."""

from hardstrings.errors import (
    AlphabetClash,
    EmptyInput,
    EmptySet,
    FormatError,
    GapNotFound,
    HardStringsError,
    LengthMismatch,
    MixedLengths,
    NonBinarySymbol,
    NotFound,
    NotPowerOfTwo,
    ParamError,
    PatternTooLong,
    ReductionError,
    ShapeError,
    ShapeMismatch,
    TooLarge,
)
from hardstrings.gapstrings import (
    GapMode,
    GapString,
    Strategy,
    auto_gap,
    edit_gap,
    gap_violations,
    kwise_bits,
    mismatch_gap,
    verify_gap,
)
from hardstrings.hardgen import (
    BlockParams,
    BlockString,
    BoundsReport,
    DictionaryConfig,
    count_queries,
    count_queries_paper,
    count_within_ball_brute,
    count_within_ball_closed_form,
    enumerate_base_strings,
    enumerate_queries,
    evaluate_bounds,
    generate_dictionary,
    intersection_upper_bound,
)
from hardstrings.instance import Instance, Mode
from hardstrings.reduction import (
    TextArtifact,
    bichromatic_closest_pair,
    build_text,
    dict_lookup_via_text,
    transform_instance,
    verify_edit_offsets,
    verify_offset_exclusion,
    wrap_query,
)
from hardstrings.solvers import (
    MatchAnswer,
    SearchStats,
    TrieIndex,
    dict_lookup_brute,
    text_search_edit,
    text_search_hamming,
    trie_build,
    trie_lookup,
)
from hardstrings.stoppers import stoppers_transform, transform_set, transformed_length
from hardstrings.strings import (
    Alignment,
    SymbolString,
    alignment_cost,
    edit_distance,
    hamming,
    optimal_alignment,
)

__version__ = "0.1.0"
