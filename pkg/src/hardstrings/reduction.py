"""Dictionary look-up reduced to text indexing, plus instance transforms.

The dictionary ``S_1 .. S_m`` (each of length ``d``) becomes the text
``T = G S_1 G S_2 G ... S_m G`` of length ``3n + 2d`` and a query ``Q`` becomes
the pattern ``G Q G``. The 1-based start of ``S_i`` in ``T`` is
``(3(i-1) + 2) d + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hardstrings import _kernels
from hardstrings.errors import (
    AlphabetClash,
    EmptySet,
    LengthMismatch,
    ParamError,
    ReductionError,
    TooLarge,
)
from hardstrings.gapstrings import GapMode, GapString, auto_gap, edit_gap, mismatch_gap
from hardstrings.instance import Instance, Mode
from hardstrings.solvers import (
    MatchAnswer,
    text_search_edit,
    text_search_hamming,
    window_distances,
)
from hardstrings.stoppers import transform_set
from hardstrings.strings import (
    DOLLAR,
    HASH,
    SymbolString,
    as_symbols,
    concat,
    edit_distance,
    hamming,
    optimal_alignment,
)


@dataclass(frozen=True)
class TextArtifact:
    text: SymbolString
    gap: GapString
    d: int
    layout: tuple[tuple[int, int], ...]  # (dict index, 1-based start of S_i)
    mode: Mode = Mode.HAMMING

    @property
    def count(self) -> int:
        return len(self.layout)

    def block(self, index: int) -> SymbolString:
        start = self.layout[index - 1][1]
        return self.text[start - 1:start - 1 + self.d]

    def dictionary(self) -> list[SymbolString]:
        return [self.block(i) for i, _ in self.layout]


def block_start(index: int, d: int) -> int:
    return (3 * (index - 1) + 2) * d + 1


def _check_gap_alphabet(strings: Sequence[SymbolString]) -> None:
    for s in strings:
        if DOLLAR in s.codes or HASH in s.codes:
            raise AlphabetClash(f"{s.to_text()} uses a gap symbol ($ or #)")


def build_text(inst: Instance, gap: GapString | SymbolString | str | None = None,
               epsilon: float = 0.0, **gap_search) -> TextArtifact:
    """Interleave the dictionary with a gap string.

    Hamming mode uses ``gap`` if given (a bare string becomes an uncertified
    custom gap). Otherwise it searches with ``mismatch_gap(d, **gap_search)``,
    or with ``auto_gap(d)`` when no search options are passed.
    Edit mode always uses ``$^d #^d``.
    """
    if len(inst) == 0:
        raise EmptySet("cannot build a text from an empty dictionary")
    d = inst.d
    _check_gap_alphabet(inst.strings)
    if not (1 + epsilon) * inst.k < d:
        raise ParamError(f"need (1+eps)k < d, got k={inst.k}, eps={epsilon}, d={d}")
    if inst.mode is Mode.EDIT:
        g = edit_gap(d)
        if gap is not None and as_symbols(gap.symbols if isinstance(gap, GapString) else gap) != g.symbols:
            raise ParamError("edit-mode reduction requires the $^d #^d gap")
    elif gap is None:
        g = mismatch_gap(d, **gap_search) if gap_search else auto_gap(d)
    elif isinstance(gap, GapString):
        g = gap
    else:
        g = GapString(as_symbols(gap), d, GapMode.CUSTOM)
    if g.d != d:
        raise LengthMismatch(f"gap built for d={g.d}, dictionary has d={d}")

    parts = [g.symbols]
    for s in inst.strings:
        parts += [s, g.symbols]
    text = concat(parts)
    layout = tuple((i, block_start(i, d)) for i in range(1, len(inst) + 1))
    return TextArtifact(text, g, d, layout, inst.mode)


def wrap_query(q, g: GapString) -> SymbolString:
    """``G Q G``."""
    q = as_symbols(q)
    if len(q) != g.d:
        raise LengthMismatch(f"query length {len(q)} != d={g.d}")
    _check_gap_alphabet([q])
    return g.symbols + q + g.symbols


def _check_k(art: TextArtifact, k: int) -> None:
    if not 0 <= k < art.d:
        raise ParamError(f"need 0 <= k < d, got k={k}, d={art.d}")


def dict_lookup_via_text(art: TextArtifact, q, k: int,
                         mode: Mode | str | None = None) -> list[MatchAnswer]:
    """Answer a dictionary query by searching ``G Q G`` in the text."""
    mode = art.mode if mode is None else Mode(mode)
    _check_k(art, k)
    q = as_symbols(q)
    pattern = wrap_query(q, art.gap)
    period = 3 * art.d
    answers: dict[int, MatchAnswer] = {}

    if mode is Mode.HAMMING:
        for start, dist in text_search_hamming(art.text, pattern, k):
            if (start - 1) % period:
                raise ReductionError(
                    f"window at {start} is within {dist} <= k={k} but not aligned to a dictionary string"
                )
            idx = (start - 1) // period + 1
            answers[idx] = MatchAnswer(idx, dist, (start, start + len(pattern) - 1))
        return sorted(answers.values())

    for end, dist, start in text_search_edit(art.text, pattern, k):
        idx = _certified_block(art, pattern, start, end)
        if idx in answers:
            continue
        true_dist = edit_distance(q, art.block(idx))
        if true_dist > dist:
            raise ReductionError(
                f"substring [{start}, {end}] at distance {dist} maps to S_{idx} at distance {true_dist}"
            )
        answers[idx] = MatchAnswer(idx, true_dist, (start, end))
    return sorted(answers.values())


def _certified_block(art: TextArtifact, pattern: SymbolString, start: int, end: int) -> int:
    """Dictionary string overlapped most by the part of ``T[start..end]``
    that an optimal alignment assigns to ``Q``."""
    d = art.d
    window = art.text[start - 1:end]
    al = optimal_alignment(pattern, window)
    left = [j for i, j in al.pairs if i <= 2 * d]
    right = [j for i, j in al.pairs if i > 3 * d]
    lo = (max(left) + 1 if left else 1) + start - 1
    hi = (min(right) - 1 if right else len(window)) + start - 1
    best, best_overlap = None, 0
    for idx, s0 in art.layout:
        overlap = min(hi, s0 + d - 1) - max(lo, s0) + 1
        if overlap > best_overlap:
            best, best_overlap = idx, overlap
    if best is None:
        # Q aligned to (almost) nothing; fall back to the nearest block
        mid = (lo + hi) / 2
        best = min(art.layout, key=lambda e: (abs(e[1] + (d - 1) / 2 - mid), e[0]))[0]
    return best


def offset_scan(art: TextArtifact, q) -> list[tuple[int, int, bool]]:
    """``(start, distance, aligned)`` for every length-``5d`` window."""
    pattern = wrap_query(q, art.gap)
    dists = window_distances(art.text, pattern)
    period = 3 * art.d
    return [(s + 1, int(dist), s % period == 0) for s, dist in enumerate(dists)]


def verify_offset_exclusion(art: TextArtifact, q, k: int) -> bool:
    """Every window not aligned to a dictionary string is farther than ``k``."""
    if art.mode is not Mode.HAMMING:
        raise ParamError("offset exclusion applies to Hamming-mode artifacts")
    _check_k(art, k)
    return all(dist > k for _, dist, aligned in offset_scan(art, q) if not aligned)


def verify_edit_offsets(art: TextArtifact, q, k: int, limit: int = 50_000_000) -> bool:
    """For every substring ``T'`` with ``ED(GQG, T') <= k`` some dictionary
    string ``S`` has ``ED(Q, S) <= ED(GQG, T')``.

    All substrings are enumerated through one DP table per start position;
    only lengths within ``k`` of ``|GQG|`` can qualify.
    """
    if art.mode is not Mode.EDIT:
        raise ParamError("edit offset verification applies to Edit-mode artifacts")
    _check_k(art, k)
    q = as_symbols(q)
    pattern = wrap_query(q, art.gap)
    m, n = len(pattern), len(art.text)
    max_len = m + k
    if n * m * max_len > limit:
        raise TooLarge(f"substring enumeration over a text of length {n} exceeds {limit} cells")
    best_dict = min(edit_distance(q, s) for s in art.dictionary())
    text = art.text.array
    for s in range(n):
        table = _kernels.edit_table_kernel(pattern.array, text[s:s + max_len])
        for length in range(max(0, m - k), min(max_len, n - s) + 1):
            e = table[m, length]
            if e <= k and best_dict > e:
                return False
    return True


def transform_instance(inst: Instance) -> Instance:
    """Stoppers-transform a binary Hamming instance into an Edit instance."""
    if inst.mode is not Mode.HAMMING:
        raise AlphabetClash("transform expects a Hamming-mode instance")
    for s in inst.strings:
        if not s.is_binary():
            raise AlphabetClash(f"{s.to_text()} is not binary")
    return Instance(transform_set(inst.strings), inst.k, Mode.EDIT)


def bichromatic_closest_pair(red: Sequence, blue: Sequence,
                             mode: Mode | str = Mode.HAMMING) -> tuple[int, int, int]:
    """Exact minimum over all red/blue pairs; 1-based indices, ties to the
    lexicographically smallest ``(r, b)``."""
    red = [as_symbols(s) for s in red]
    blue = [as_symbols(s) for s in blue]
    if not red or not blue:
        raise EmptySet("both colour classes must be non-empty")
    dist = hamming if Mode(mode) is Mode.HAMMING else edit_distance
    best = None
    for r, x in enumerate(red, start=1):
        for b, y in enumerate(blue, start=1):
            e = dist(x, y)
            if best is None or e < best[2]:
                best = (r, b, e)
    return best
