"""Gap strings over ``{$, #}`` used to separate dictionary strings in a text.

A mismatch-mode gap of length ``2d`` must keep every long prefix far (in
Hamming distance) from the suffix of the same length: for every shift
``1 <= s <= floor(d/2)``, comparing ``g`` with itself shifted by ``s`` gives at
least ``floor(d/2) + 1`` mismatches. The edit-mode gap is ``$^d #^d``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from hardstrings.errors import NotFound, ParamError, ShapeError
from hardstrings.strings import DOLLAR, HASH, SymbolString, as_symbols


class GapMode(str, enum.Enum):
    MISMATCH = "mismatch"
    EDIT = "edit"
    CUSTOM = "custom"  # user supplied, not certified


class Strategy(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    KWISE = "kwise"


@dataclass(frozen=True)
class GapString:
    symbols: SymbolString
    d: int
    mode: GapMode = GapMode.CUSTOM

    def __post_init__(self):
        object.__setattr__(self, "symbols", as_symbols(self.symbols))
        object.__setattr__(self, "mode", GapMode(self.mode))
        _check_shape(self.symbols, self.d)
        if self.mode is GapMode.EDIT and self.symbols != edit_gap_symbols(self.d):
            raise ShapeError("an edit-mode gap must be $^d #^d")
        if self.mode is GapMode.MISMATCH and not verify_gap(self.symbols, self.d):
            raise ShapeError(f"{self.symbols.to_text()} fails the gap property for d={self.d}")

    def __len__(self) -> int:
        return len(self.symbols)

    def to_text(self) -> str:
        return self.symbols.to_text()


def _check_shape(g: SymbolString, d: int) -> None:
    if d < 1:
        raise ParamError(f"d must be >= 1, got {d}")
    if len(g) != 2 * d:
        raise ShapeError(f"gap must have length 2d={2 * d}, got {len(g)}")
    if not set(g.codes) <= {DOLLAR, HASH}:
        raise ShapeError("gap alphabet must be {$, #}")


def edit_gap_symbols(d: int) -> SymbolString:
    return SymbolString([DOLLAR] * d + [HASH] * d)


def edit_gap(d: int) -> GapString:
    if d < 1:
        raise ParamError(f"d must be >= 1, got {d}")
    return GapString(edit_gap_symbols(d), d, GapMode.EDIT)


def gap_threshold(d: int) -> int:
    return d // 2 + 1


def gap_offsets(d: int) -> range:
    """Prefix lengths ``i`` that are checked: ``ceil(3d/2) <= i <= 2d - 1``."""
    return range(2 * d - d // 2, 2 * d)


def gap_violations(g, d: int) -> list[tuple[int, int]]:
    """``(i, distance)`` for every checked prefix length that falls short."""
    g = as_symbols(g)
    _check_shape(g, d)
    codes = g.codes
    need = gap_threshold(d)
    out = []
    for i in gap_offsets(d):
        dist = sum(x != y for x, y in zip(codes[:i], codes[2 * d - i:]))
        if dist < need:
            out.append((i, dist))
    return out


def verify_gap(g, d: int) -> bool:
    return not gap_violations(g, d)


def _bits_to_gap(bits) -> SymbolString:
    return SymbolString(HASH if b else DOLLAR for b in bits)


# -- k-wise independent bits --------------------------------------------------

# Irreducible polynomials over GF(2), indexed by degree (bit i = coeff of x^i).
IRREDUCIBLE = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


def gf_mul(a: int, b: int, m: int) -> int:
    """Product in GF(2^m) modulo ``IRREDUCIBLE[m]``."""
    poly = IRREDUCIBLE[m]
    top = 1 << m
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return out


def field_degree(count: int) -> int:
    m = max(1, math.ceil(math.log2(count))) if count > 1 else 1
    if m not in IRREDUCIBLE:
        raise ParamError(f"no field table for 2^{m} >= {count}")
    return m


def kwise_bits(seed: int, independence: int, count: int) -> list[int]:
    """``count`` bits that are ``independence``-wise independent over seeds.

    The seed's base-``2^m`` digits are the coefficients of a polynomial of
    degree ``independence - 1`` over GF(2^m), ``2^m >= count``. Bit ``j`` is the
    lowest bit of the polynomial evaluated at field element ``j``. Uniformity
    holds when the seed is uniform over ``[0, 2**(m * independence))``.
    """
    if independence < 1 or count < 1:
        raise ParamError("independence and count must be >= 1")
    if seed < 0:
        raise ParamError("seed must be non-negative")
    m = field_degree(count)
    mask = (1 << m) - 1
    coeffs = [(seed >> (i * m)) & mask for i in range(independence)]
    out = []
    for x in range(count):
        acc = 0
        for c in reversed(coeffs):
            acc = gf_mul(acc, x, m) ^ c
        out.append(acc & 1)
    return out


def kwise_seed_bits(independence: int, count: int) -> int:
    """Number of seed bits the generator actually reads."""
    return field_degree(count) * independence


# odd, so multiplication permutes the seed space
_SEED_MIX = 0x9E3779B97F4A7C15


def kwise_seed(index: int, independence: int, count: int) -> int:
    """The ``index``-th seed in a fixed permutation of the generator's seed space.

    Consecutive raw seeds differ only in low-degree coefficients, which makes
    nearby candidates nearly constant; multiplying by an odd constant modulo
    the seed-space size spreads them out while still visiting every seed.
    """
    size = 1 << kwise_seed_bits(independence, count)
    return (index * _SEED_MIX) % size


# -- search -------------------------------------------------------------------

def _first_lexicographic(d: int, budget: int | None) -> list[int] | None:
    """Lexicographically first 0/1 string (``$`` = 0) with the gap property.

    Depth-first over positions with ``$`` tried before ``#``; a branch is cut
    once some shift can no longer collect enough mismatches, so the result
    equals a plain lexicographic scan of all ``2^(2d)`` strings.
    """
    n = 2 * d
    shifts = list(range(1, d // 2 + 1))
    need = gap_threshold(d)
    bits = [0] * n
    mism = {s: 0 for s in shifts}
    visited = 0

    def feasible(pos: int) -> bool:
        # pairs (j, j+s) with j+s > pos are still open
        for s in shifts:
            open_pairs = (n - s) - max(0, pos + 1 - s)
            if mism[s] + open_pairs < need:
                return False
        return True

    def rec(pos: int) -> bool:
        nonlocal visited
        if pos == n:
            return True
        for v in (0, 1):
            visited += 1
            if budget is not None and visited > budget:
                raise NotFound(f"exhaustive gap search exceeded budget {budget}")
            bits[pos] = v
            for s in shifts:
                if pos >= s and bits[pos - s] != v:
                    mism[s] += 1
            if feasible(pos) and rec(pos + 1):
                return True
            for s in shifts:
                if pos >= s and bits[pos - s] != v:
                    mism[s] -= 1
        return False

    return bits if rec(0) else None


def mismatch_gap(d: int, strategy: Strategy | str = Strategy.EXHAUSTIVE, seed: int = 0,
                 budget: int | None = None) -> GapString:
    """Find a certified mismatch-mode gap string.

    ``exhaustive`` returns the lexicographically first passing string
    (``$ < #``); ``budget`` caps search nodes. ``random`` draws up to ``budget``
    uniform candidates from ``numpy.random.default_rng(seed)``. ``kwise`` tries
    generator seeds ``kwise_seed(seed), kwise_seed(seed+1), ...`` (``budget``
    of them) with independence ``2 ceil(log2 d)``. Every result is checked with
    ``verify_gap``.
    """
    if d < 2:
        raise ParamError(f"d must be >= 2, got {d}")
    strategy = Strategy(strategy)
    if strategy is Strategy.EXHAUSTIVE:
        bits = _first_lexicographic(d, budget)
        if bits is None:
            raise NotFound(f"no gap string of length {2 * d} exists")
        return GapString(_bits_to_gap(bits), d, GapMode.MISMATCH)

    if budget is None:
        raise ParamError(f"strategy {strategy.value} needs a budget")
    if strategy is Strategy.RANDOM:
        rng = np.random.default_rng(seed)
        for _ in range(budget):
            cand = _bits_to_gap(rng.integers(0, 2, size=2 * d).tolist())
            if verify_gap(cand, d):
                return GapString(cand, d, GapMode.MISMATCH)
        raise NotFound(f"no gap string among {budget} random candidates")

    independence = max(1, 2 * math.ceil(math.log2(d)))
    for offset in range(budget):
        cand = _bits_to_gap(kwise_bits(kwise_seed(seed + offset, independence, 2 * d),
                                       independence, 2 * d))
        if verify_gap(cand, d):
            return GapString(cand, d, GapMode.MISMATCH)
    raise NotFound(f"no gap string among {budget} k-wise seeds")


EXHAUSTIVE_MAX_LENGTH = 24
AUTO_BUDGET = 100_000


def auto_gap(d: int, seed: int = 0, budget: int = AUTO_BUDGET) -> GapString:
    """Exhaustive search while ``2d <= 24``, k-wise seed enumeration beyond."""
    if 2 * d <= EXHAUSTIVE_MAX_LENGTH:
        return mismatch_gap(d, Strategy.EXHAUSTIVE)
    return mismatch_gap(d, Strategy.KWISE, seed=seed, budget=budget)
