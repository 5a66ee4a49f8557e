"""Extended-alphabet strings, Hamming and edit distance, alignments.

Symbols are stored as plain integers so that strings can be handed to the
compiled kernels as ``int64`` arrays:

========  ==================
symbol    integer code
========  ==================
0, 1      0, 1
``$``     2
``#``     3
c_i       3 + i  (i >= 1)
letter x  -(x + 1)
========  ==================

Letters only serve free-form examples (``SymbolString.from_letters``) and
can never collide with a stopper level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from hardstrings import _kernels
from hardstrings.errors import InvalidLevel, LengthMismatch, ParamError, ShapeMismatch

ZERO = 0
ONE = 1
DOLLAR = 2
HASH = 3

_COMPACT = {"0": ZERO, "1": ONE, "$": DOLLAR, "#": HASH}
_COMPACT_INV = {v: k for k, v in _COMPACT.items()}


def stopper_symbol(level: int) -> int:
    if level < 1:
        raise InvalidLevel(f"stopper level must be >= 1, got {level}")
    return HASH + level


def letter_symbol(code: int) -> int:
    if code < 0:
        raise ParamError(f"letter code must be >= 0, got {code}")
    return -(code + 1)


def is_stopper(sym: int) -> bool:
    return sym > HASH


def stopper_level(sym: int) -> int:
    if not is_stopper(sym):
        raise ParamError(f"symbol {sym} is not a stopper")
    return sym - HASH


def symbol_kind(sym: int) -> str:
    """One of ``zero``, ``one``, ``dollar``, ``hash``, ``stopper``, ``letter``."""
    if sym < 0:
        return "letter"
    if sym > HASH:
        return "stopper"
    return ("zero", "one", "dollar", "hash")[sym]


def format_token(sym: int) -> str:
    if sym in _COMPACT_INV:
        return _COMPACT_INV[sym]
    if sym > HASH:
        return f"c{sym - HASH}"
    return f"l{-sym - 1}"


def parse_token(tok: str) -> int:
    if tok in _COMPACT:
        return _COMPACT[tok]
    if len(tok) > 1 and tok[0] in "cl" and tok[1:].isdigit():
        value = int(tok[1:])
        return stopper_symbol(value) if tok[0] == "c" else letter_symbol(value)
    raise ParamError(f"unknown symbol token {tok!r}")


class SymbolString:
    """Immutable sequence of symbol codes."""

    def __init__(self, codes: Iterable[int] = ()):
        self._codes = tuple(int(c) for c in codes)

    # -- construction ---------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "SymbolString":
        """Parse compact (``"01$#"``) or token (``"0 c1 c1 1"``) form."""
        text = text.strip()
        if not text:
            return cls()
        if not any(ch.isspace() for ch in text) and all(ch in _COMPACT for ch in text):
            return cls(_COMPACT[ch] for ch in text)
        return cls(parse_token(tok) for tok in text.split())

    @classmethod
    def from_letters(cls, text: str) -> "SymbolString":
        return cls(letter_symbol(ord(ch)) for ch in text)

    @classmethod
    def from_bits(cls, bits: str) -> "SymbolString":
        if any(ch not in "01" for ch in bits):
            raise ParamError(f"not a binary string: {bits!r}")
        return cls(_COMPACT[ch] for ch in bits)

    # -- encoding -------------------------------------------------------
    @property
    def is_compact(self) -> bool:
        return all(c in _COMPACT_INV for c in self._codes)

    def to_text(self, encoding: str = "auto") -> str:
        if encoding == "auto":
            encoding = "compact" if self.is_compact else "tokens"
        if encoding == "compact":
            if not self.is_compact:
                raise ParamError("compact encoding needs symbols from {0,1,$,#}")
            return "".join(_COMPACT_INV[c] for c in self._codes)
        if encoding == "tokens":
            return " ".join(format_token(c) for c in self._codes)
        raise ParamError(f"unknown encoding {encoding!r}")

    # -- sequence protocol ---------------------------------------------
    @property
    def codes(self) -> tuple[int, ...]:
        return self._codes

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self._codes, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @property
    def length(self) -> int:
        return len(self._codes)

    def __len__(self) -> int:
        return len(self._codes)

    def __iter__(self):
        return iter(self._codes)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return SymbolString(self._codes[idx])
        return self._codes[idx]

    def __add__(self, other: "SymbolString") -> "SymbolString":
        if not isinstance(other, SymbolString):
            return NotImplemented
        return SymbolString(self._codes + other._codes)

    def __mul__(self, times: int) -> "SymbolString":
        return SymbolString(self._codes * times)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, SymbolString):
            return self._codes == other._codes
        return NotImplemented

    def __lt__(self, other: "SymbolString") -> bool:
        return self._codes < other._codes

    def __hash__(self) -> int:
        return hash(self._codes)

    def __repr__(self) -> str:
        return f"SymbolString({self.to_text()!r})"

    def alphabet(self) -> set[int]:
        return set(self._codes)

    def is_binary(self) -> bool:
        return all(c in (ZERO, ONE) for c in self._codes)

    def bits(self) -> str:
        """The binary subsequence of the string as ``'0'``/``'1'`` characters."""
        return "".join("1" if c == ONE else "0" for c in self._codes if c in (ZERO, ONE))


def as_symbols(x) -> SymbolString:
    """Coerce a ``str`` (compact/token form) or code sequence to ``SymbolString``."""
    if isinstance(x, SymbolString):
        return x
    if isinstance(x, str):
        return SymbolString.parse(x)
    return SymbolString(x)


def hamming(a, b) -> int:
    a, b = as_symbols(a), as_symbols(b)
    if len(a) != len(b):
        raise LengthMismatch(f"hamming needs equal lengths, got {len(a)} and {len(b)}")
    return sum(x != y for x, y in zip(a.codes, b.codes))


def edit_distance(a, b) -> int:
    """Unit-cost Levenshtein distance (substitution, insertion, deletion)."""
    a, b = as_symbols(a), as_symbols(b)
    return int(_kernels.edit_distance_kernel(a.array, b.array))


@dataclass(frozen=True)
class Alignment:
    """Non-crossing partial matching between two strings.

    ``pairs`` holds 1-based ``(i, j)`` positions, strictly increasing in both
    coordinates.
    """

    left_len: int
    right_len: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        prev_i = prev_j = 0
        for i, j in pairs:
            if not (1 <= i <= self.left_len and 1 <= j <= self.right_len):
                raise ShapeMismatch(f"pair {(i, j)} out of range")
            if i <= prev_i or j <= prev_j:
                raise ShapeMismatch("alignment edges cross or repeat a position")
            prev_i, prev_j = i, j

    @classmethod
    def identity(cls, n: int) -> "Alignment":
        return cls(n, n, tuple((i, i) for i in range(1, n + 1)))


def alignment_cost(al: Alignment, a, b) -> int:
    """Unpaired positions on both sides plus mismatched edges."""
    a, b = as_symbols(a), as_symbols(b)
    if al.left_len != len(a) or al.right_len != len(b):
        raise ShapeMismatch(
            f"alignment is {al.left_len}x{al.right_len}, strings are {len(a)}x{len(b)}"
        )
    mismatched = sum(a[i - 1] != b[j - 1] for i, j in al.pairs)
    unpaired = len(a) + len(b) - 2 * len(al.pairs)
    return unpaired + mismatched


def edit_table(a, b) -> np.ndarray:
    a, b = as_symbols(a), as_symbols(b)
    return _kernels.edit_table_kernel(a.array, b.array)


def optimal_alignment(a, b) -> Alignment:
    """An alignment of minimum cost, recovered by DP traceback.

    Ties prefer the diagonal step (match/substitute), then deleting from
    ``a``, then inserting from ``b``.
    """
    a, b = as_symbols(a), as_symbols(b)
    table = _kernels.edit_table_kernel(a.array, b.array)
    i, j = len(a), len(b)
    pairs = []
    while i > 0 or j > 0:
        here = table[i, j]
        if i > 0 and j > 0 and here == table[i - 1, j - 1] + (a[i - 1] != b[j - 1]):
            pairs.append((i, j))
            i -= 1
            j -= 1
        elif i > 0 and here == table[i - 1, j] + 1:
            i -= 1
        else:
            j -= 1
    return Alignment(len(a), len(b), tuple(reversed(pairs)))


def concat(parts: Sequence[SymbolString]) -> SymbolString:
    codes: list[int] = []
    for p in parts:
        codes.extend(p.codes)
    return SymbolString(codes)
