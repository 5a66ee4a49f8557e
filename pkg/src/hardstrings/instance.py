"""Dictionary instances shared by the solvers, reductions and file formats."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from hardstrings.errors import MixedLengths, ParamError
from hardstrings.strings import SymbolString, as_symbols


class Mode(str, enum.Enum):
    HAMMING = "hamming"
    EDIT = "edit"


@dataclass(frozen=True)
class Instance:
    """An ordered dictionary of equal-length strings plus a distance budget."""

    strings: tuple[SymbolString, ...]
    k: int = 0
    mode: Mode = Mode.HAMMING

    def __init__(self, strings: Iterable, k: int = 0, mode: Mode | str = Mode.HAMMING):
        strings = tuple(as_symbols(s) for s in strings)
        lengths = {len(s) for s in strings}
        if len(lengths) > 1:
            raise MixedLengths(f"dictionary strings have lengths {sorted(lengths)}")
        if k < 0:
            raise ParamError(f"k must be >= 0, got {k}")
        object.__setattr__(self, "strings", strings)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "mode", Mode(mode))

    @property
    def d(self) -> int:
        return len(self.strings[0]) if self.strings else 0

    @property
    def n(self) -> int:
        """Total dictionary length."""
        return self.d * len(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def alphabet(self) -> set[int]:
        out: set[int] = set()
        for s in self.strings:
            out |= s.alphabet()
        return out
