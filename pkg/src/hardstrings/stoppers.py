"""Stoppers transform: binary strings to strings whose edit distance equals
the Hamming distance of the originals.

For ``d = 2**q`` the transform inserts a run ``S_q`` of ``6 * 2**q`` copies of
the level-``q`` stopper symbol between the two halves and recurses on each
half. The output has length ``d * (1 + 6 * log2(d))``.
"""

from __future__ import annotations

from typing import Iterable

from hardstrings.errors import EmptyInput, MixedLengths, NonBinarySymbol, NotPowerOfTwo
from hardstrings.strings import (
    ZERO,
    SymbolString,
    as_symbols,
    is_stopper,
    stopper_level,
    stopper_symbol,
)


def stopper(level: int) -> SymbolString:
    """The run ``c_level`` repeated ``6 * 2**level`` times."""
    return SymbolString([stopper_symbol(level)]) * (6 * 2**level)


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _check_binary(x: SymbolString) -> None:
    if not x.is_binary():
        raise NonBinarySymbol(f"expected a binary string, got {x!r}")


def next_power_of_two(n: int) -> int:
    return 1 << max(n - 1, 0).bit_length()


def pad_to_power_of_two(x, length: int | None = None) -> SymbolString:
    """Append zeros up to ``length`` (default: the next power of two >= |x|)."""
    x = as_symbols(x)
    if len(x) == 0:
        raise EmptyInput("cannot pad an empty string")
    _check_binary(x)
    target = next_power_of_two(len(x)) if length is None else length
    if not _is_power_of_two(target) or target < len(x):
        raise NotPowerOfTwo(f"cannot pad length {len(x)} to {target}")
    return x + SymbolString([ZERO] * (target - len(x)))


def transformed_length(d: int) -> int:
    if not _is_power_of_two(d):
        raise NotPowerOfTwo(f"d={d} is not a power of two")
    return d * (1 + 6 * (d.bit_length() - 1))


def stoppers_transform(x) -> SymbolString:
    x = as_symbols(x)
    if not _is_power_of_two(len(x)):
        raise NotPowerOfTwo(f"length {len(x)} is not a power of two")
    _check_binary(x)
    out: list[int] = []

    def rec(lo: int, hi: int) -> None:
        size = hi - lo
        if size == 1:
            out.append(x[lo])
            return
        half = size // 2
        rec(lo, lo + half)
        out.extend([stopper_symbol(size.bit_length() - 1)] * (6 * size))
        rec(lo + half, hi)

    rec(0, len(x))
    return SymbolString(out)


def transform_set(xs: Iterable) -> list[SymbolString]:
    """Pad every string to one common power of two and transform each.

    Order is preserved, so the result lines up index-for-index with ``xs``.
    """
    xs = [as_symbols(x) for x in xs]
    if not xs:
        return []
    lengths = {len(x) for x in xs}
    if len(lengths) != 1:
        raise MixedLengths(f"strings have lengths {sorted(lengths)}")
    target = next_power_of_two(lengths.pop())
    return [stoppers_transform(pad_to_power_of_two(x, target)) for x in xs]


def stopper_runs(s: SymbolString) -> dict[int, list[int]]:
    """Maximal runs of each stopper level: ``{level: [run lengths]}``."""
    runs: dict[int, list[int]] = {}
    prev = None
    for sym in s:
        if is_stopper(sym):
            level = stopper_level(sym)
            if sym == prev:
                runs[level][-1] += 1
            else:
                runs.setdefault(level, []).append(1)
        prev = sym
    return runs
