"""Reference solvers for dictionary look-up and text search."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from hardstrings import _kernels
from hardstrings.errors import LengthMismatch, PatternTooLong
from hardstrings.instance import Instance, Mode
from hardstrings.strings import SymbolString, as_symbols, edit_distance, hamming


@dataclass(frozen=True, order=True)
class MatchAnswer:
    dict_index: int  # 1-based
    distance: int
    evidence: tuple[int, int] | None = field(default=None, compare=False)


@dataclass
class SearchStats:
    nodes_visited: int = 0
    dp_cells: int = 0
    wall_time: float = 0.0  # seconds


def dict_lookup_brute(inst: Instance, q, k: int, mode: Mode | str | None = None) -> list[MatchAnswer]:
    """Every dictionary string within distance ``k`` of ``q``, by index."""
    q = as_symbols(q)
    mode = inst.mode if mode is None else Mode(mode)
    if mode is Mode.HAMMING:
        if len(q) != inst.d:
            raise LengthMismatch(f"query length {len(q)} != d={inst.d}")
        dist = hamming
    else:
        dist = edit_distance
    out = []
    for i, s in enumerate(inst.strings, start=1):
        e = dist(q, s)
        if e <= k:
            out.append(MatchAnswer(i, e))
    return out


def text_search_hamming(t, p, k: int) -> list[tuple[int, int]]:
    """``(start, distance)`` for every 1-based window start within ``k``."""
    t, p = as_symbols(t), as_symbols(p)
    if len(p) > len(t):
        raise PatternTooLong(f"pattern of length {len(p)} exceeds text length {len(t)}")
    if len(p) == 0:
        return [(s, 0) for s in range(1, len(t) + 2)]
    dists = window_distances(t, p)
    hits = np.flatnonzero(dists <= k)
    return [(int(s) + 1, int(dists[s])) for s in hits]


def window_distances(t: SymbolString, p: SymbolString) -> np.ndarray:
    """Hamming distance of ``p`` to every length-``|p|`` window of ``t``."""
    windows = sliding_window_view(t.array, len(p))
    return (windows != p.array).sum(axis=1)


def text_search_edit(t, p, k: int) -> list[tuple[int, int, int]]:
    """``(end, distance, witness_start)`` per 1-based end position.

    ``distance`` is the minimum edit distance of ``p`` to any substring
    ``t[s..end]``; ``witness_start`` is the smallest ``s`` attaining it
    (``end + 1`` stands for the empty substring).
    """
    t, p = as_symbols(t), as_symbols(p)
    cost, start = _kernels.substring_edit_kernel(t.array, p.array)
    return [(j, int(cost[j]), int(start[j])) for j in range(1, len(t) + 1) if cost[j] <= k]


# -- trie ---------------------------------------------------------------------

class TrieNode:
    __slots__ = ("children", "terminals")

    def __init__(self):
        self.children: dict[int, TrieNode] = {}
        self.terminals: list[int] = []


class TrieIndex:
    """Uncompressed trie over an equal-length dictionary.

    Children are kept sorted by symbol code, so traversal order is fixed.
    """

    def __init__(self, inst: Instance):
        self.depth = inst.d
        self.root = TrieNode()
        self.node_count = 1
        for idx, s in enumerate(inst.strings, start=1):
            node = self.root
            for sym in s:
                child = node.children.get(sym)
                if child is None:
                    child = node.children[sym] = TrieNode()
                    self.node_count += 1
                node = child
            node.terminals.append(idx)
        self._sort(self.root)

    def _sort(self, node: TrieNode) -> None:
        node.children = dict(sorted(node.children.items()))
        for child in node.children.values():
            self._sort(child)


def trie_build(inst: Instance) -> TrieIndex:
    return TrieIndex(inst)


def trie_lookup(idx: TrieIndex, q, k: int) -> tuple[list[MatchAnswer], SearchStats]:
    """Branch-on-mismatch depth-first search with an error budget of ``k``.

    Cost grows with the number of trie paths within distance ``k`` of the
    query, i.e. exponentially in ``k``.
    """
    q = as_symbols(q)
    if idx.root.children and len(q) != idx.depth:
        raise LengthMismatch(f"query length {len(q)} != trie depth {idx.depth}")
    codes = q.codes
    stats = SearchStats()
    found: list[MatchAnswer] = []
    t0 = time.perf_counter()

    stack = [(idx.root, 0, 0)]
    while stack:
        node, depth, errors = stack.pop()
        stats.nodes_visited += 1
        if depth == len(codes):
            found.extend(MatchAnswer(i, errors) for i in node.terminals)
            continue
        want = codes[depth]
        for sym, child in reversed(node.children.items()):
            cost = errors + (sym != want)
            if cost <= k:
                stack.append((child, depth + 1, cost))

    stats.wall_time = time.perf_counter() - t0
    found.sort()
    return found, stats
