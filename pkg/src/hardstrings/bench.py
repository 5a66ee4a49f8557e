"""Query-latency benchmark behind ``hardstrings bench``."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import astuple, dataclass, fields

import numpy as np

from hardstrings.errors import ParamError
from hardstrings.instance import Instance
from hardstrings.reduction import build_text, dict_lookup_via_text
from hardstrings.solvers import dict_lookup_brute, trie_build, trie_lookup
from hardstrings.strings import SymbolString

SOLVERS = ("brute", "trie", "text")
WARMUP_FRACTION = 0.1


@dataclass(frozen=True)
class BenchRecord:
    solver: str
    k: int
    d: int
    n: int  # dictionary strings
    queries: int  # timed queries, warm-up excluded
    mean_ns: float
    median_ns: float
    max_ns: int
    nodes: int
    answers: int


CSV_HEADER = [f.name for f in fields(BenchRecord)]


def bench_workload(d: int, n: int, queries: int, flips: int, seed: int):
    """``n`` uniform binary strings and ``queries`` queries, each a random
    dictionary member with up to ``flips`` bits flipped."""
    rng = np.random.default_rng(seed)
    strings = [SymbolString(row) for row in rng.integers(0, 2, size=(n, d)).tolist()]
    qs = []
    for _ in range(queries):
        q = list(strings[int(rng.integers(n))].codes)
        for pos in rng.choice(d, size=int(rng.integers(0, min(flips, d) + 1)), replace=False):
            q[pos] ^= 1
        qs.append(SymbolString(q))
    return strings, qs


def run_bench(solver: str, kmin: int, kmax: int, d: int, n: int, queries: int,
              seed: int = 0) -> list[BenchRecord]:
    """One record per ``k`` in ``[kmin, kmax]``; the same queries are used for
    every ``k``. The first 10% of queries per ``k`` are warm-up and not timed."""
    if solver not in SOLVERS:
        raise ParamError(f"unknown solver {solver!r}; choose from {', '.join(SOLVERS)}")
    if not 0 <= kmin <= kmax:
        raise ParamError(f"need 0 <= kmin <= kmax, got {kmin}, {kmax}")
    if d < 1 or n < 1:
        raise ParamError("d and n must be >= 1")
    warmup = int(queries * WARMUP_FRACTION)
    if queries - warmup < 1:
        raise ParamError("need at least one timed query")
    if solver == "text" and kmax >= d:
        raise ParamError("the text solver needs kmax < d")

    strings, qs = bench_workload(d, n, queries, kmax, seed)
    trie = trie_build(Instance(strings)) if solver == "trie" else None
    records = []
    for k in range(kmin, kmax + 1):
        inst = Instance(strings, k)
        art = build_text(inst) if solver == "text" else None
        times, nodes, answers = [], 0, 0
        for i, q in enumerate(qs):
            t0 = time.perf_counter_ns()
            if solver == "brute":
                found = dict_lookup_brute(inst, q, k)
                visited = len(strings)
            elif solver == "trie":
                found, stats = trie_lookup(trie, q, k)
                visited = stats.nodes_visited
            else:
                found = dict_lookup_via_text(art, q, k)
                visited = len(art.text)
            elapsed = time.perf_counter_ns() - t0
            if i < warmup:
                continue
            times.append(elapsed)
            nodes += visited
            answers += len(found)
        records.append(BenchRecord(solver, k, d, n, len(times), round(statistics.fmean(times), 1),
                                   statistics.median(times), max(times), nodes, answers))
    return records


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(astuple(r))
    return buf.getvalue()
