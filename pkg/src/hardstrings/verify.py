"""Property suites behind ``hardstrings verify``.

Each suite returns a list of ``Check`` results; a failing check carries the
first counterexample found.
"""

from __future__ import annotations

import collections
import itertools
from dataclasses import dataclass

import numpy as np

from hardstrings import _kernels
from hardstrings.errors import ReductionError
from hardstrings.gapstrings import (
    GapString,
    gap_violations,
    mismatch_gap,
    verify_gap,
)
from hardstrings.hardgen import (
    BlockParams,
    count_queries,
    count_queries_paper,
    count_within_ball_closed_form,
    enumerate_base_strings,
    enumerate_queries,
    intersection_members,
    intersection_upper_bound,
    xor_structure_holds,
)
from hardstrings.instance import Instance, Mode
from hardstrings.reduction import (
    bichromatic_closest_pair,
    build_text,
    dict_lookup_via_text,
    verify_edit_offsets,
    verify_offset_exclusion,
)
from hardstrings.solvers import (
    dict_lookup_brute,
    text_search_edit,
    text_search_hamming,
    trie_build,
    trie_lookup,
)
from hardstrings.stoppers import stoppers_transform, transform_set, transformed_length
from hardstrings.strings import SymbolString, edit_distance, hamming

SUITES = ("stoppers", "gap", "counts", "reduction", "solvers")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _bits(rng: np.random.Generator, d: int) -> SymbolString:
    return SymbolString(rng.integers(0, 2, size=d).tolist())


# -- stoppers -----------------------------------------------------------------

def stoppers_suite(max_d: int = 8, random_d: tuple[int, ...] = (16,), pairs: int = 200,
                   seed: int = 0) -> list[Check]:
    """Edit distance of transformed strings equals Hamming distance of the
    originals; transformed length is ``d (1 + 6 log2 d)``."""
    checks = []
    d = 1
    while d <= max_d:
        xs = [SymbolString(bits) for bits in itertools.product((0, 1), repeat=d)]
        checks.append(_transform_check(f"exhaustive d={d}", xs, itertools.combinations_with_replacement(range(len(xs)), 2)))
        d *= 2
    rng = np.random.default_rng(seed)
    for d in random_d:
        xs = [_bits(rng, d) for _ in range(2 * pairs)]
        checks.append(_transform_check(f"random d={d} pairs={pairs}", xs,
                                       ((2 * i, 2 * i + 1) for i in range(pairs))))
    return checks


def _transform_check(label: str, xs: list[SymbolString], index_pairs) -> Check:
    taus = [stoppers_transform(x) for x in xs]
    expected = transformed_length(len(xs[0]))
    for x, t in zip(xs, taus):
        if len(t) != expected:
            return Check(f"stoppers {label}", False, f"|tau({x.to_text()})|={len(t)} != {expected}")
    arrays = [t.array for t in taus]
    count = 0
    for i, j in index_pairs:
        ed = _kernels.edit_distance_kernel(arrays[i], arrays[j])
        ham = hamming(xs[i], xs[j])
        if ed != ham:
            return Check(f"stoppers {label}", False,
                         f"X={xs[i].to_text()} Y={xs[j].to_text()} ED={ed} HAM={ham}")
        count += 1
    return Check(f"stoppers {label}", True, f"{count} pairs, length {expected}")


# -- gap ----------------------------------------------------------------------

def gap_suite(ds: tuple[int, ...] = (2, 4, 8), forced: str | None = None,
              strategy: str = "exhaustive", seed: int = 0, budget: int | None = None) -> list[Check]:
    if forced is not None:
        d = ds[0]
        bad = gap_violations(forced, d)
        if bad:
            i, dist = bad[0]
            return [Check(f"gap {forced} d={d}", False, f"counterexample i={i} distance={dist}")]
        return [Check(f"gap {forced} d={d}", True)]
    checks = []
    for d in ds:
        g = mismatch_gap(d, strategy, seed=seed, budget=budget)
        checks.append(Check(f"gap {strategy} d={d}", verify_gap(g.symbols, d), g.to_text()))
    return checks


# -- counts -------------------------------------------------------------------

def ball_histograms(p: BlockParams) -> tuple[list, np.ndarray]:
    """Per query string, the number of base strings at each distance."""
    queries = enumerate_queries(p)
    base = np.array([s.value for s in enumerate_base_strings(p)], dtype=object)
    hist = np.zeros((len(queries), p.d + 1), dtype=np.int64)
    for row, P in enumerate(queries):
        dists = collections.Counter((P.value ^ int(v)).bit_count() for v in base)
        for dist, n in dists.items():
            hist[row, dist] = n
    return queries, hist


def counts_suite(k: int = 4, d: int = 16, trials: int = 100, seed: int = 0) -> list[Check]:
    p = BlockParams(k, d)
    checks = []
    queries, hist = ball_histograms(p)
    checks.append(Check(f"counts |Q| k={k} d={d}", len(queries) == count_queries(p),
                        f"{len(queries)} enumerated, {count_queries(p)} closed form"))

    failure = ""
    for P, row in zip(queries, hist):
        for delta in range(d + 1):
            cf = count_within_ball_closed_form(P, delta)
            if cf != row[delta]:
                failure = f"P={P.bits} delta={delta} closed={cf} brute={row[delta]}"
                break
        if failure:
            break
    checks.append(Check(f"counts ball identity k={k} d={d}", not failure,
                        failure or f"{len(queries)} query strings x {d + 1} distances"))

    formula = count_queries_paper(p)
    ratio_ok = formula == 2 ** (k // 2) * count_queries(p)
    checks.append(Check(f"counts query formula k={k} d={d}", ratio_ok,
                        f"formula {formula} = 2^{k // 2} x distinct {count_queries(p)}"))

    if trials:
        checks.append(intersection_check(p, trials, seed))
    return checks


def intersection_check(p: BlockParams, trials: int, seed: int = 0) -> Check:
    """Brute intersections against the summed bound, with the xor structure."""
    base = enumerate_base_strings(p)
    rng = np.random.default_rng(seed)
    radius = p.k
    for _ in range(trials):
        i, j = rng.choice(len(base), size=2, replace=False)
        S1, S2 = base[i], base[j]
        members = intersection_members(S1, S2, radius)
        z = S1.hamming(S2) // 2
        realized = collections.Counter((P.hamming(S1), P.hamming(S2)) for P in members)
        bound = sum(intersection_upper_bound(z, a, b, p) for a, b in realized)
        label = f"S1={S1.bits} S2={S2.bits}"
        if len(members) > bound:
            return Check(f"counts intersection k={p.k} d={p.d}", False,
                         f"{label}: {len(members)} > bound {bound}")
        for P in members:
            if not xor_structure_holds(P, S1, S2):
                return Check(f"counts intersection k={p.k} d={p.d}", False,
                             f"{label}: xor structure fails for P={P.bits}")
    return Check(f"counts intersection k={p.k} d={p.d}", True, f"{trials} random pairs")


# -- reduction ----------------------------------------------------------------

def random_trial(rng: np.random.Generator, max_d: int = 8, max_count: int = 8):
    """A random dictionary, query and ``k < d``; the query is often a
    perturbed dictionary member so that answer sets are non-trivial."""
    d = int(rng.integers(2, max_d + 1))
    count = int(rng.integers(1, max_count + 1))
    strings = [_bits(rng, d) for _ in range(count)]
    k = int(rng.integers(0, d))
    if rng.random() < 0.5:
        q = list(strings[int(rng.integers(count))].codes)
        for pos in rng.choice(d, size=int(rng.integers(0, d + 1)), replace=False):
            q[pos] ^= 1
        q = SymbolString(q)
    else:
        q = _bits(rng, d)
    return strings, q, k


def reduction_suite(trials: int = 500, max_d: int = 8, max_count: int = 8, bcp_trials: int = 100,
                    seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    gaps: dict[int, GapString] = {}
    results = {}
    for mode in (Mode.HAMMING, Mode.EDIT):
        round_trip = exclusion = ""
        for _ in range(trials):
            strings, q, k = random_trial(rng, max_d, max_count)
            d = len(q)
            inst = Instance(strings, k, mode)
            if mode is Mode.HAMMING:
                gaps.setdefault(d, mismatch_gap(d))
                art = build_text(inst, gaps[d])
            else:
                art = build_text(inst)
            label = f"dict={[s.to_text() for s in strings]} q={q.to_text()} k={k}"
            try:
                got = [(a.dict_index, a.distance) for a in dict_lookup_via_text(art, q, k)]
            except ReductionError as exc:
                got = f"ReductionError: {exc}"
            want = [(a.dict_index, a.distance) for a in dict_lookup_brute(inst, q, k)]
            if got != want and not round_trip:
                round_trip = f"{label}: text {got} != brute {want}"
            ok = (verify_offset_exclusion(art, q, k) if mode is Mode.HAMMING
                  else verify_edit_offsets(art, q, k))
            if not ok and not exclusion:
                exclusion = label
        results[mode] = (round_trip, exclusion)

    checks = []
    for mode, (round_trip, exclusion) in results.items():
        checks.append(Check(f"reduction {mode.value} round-trip", not round_trip,
                            round_trip or f"{trials} trials"))
        name = "offset exclusion" if mode is Mode.HAMMING else "offset certification"
        checks.append(Check(f"reduction {mode.value} {name}", not exclusion,
                            exclusion or f"{trials} trials"))
    checks.append(bcp_check(rng, bcp_trials))
    return checks


def bcp_check(rng: np.random.Generator, trials: int, dims: tuple[int, ...] = (2, 4, 8)) -> Check:
    """Closest-pair distance survives the stoppers transform."""
    for _ in range(trials):
        d = int(rng.choice(dims))
        red = [_bits(rng, d) for _ in range(int(rng.integers(1, 5)))]
        blue = [_bits(rng, d) for _ in range(int(rng.integers(1, 5)))]
        ham = bichromatic_closest_pair(red, blue, Mode.HAMMING)[2]
        ed = bichromatic_closest_pair(transform_set(red), transform_set(blue), Mode.EDIT)[2]
        if ham != ed:
            return Check("reduction closest pair", False,
                         f"red={[s.to_text() for s in red]} blue={[s.to_text() for s in blue]} "
                         f"hamming {ham} != edit {ed}")
    return Check("reduction closest pair", True, f"{trials} set pairs")


# -- solvers ------------------------------------------------------------------

def substring_minima(t: SymbolString, p: SymbolString) -> list[int]:
    """``min_s ED(t[s..j], p)`` for every end ``j`` by enumerating substrings."""
    return [min(edit_distance(t[s:j], p) for s in range(j + 1)) for j in range(1, len(t) + 1)]


def solvers_suite(trials: int = 1000, max_text: int = 10, text_trials: int = 300,
                  seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    trie_fail = ""
    for _ in range(trials):
        strings, q, k = random_trial(rng)
        inst = Instance(strings, k)
        got, _ = trie_lookup(trie_build(inst), q, k)
        want = dict_lookup_brute(inst, q, k)
        if got != want:
            trie_fail = f"dict={[s.to_text() for s in strings]} q={q.to_text()} k={k}"
            break

    edit_fail = ham_fail = ""
    for _ in range(text_trials):
        sigma = int(rng.integers(2, 4))
        t = SymbolString(rng.integers(0, sigma, size=int(rng.integers(1, max_text + 1))).tolist())
        p = SymbolString(rng.integers(0, sigma, size=int(rng.integers(0, len(t) + 1))).tolist())
        k = int(rng.integers(0, len(p) + 2))
        minima = substring_minima(t, p)
        want = [(j, m) for j, m in enumerate(minima, start=1) if m <= k]
        got = [(j, dist) for j, dist, _ in text_search_edit(t, p, k)]
        if got != want and not edit_fail:
            edit_fail = f"t={t.codes} p={p.codes} k={k}: {got} != {want}"
        if len(p):
            naive = [(s + 1, hamming(t[s:s + len(p)], p)) for s in range(len(t) - len(p) + 1)]
            if text_search_hamming(t, p, k) != [x for x in naive if x[1] <= k] and not ham_fail:
                ham_fail = f"t={t.codes} p={p.codes} k={k}"

    return [
        Check("solvers trie == brute", not trie_fail, trie_fail or f"{trials} queries"),
        Check("solvers edit search == substring oracle", not edit_fail, edit_fail or f"{text_trials} texts"),
        Check("solvers hamming search == naive windows", not ham_fail, ham_fail or f"{text_trials} texts"),
    ]
