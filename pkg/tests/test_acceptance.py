"""Acceptance criteria, one test each.

Every test prints a single ``AC<n> PASS|FAIL ...`` line (collected again in
the terminal summary) and then asserts the criterion at its stated
tolerance. Reference values come from the oracles in ``oracles.py``.
"""

import collections
import csv
import io
import itertools
import statistics
import time

import numpy as np
import pytest

from hardstrings.cli import main
from hardstrings.gapstrings import gap_violations, mismatch_gap, verify_gap
from hardstrings.hardgen import (
    BlockParams,
    BlockString,
    count_queries,
    count_queries_paper,
    count_within_ball_brute,
    count_within_ball_closed_form,
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
from hardstrings.solvers import text_search_edit, trie_build, trie_lookup
from hardstrings.stoppers import stoppers_transform, transform_set
from hardstrings.strings import SymbolString, edit_distance

from oracles import block_bases, block_queries, ham, levenshtein, stoppers_tau, substring_minima

pytestmark = pytest.mark.acceptance


def _pairs(answers):
    return {(a.dict_index, a.distance) for a in answers}


def test_ac1_ac2_stoppers_exact(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    checked = length_fail = ed_fail = 0
    tested = 0

    def check(xs, index_pairs):
        nonlocal checked, length_fail, ed_fail, tested
        taus = [stoppers_transform(x) for x in xs]
        d = len(xs[0])
        want_len = d * (1 + 6 * (d.bit_length() - 1))
        tested += len(xs)
        length_fail += sum(len(t) != want_len for t in taus)
        for i, j in index_pairs:
            checked += 1
            ed_fail += edit_distance(taus[i], taus[j]) != ham(xs[i], xs[j])

    for d in (1, 2, 4, 8):
        xs = ["".join(b) for b in itertools.product("01", repeat=d)]
        check(xs, itertools.product(range(len(xs)), repeat=2))
    exhaustive = checked
    for d in (16, 32):
        xs = ["".join(map(str, row)) for row in rng.integers(0, 2, (20_000, d))]
        check(xs, ((2 * i, 2 * i + 1) for i in range(10_000)))
    # the package transform agrees with an independent unroll on a sample
    sample = [format(v, "032b") for v in rng.integers(0, 2**32, 20, dtype=np.uint64)]
    unroll_ok = all([str(c) if c < 2 else ("c", c - 3) for c in stoppers_transform(x).codes] == stoppers_tau(x)
                    for x in sample)
    elapsed = time.perf_counter() - t0

    ok1 = ed_fail == 0 and unroll_ok and elapsed <= 60
    report(1, ok1, f"ED(tau X, tau Y) == HAM(X, Y): {exhaustive} exhaustive ordered pairs (d=1,2,4,8) "
                   f"+ 10000 random pairs at each of d=16,32; {ed_fail} mismatches; {elapsed:.1f}s (limit 60s)")
    report(2, length_fail == 0, f"|tau X| == d(1+6 log2 d) for all {tested} tested strings; {length_fail} violations")
    assert ed_fail == 0 and unroll_ok
    assert length_fail == 0
    assert elapsed <= 60


def test_ac3_ball_count_identity(report):
    t0 = time.perf_counter()
    failures, total = [], 0
    for k, d in ((2, 8), (4, 8), (4, 16)):
        p = BlockParams(k, d)
        bases = block_bases(k, d)
        for bits in block_queries(k, d):
            P = BlockString.from_bits(bits, p)
            hist = collections.Counter(ham(bits, s) for s in bases)
            total += 1
            for delta in range(d + 1):
                if count_within_ball_closed_form(P, delta) != hist.get(delta, 0):
                    failures.append((k, d, bits, delta))
            for radius in (k // 2, k, d):
                if count_within_ball_brute(P, radius) != sum(v for x, v in hist.items() if x <= radius):
                    failures.append((k, d, bits, f"radius {radius}"))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed <= 60
    report(3, ok, f"closed-form ball counts == brute force for all {total} P in Q at (2,8),(4,8),(4,16); "
                  f"{len(failures)} mismatches; {elapsed:.1f}s (limit 60s)")
    assert not failures
    assert elapsed <= 60


def test_ac4_query_formula_relation(report):
    rows, ok = [], True
    for k, d in ((2, 4), (2, 8), (4, 8), (4, 16)):
        p = BlockParams(k, d)
        distinct = len(block_queries(k, d))
        formula = count_queries_paper(p)
        ok &= formula == 2 ** (k // 2) * distinct and count_queries(p) == distinct
        rows.append(f"(k={k},d={d}) formula={formula} distinct={distinct} factor={formula // distinct}")
    report(4, ok, "query-count formula == 2^(k/2) x distinct enumeration; formula counts generation "
                  "sequences, each double block reached from either bit: " + "; ".join(rows))
    assert ok


def _structure(P: str, S1: str, S2: str, k: int) -> bool:
    """Three predicted properties of P xor S1, computed on bit strings."""
    x = [a != b for a, b in zip(P, S1)]
    y = [a != b for a, b in zip(S1, S2)]
    d1, d2, z = ham(P, S1), ham(P, S2), ham(S1, S2) // 2
    shared = sum(a and b for a, b in zip(x, y))
    missed = sum(b and not a for a, b in zip(x, y))
    s1_not_p = sum(s == "1" and q == "0" for s, q in zip(S1, P))
    return shared == z + (d1 - d2) // 2 and missed == z - (d1 - d2) // 2 and 4 * s1_not_p == 2 * d1 - k


def test_ac5_intersection_soundness(report):
    k, d = 4, 16
    p = BlockParams(k, d)
    bases, queries = block_bases(k, d), block_queries(k, d)
    rng = np.random.default_rng(77)
    trials, bound_fail, struct_fail, nonempty = 150, 0, 0, 0
    for _ in range(trials):
        i, j = rng.choice(len(bases), 2, replace=False)
        S1, S2 = bases[i], bases[j]
        members = [P for P in queries if ham(P, S1) <= k and ham(P, S2) <= k]
        nonempty += bool(members)
        z = ham(S1, S2) // 2
        realized = collections.Counter((ham(P, S1), ham(P, S2)) for P in members)
        per_pair_ok = all(n <= intersection_upper_bound(z, a, b, p) for (a, b), n in realized.items())
        total_bound = sum(intersection_upper_bound(z, a, b, p) for a, b in realized)
        bound_fail += not (len(members) <= total_bound and per_pair_ok)
        for P in members:
            mine = _structure(P, S1, S2, k)
            lib = xor_structure_holds(*(BlockString.from_bits(s, p) for s in (P, S1, S2)))
            struct_fail += not (mine and lib)
    ok = bound_fail == 0 and struct_fail == 0
    report(5, ok, f"{trials} random base pairs at (4,16) ({nonempty} with non-empty intersection): "
                  f"{bound_fail} bound violations, {struct_fail} xor-structure violations")
    assert ok


def test_ac6_gap_strings(report):
    passing = {d: mismatch_gap(d).to_text() for d in (2, 4, 8)}
    ok_found = all(verify_gap(g, d) for d, g in passing.items())
    violations = gap_violations("$$##", 2)
    ok_control = not verify_gap("$$##", 2) and violations[0][0] == 3
    report(6, ok_found and ok_control,
           f"mismatch_gap passes verify_gap: {passing}; control '$$##' d=2 fails with "
           f"counterexample i={violations[0][0]} (distance {violations[0][1]} < 2)")
    assert ok_found and ok_control


def _brute(strings, q, k, mode):
    dist = ham if mode is Mode.HAMMING else levenshtein
    return {(i, dist(q, s)) for i, s in enumerate(strings, 1) if dist(q, s) <= k}


def test_ac7_reduction_round_trip(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(4321)
    trials = 500
    mismatch = {Mode.HAMMING: 0, Mode.EDIT: 0}
    certify = {Mode.HAMMING: 0, Mode.EDIT: 0}
    hits = 0
    for mode in Mode:
        for _ in range(trials):
            d = int(rng.integers(2, 9))
            strings = ["".join(map(str, r)) for r in rng.integers(0, 2, (int(rng.integers(1, 9)), d))]
            base = strings[int(rng.integers(len(strings)))]
            flips = set(rng.choice(d, int(rng.integers(0, d + 1)), replace=False).tolist())
            q = "".join(str(1 - int(c)) if i in flips else c for i, c in enumerate(base))
            k = int(rng.integers(0, d))
            art = build_text(Instance(strings, k, mode))
            got = _pairs(dict_lookup_via_text(art, q, k))
            want = _brute(strings, q, k, mode)
            hits += bool(want)
            mismatch[mode] += got != want
            ok = verify_offset_exclusion(art, q, k) if mode is Mode.HAMMING else verify_edit_offsets(art, q, k)
            certify[mode] += not ok
    elapsed = time.perf_counter() - t0
    ok = not any(mismatch.values()) and not any(certify.values()) and elapsed <= 180
    report(7, ok, f"{trials} trials per mode (d<=8, <=8 strings, k<d; {hits} with answers): answer-set "
                  f"mismatches hamming={mismatch[Mode.HAMMING]} edit={mismatch[Mode.EDIT]}; offset exclusion "
                  f"failures={certify[Mode.HAMMING]}; edit certification failures={certify[Mode.EDIT]}; "
                  f"{elapsed:.1f}s (limit 180s)")
    assert not any(mismatch.values()) and not any(certify.values())
    assert elapsed <= 180


def test_ac8_solver_oracle_chain(report):
    rng = np.random.default_rng(99)
    trie_fail = 0
    queries = 1200
    for _ in range(queries):
        d = int(rng.integers(1, 11))
        strings = ["".join(map(str, r)) for r in rng.integers(0, 2, (int(rng.integers(1, 20)), d))]
        q = "".join(map(str, rng.integers(0, 2, d)))
        k = int(rng.integers(0, d + 1))
        found, _ = trie_lookup(trie_build(Instance(strings)), SymbolString.parse(q), k)
        trie_fail += _pairs(found) != _brute(strings, q, k, Mode.HAMMING)
    edit_fail, texts = 0, 400
    for _ in range(texts):
        t = rng.integers(0, 3, int(rng.integers(1, 11))).tolist()
        p = rng.integers(0, 3, int(rng.integers(0, len(t) + 1))).tolist()
        k = int(rng.integers(0, len(p) + 2))
        want = [(j, m) for j, m in enumerate(substring_minima(t, p), 1) if m <= k]
        got = [(j, e) for j, e, _ in text_search_edit(SymbolString(t), SymbolString(p), k)]
        edit_fail += got != want
    ok = trie_fail == 0 and edit_fail == 0
    report(8, ok, f"trie == brute on {queries} random queries ({trie_fail} mismatches); edit search "
                  f"per-end minima == substring oracle on {texts} texts with |t|<=10 ({edit_fail} mismatches)")
    assert ok


def test_ac9_closest_pair_consistency(report):
    rng = np.random.default_rng(5150)
    trials, fail = 120, 0
    for _ in range(trials):
        d = int(rng.choice([2, 4, 8]))
        red = ["".join(map(str, r)) for r in rng.integers(0, 2, (int(rng.integers(1, 5)), d))]
        blue = ["".join(map(str, r)) for r in rng.integers(0, 2, (int(rng.integers(1, 5)), d))]
        ham_min = min(ham(r, b) for r in red for b in blue)
        edit_min = bichromatic_closest_pair(transform_set(red), transform_set(blue), Mode.EDIT)[2]
        fail += ham_min != edit_min or bichromatic_closest_pair(red, blue)[2] != ham_min
    report(9, fail == 0, f"edit-mode closest pair on transformed sets == hamming closest pair on originals "
                         f"for {trials} random set pairs; {fail} mismatches")
    assert fail == 0


def test_ac10_benchmark(report, tmp_path, capsys):
    t0 = time.perf_counter()
    tables = {}
    for solver in ("trie", "brute"):
        path = tmp_path / f"{solver}.csv"
        code = main(["bench", "--solver", solver, "--kmin", "0", "--kmax", "4", "--d", "16",
                     "--n", "1000", "--queries", "100", "--seed", "1", "--out", str(path)])
        text = path.read_text()
        tables[solver] = (code, text, list(csv.DictReader(io.StringIO(text))))
    capsys.readouterr()
    elapsed = time.perf_counter() - t0

    header = "solver,k,d,n,queries,mean_ns,median_ns,max_ns,nodes,answers"
    well_formed = all(
        code == 0 and text.splitlines()[0] == header and len(rows) == 5
        and [int(r["k"]) for r in rows] == list(range(5))
        and all(float(r["mean_ns"]) >= 0 and float(r["median_ns"]) >= 0 and int(r["max_ns"]) >= 0
                and int(r["queries"]) >= 1 for r in rows)
        for code, text, rows in tables.values()
    )
    nodes = [int(r["nodes"]) for r in tables["trie"][2]]
    medians = [float(r["median_ns"]) for r in tables["brute"][2]]
    spread = max(medians) / min(medians)
    ok = well_formed and nodes == sorted(nodes) and spread <= 2.0 and elapsed <= 120
    report(10, ok, f"CSV well-formed={well_formed}; trie nodes by k={nodes} (nondecreasing="
                   f"{nodes == sorted(nodes)}); brute median ns by k={[int(m) for m in medians]} "
                   f"(max/min={spread:.2f}, limit 2.0); {elapsed:.1f}s (limit 120s)")
    assert well_formed
    assert nodes == sorted(nodes)
    assert spread <= 2.0
    assert elapsed <= 120
    assert statistics.median(medians) > 0
