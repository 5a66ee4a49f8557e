"""Query cost as k grows: trie search branches, brute force does not.

Run: python3 demos/05_benchmark.py
"""

from hardstrings.bench import records_to_csv, run_bench

for solver in ("trie", "brute"):
    records = run_bench(solver, kmin=0, kmax=4, d=16, n=1000, queries=60, seed=0)
    print(f"{solver}:")
    for r in records:
        print(f"  k={r.k}  median {r.median_ns / 1e3:9.1f} us  nodes {r.nodes:>7}  answers {r.answers}")

print("\nCSV form:")
print(records_to_csv(run_bench("trie", 0, 2, 12, 200, 20)), end="")
