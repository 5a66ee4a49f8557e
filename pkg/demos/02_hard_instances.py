"""Block-structured queries and dictionaries, with exact counting.

Run: python3 demos/02_hard_instances.py
"""

from fractions import Fraction

from hardstrings import (
    BlockParams,
    DictionaryConfig,
    count_queries,
    count_queries_paper,
    count_within_ball_brute,
    count_within_ball_closed_form,
    enumerate_queries,
    evaluate_bounds,
    generate_dictionary,
)

p = BlockParams(k=4, d=16)
queries = enumerate_queries(p)
print(f"k={p.k}, d={p.d}, block length b={p.b}: |Q| = {len(queries)} = {count_queries(p)}")
print(f"the generation-sequence formula gives {count_queries_paper(p)}, "
      f"{count_queries_paper(p) // count_queries(p)}x the distinct count")

P = queries[0]
print(f"\nP = {P.bits}")
for delta in range(2, 9, 2):
    cf = count_within_ball_closed_form(P, delta)
    print(f"  base strings at distance {delta}: {cf}")
print(f"  within distance 8: brute {count_within_ball_brute(P, 8)}, "
      f"closed form {sum(count_within_ball_closed_form(P, x) for x in range(9))}")

# Keep each base string with probability 1/16, then drop both members of any
# pair that differs in a single block.
survivors = generate_dictionary(DictionaryConfig(p, Fraction(1, 16), prune_radius=0, seed=1))
dictionary = generate_dictionary(DictionaryConfig(p, Fraction(1, 16), prune_radius=2, seed=1))
print(f"\n{len(survivors)} base strings survive selection, {len(dictionary)} survive pruning:")
for s in dictionary:
    print(f"  {s.bits}")
if len(dictionary) > 1:
    print(f"min pairwise distance {min(a.hamming(b) for a in dictionary for b in dictionary if a != b)}")

report = evaluate_bounds(2**16, BlockParams(16, 64))
print("\nbounds at n=2^16, k=16, d=64:")
for name, value in report.as_rows():
    print(f"  {name:>16}: {value}")
