"""Stoppers transform: edit distance of the images equals Hamming distance.

Run: python3 demos/01_stoppers_transform.py
"""

import itertools

from hardstrings import edit_distance, hamming, optimal_alignment, stoppers_transform, transformed_length

x, y = "0110", "0011"
tx, ty = stoppers_transform(x), stoppers_transform(y)
print(f"tau({x}) = {tx.to_text()}")
print(f"length {len(tx)} == d(1 + 6 log2 d) = {transformed_length(4)}")
print(f"HAM({x}, {y}) = {hamming(x, y)}, ED(tau x, tau y) = {edit_distance(tx, ty)}")

# An optimal alignment never needs to shift across a stopper run, so every
# binary symbol is matched with the symbol at the same index.
al = optimal_alignment(tx, ty)
binary = [(i, j) for i, j in al.pairs if tx[i - 1] < 2]
print(f"binary positions aligned in place: {all(i == j for i, j in binary)}")

# Plain edit distance can be much smaller than Hamming distance...
print(f"without stoppers: HAM(0101, 1010) = {hamming('0101', '1010')}, ED = {edit_distance('0101', '1010')}")

# ...but never after the transform.
for d in (2, 4, 8):
    xs = ["".join(b) for b in itertools.product("01", repeat=d)]
    taus = {s: stoppers_transform(s) for s in xs}
    agree = all(edit_distance(taus[a], taus[b]) == hamming(a, b) for a, b in itertools.combinations(xs, 2))
    print(f"d={d}: ED == HAM on all {len(xs) * (len(xs) - 1) // 2} pairs: {agree}")
