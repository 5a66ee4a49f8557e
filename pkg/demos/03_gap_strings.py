"""Gap strings that keep misaligned windows far from the pattern.

Run: python3 demos/03_gap_strings.py
"""

from hardstrings import edit_gap, gap_violations, kwise_bits, mismatch_gap, verify_gap

for d in (2, 4, 8, 12):
    g = mismatch_gap(d)
    print(f"d={d:>2}: first passing gap {g.to_text()}")

print(f"\n'$$##' at d=2 passes: {verify_gap('$$##', 2)}; violations (i, distance): {gap_violations('$$##', 2)}")

for strategy in ("random", "kwise"):
    g = mismatch_gap(32, strategy, seed=3, budget=10_000)
    print(f"d=32 via {strategy}: {g.to_text()}")

print(f"\nedit-mode gap for d=4: {edit_gap(4).to_text()}")
print(f"3-wise independent bits from seed 12345: {kwise_bits(12345, 3, 16)}")
