"""Advancing a weighted tree, the strata it produces, and the chart equations."""

from redgw.charts import build_atlas
from redgw.trees import WeightedTree, advancing_sequences, assign_strata, enumerate_strata

# trunk a - b; b has a terminal child c (leg 1) and an interior child d (legs 2, 3)
tree = WeightedTree.build(
    "a",
    [("a", "b"), ("b", "c"), ("b", "d"), ("d", "g1"), ("d", "g2")],
    weight={"c": 1, "g1": 2, "g2": 1},
    legs={"c": [1], "d": [2, 3]},
)
print("Starting tree (d = %d, k = %d):" % (tree.total_weight, tree.k))
print(tree)

print("\nAdvancing at the terminal vertex c absorbs everything into c:")
print(tree.advance("c"))

print("\nAdvancing at the interior vertex d hangs c below d:")
print(tree.advance("d"))

print("\nEvery maximal advancing sequence and the strata it assigns:")
for seq in advancing_sequences(tree):
    strata = assign_strata(tree, seq)
    labels = ", ".join(f"{v} -> {mu}" for v, mu in strata.items())
    print(f"  {' > '.join(seq.steps)}: {labels}")

print("\nDistinct strata:", ", ".join(map(str, enumerate_strata(tree))))

print("\nCharts along d > g1 for P^4 with one p-field:")
print(build_atlas(tree, ["d", "g1"], n=4, m=1, with_p_fields=True))
