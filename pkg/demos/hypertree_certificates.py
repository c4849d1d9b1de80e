"""Hypertrees and their negative certificates.

A hypergraph contains a hypertree exactly when every partition of its
vertices is crossed by enough hyperedges.  This script shows both sides:
a hypertree getting shrunk to an ordinary spanning tree, and a deficient
partition certifying that no hypertree exists.
"""

from mistkernel import (
    Hypergraph,
    border,
    deficient_partition,
    greedy_hypertree,
    shrink_to_tree,
)

print("--- positive side ---")
h = Hypergraph(4, [{0, 1, 2}, {1, 2, 3}, {0, 3}])
t = greedy_hypertree(h)
print(f"hyperedges: {[sorted(e) for e in h.hyperedges]}")
print(f"greedy hypertree picks edge ids {sorted(t.edge_ids)}")

tree, mapping = shrink_to_tree(h, t)
print("each hyperedge shrinks to a single pair:")
for eid, pair in sorted(mapping.items()):
    print(f"  edge {eid}: {sorted(h.hyperedges[eid])} -> {pair}")
print(f"the pairs form a spanning tree: {sorted(tree.edges)}")

print("\n--- negative side ---")
h = Hypergraph(4, [{0, 1}, {0, 1}, {2, 3}])
print(f"hyperedges: {[sorted(e) for e in h.hyperedges]}")
print(f"greedy hypertree: {greedy_hypertree(h)}")

p = deficient_partition(h)
print(f"deficient partition: {[sorted(part) for part in p.parts]}")
crossing = border(h, p)
print(f"only {len(crossing)} hyperedge(s) cross it, "
      f"but {len(p) - 1} would be needed")
