"""Finding a 2-expansion pair in a bipartite graph.

Side Y is at least twice as large as side X and no Y-vertex is isolated.
The lemma promises subsets X' and Y' such that N(Y') is exactly X' and
every Z inside X' sees at least 2|Z| vertices of Y'.  Some of X may have
to be discarded along the way; the demo picks an instance where that
actually happens.
"""

from mistkernel import BipartiteSubgraph, find_expansion_2, verify_expansion

# X = {0, 1, 2}, Y = {3, ..., 11}.  Vertex 2 only reaches one Y-vertex,
# so it can never expand by a factor of two and must be dropped.
edges = [
    (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 6), (1, 7), (1, 8), (1, 9),
    (2, 10),
    (0, 10), (0, 11), (1, 11),
]
b = BipartiteSubgraph(range(3), range(3, 12), edges)

pair = find_expansion_2(b)
print(f"X' = {sorted(pair.x_prime)}")
print(f"Y' = {sorted(pair.y_prime)}")
print(f"discarded from X: {sorted(b.side_x - pair.x_prime)}")

ok = verify_expansion(b, pair, 2)
print(f"exhaustive check of the expansion property: {ok}")
