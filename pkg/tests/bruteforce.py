"""Independent brute-force oracles used to cross-check the library.

Everything here is definitional enumeration; none of it shares code with
the algorithms under test.
"""

from __future__ import annotations

import itertools

from mistkernel.graph import Graph, SpanningTree, normalize_edge


def all_set_partitions(items):
    """Yield every partition of `items` as a list of lists."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def is_tree_edge_set(vertices, edges) -> bool:
    vs = set(vertices)
    if len(edges) != len(vs) - 1:
        return False
    parent = {v: v for v in vs}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        if u not in vs or v not in vs:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def all_spanning_trees(g: Graph):
    """Yield every spanning tree of g as a frozenset of edges."""
    edges = sorted(g.edges)
    for combo in itertools.combinations(edges, g.n - 1):
        if is_tree_edge_set(range(g.n), combo):
            yield frozenset(combo)


def brute_opt_internal(g: Graph) -> int:
    """Maximum internal count over all spanning trees, by full enumeration."""
    best = -1
    for tree in all_spanning_trees(g):
        deg = {v: 0 for v in range(g.n)}
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        best = max(best, sum(1 for d in deg.values() if d >= 2))
    return best


def brute_strong_hall(sets) -> bool:
    """Definitional hyperforest check: every nonempty subfamily covers
    at least one more vertex than its size."""
    sets = list(sets)
    for r in range(1, len(sets) + 1):
        for combo in itertools.combinations(sets, r):
            union = set()
            for s in combo:
                union |= set(s)
            if len(union) < r + 1:
                return False
    return True


def brute_has_deficient_partition(n, sets):
    """A partition with |border| <= |parts| - 2, by enumerating all partitions."""
    for part in all_set_partitions(range(n)):
        if len(part) < 2:
            continue
        part_of = {}
        for idx, p in enumerate(part):
            for v in p:
                part_of[v] = idx
        b = sum(1 for s in sets if len({part_of[v] for v in s}) >= 2)
        if b <= len(part) - 2:
            return part
    return None


def brute_max_matching_size(pairs) -> int:
    """Maximum matching cardinality by subset enumeration."""
    pairs = list(pairs)
    best = 0
    for r in range(len(pairs), 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(pairs, r):
            seen = set()
            ok = True
            for u, v in combo:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                best = max(best, r)
                break
    return best


def brute_hamiltonian_path(g: Graph) -> bool:
    if g.n <= 1:
        return True
    for perm in itertools.permutations(range(g.n)):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(g.n - 1)):
            return True
    return False


def random_spanning_tree(g: Graph, rng) -> SpanningTree:
    """A spanning tree picked by shuffling edges and running Kruskal."""
    edges = sorted(g.edges)
    rng.shuffle(edges)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(normalize_edge(u, v))
    return SpanningTree(range(g.n), chosen)
