"""Undirected simple graphs plus the tree, bipartite and matching helpers
shared by the rest of the package.

All structures are immutable after construction and every operation is a
pure function, so values can be shared freely across threads.  Determinism
is part of the contract: neighbor lists are kept sorted and every search
visits vertices in ascending index order.
"""

from __future__ import annotations

from collections import deque


class PreconditionError(ValueError):
    """An operation was called on input that violates its contract."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    No self-loops, no parallel edges.  Adjacency lists are sorted, so
    iteration order is always ascending.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            e = normalize_edge(u, v)
            if e in es:
                raise PreconditionError(f"parallel edge {e}")
            es.add(e)
        adj = [[] for _ in range(n)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(es)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def neighborhood(self, vertices) -> frozenset:
        """N(S): union of neighbors of the given vertices, minus the set itself."""
        vs = set(vertices)
        out = set()
        for v in vs:
            out.update(self._adj[v])
        return frozenset(out - vs)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class SpanningTree:
    """A tree on an explicit vertex set, with edges in canonical form.

    The vertex set does not have to be 0..n-1; trees over subsets of a host
    graph's vertices (e.g. over S ∪ L) keep their original labels.
    """

    __slots__ = ("vertices", "edges", "root", "_deg")

    def __init__(self, vertices, edges, root=None):
        vs = frozenset(vertices)
        if not vs:
            raise PreconditionError("a tree needs at least one vertex")
        es = frozenset(normalize_edge(u, v) for u, v in edges)
        if len(es) != len(vs) - 1:
            raise PreconditionError(
                f"tree on {len(vs)} vertices needs {len(vs) - 1} edges, got {len(es)}"
            )
        deg = {v: 0 for v in vs}
        parent = {v: v for v in vs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in es:
            if u not in deg or v not in deg:
                raise PreconditionError(f"edge ({u}, {v}) leaves the vertex set")
            deg[u] += 1
            deg[v] += 1
            ru, rv = find(u), find(v)
            if ru == rv:
                raise PreconditionError("edge set contains a cycle")
            parent[ru] = rv
        if root is not None and root not in vs:
            raise PreconditionError(f"root {root} not in the vertex set")
        self.vertices = vs
        self.edges = es
        self.root = root
        self._deg = deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    def internal(self) -> frozenset:
        return frozenset(v for v, d in self._deg.items() if d >= 2)

    def leaves(self) -> frozenset:
        return frozenset(v for v, d in self._deg.items() if d == 1)

    def neighbors_of(self, v: int) -> list[int]:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        out.sort()
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SpanningTree)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"SpanningTree(|V|={len(self.vertices)}, root={self.root})"


class BipartiteSubgraph:
    """The bipartite graph B(X, Y): only the X-Y edges between two disjoint sets."""

    __slots__ = ("side_x", "side_y", "edges", "_x_adj", "_y_adj")

    def __init__(self, side_x, side_y, edges):
        sx = frozenset(side_x)
        sy = frozenset(side_y)
        if sx & sy:
            raise PreconditionError("bipartition sides overlap")
        x_adj = {x: [] for x in sx}
        y_adj = {y: [] for y in sy}
        es = set()
        for x, y in edges:
            if x not in sx or y not in sy:
                raise PreconditionError(f"edge ({x}, {y}) does not cross the sides")
            es.add((x, y))
        for x, y in es:
            x_adj[x].append(y)
            y_adj[y].append(x)
        self.side_x = sx
        self.side_y = sy
        self.edges = frozenset(es)
        self._x_adj = {x: tuple(sorted(v)) for x, v in x_adj.items()}
        self._y_adj = {y: tuple(sorted(v)) for y, v in y_adj.items()}

    def x_neighbors(self, x: int) -> tuple[int, ...]:
        return self._x_adj[x]

    def y_neighbors(self, y: int) -> tuple[int, ...]:
        return self._y_adj[y]

    def restrict(self, xs, ys) -> "BipartiteSubgraph":
        xs = frozenset(xs)
        ys = frozenset(ys)
        return BipartiteSubgraph(
            xs, ys, [(x, y) for x, y in self.edges if x in xs and y in ys]
        )

    def __repr__(self):
        return (
            f"BipartiteSubgraph(|X|={len(self.side_x)}, |Y|={len(self.side_y)}, "
            f"m={len(self.edges)})"
        )


class Matching:
    """A set of vertex-disjoint edges, stored as (x, y) pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        ps = frozenset(tuple(p) for p in pairs)
        seen = set()
        for u, v in ps:
            if u in seen or v in seen or u == v:
                raise PreconditionError("matching edges share a vertex")
            seen.add(u)
            seen.add(v)
        self.pairs = ps

    def __len__(self):
        return len(self.pairs)

    def covered(self) -> frozenset:
        return frozenset(v for p in self.pairs for v in p)

    def __repr__(self):
        return f"Matching(size={len(self.pairs)})"


# ---------------------------------------------------------------------------
# Operations


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def dfs_tree(g: Graph, root: int) -> SpanningTree:
    """DFS spanning tree from `root`, visiting neighbors in ascending order."""
    if not (0 <= root < g.n):
        raise PreconditionError(f"root {root} out of range")
    if not is_connected(g):
        raise PreconditionError("dfs_tree requires a connected graph")
    parent = [-1] * g.n
    visited = [False] * g.n
    visited[root] = True
    ptr = [0] * g.n
    stack = [root]
    while stack:
        u = stack[-1]
        nbrs = g.neighbors(u)
        advanced = False
        while ptr[u] < len(nbrs):
            w = nbrs[ptr[u]]
            ptr[u] += 1
            if not visited[w]:
                visited[w] = True
                parent[w] = u
                stack.append(w)
                advanced = True
                break
        if not advanced:
            stack.pop()
    edges = [(v, parent[v]) for v in range(g.n) if parent[v] >= 0]
    return SpanningTree(range(g.n), edges, root=root)


def internal_count(t: SpanningTree, subset=None) -> int:
    """Number of subset vertices with tree degree >= 2 (subset defaults to all)."""
    if subset is None:
        return sum(1 for v in t.vertices if t.degree(v) >= 2)
    return sum(1 for v in subset if t.degree(v) >= 2)


def dfs_leaf_independent_set(g: Graph, t: SpanningTree) -> frozenset:
    """Leaves of a DFS tree minus its root; pairwise nonadjacent in g."""
    out = t.leaves() - ({t.root} if t.root is not None else frozenset())
    for v in out:
        for w in g.neighbors(v):
            if w in out:
                raise PreconditionError(
                    "tree is not a DFS tree of g: two non-root leaves are adjacent"
                )
    return out


def bipartite_between(g: Graph, x, y) -> BipartiteSubgraph:
    """B(X, Y): the g-edges with one endpoint in X and the other in Y."""
    xs = frozenset(x)
    ys = frozenset(y)
    if xs & ys:
        raise PreconditionError("sides of the bipartition overlap")
    edges = []
    for u, v in g.edges:
        if u in xs and v in ys:
            edges.append((u, v))
        elif v in xs and u in ys:
            edges.append((v, u))
    return BipartiteSubgraph(xs, ys, edges)


def _augment(adj: dict, left_order) -> dict:
    """Kuhn's augmenting-path matching.

    `adj` maps each left vertex to an ascending tuple of right vertices.
    Left vertices are scanned in the given order; returns {left: right}.
    """
    match_left: dict = {}
    match_right: dict = {}

    def try_augment(u, seen):
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or try_augment(match_right[w], seen):
                match_left[u] = w
                match_right[w] = u
                return True
        return False

    for u in left_order:
        if u not in match_left:
            try_augment(u, set())
    return match_left


def max_matching(b: BipartiteSubgraph) -> Matching:
    """Maximum-cardinality matching; augmenting paths scan X in ascending order."""
    order = sorted(b.side_x)
    adj = {x: b.x_neighbors(x) for x in order}
    match_left = _augment(adj, order)
    return Matching(sorted(match_left.items()))


def saturating_matching(b: BipartiteSubgraph, side: str) -> Matching | None:
    """A maximum matching if it saturates the requested side ('x' or 'y'), else None."""
    if side not in ("x", "y"):
        raise PreconditionError("side must be 'x' or 'y'")
    m = max_matching(b)
    want = len(b.side_x) if side == "x" else len(b.side_y)
    return m if len(m) == want else None
