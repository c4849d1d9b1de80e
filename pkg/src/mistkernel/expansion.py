"""Constructive 2-expansion in bipartite graphs.

Given B(X, Y) with |Y| >= 2|X| and no isolated Y-vertex, find X' ⊆ X and
Y' ⊆ Y such that the Y'-neighborhood is exactly X' and every Z ⊆ X' has at
least 2|Z| neighbors inside Y'.
"""

from __future__ import annotations

from collections import deque

from .graph import BipartiteSubgraph, InvariantError, PreconditionError, _augment


class ExpansionPair:
    """A witness (X', Y') for expansion 2: N(Y') = X' and |N(Z) ∩ Y'| >= 2|Z|."""

    __slots__ = ("x_prime", "y_prime")

    def __init__(self, x_prime, y_prime):
        self.x_prime = frozenset(x_prime)
        self.y_prime = frozenset(y_prime)
        if not self.x_prime or not self.y_prime:
            raise PreconditionError("expansion pair sides must be nonempty")

    def __repr__(self):
        return f"ExpansionPair(X'={sorted(self.x_prime)}, Y'={sorted(self.y_prime)})"


def find_expansion_2(b: BipartiteSubgraph) -> ExpansionPair:
    """Find a valid expansion pair; deterministic given vertex index order.

    Matches two copies of every X-vertex into Y.  If the matching saturates
    all copies, the current (X, Y) qualifies.  Otherwise the X-vertices
    reachable by alternating paths from unmatched copies form a Hall
    violator whose Y-neighborhood is discarded together with it, and the
    search repeats on the remainder.
    """
    if not b.side_x:
        raise PreconditionError("side X is empty")
    if len(b.side_y) < 2 * len(b.side_x):
        raise PreconditionError("side Y must have at least twice the size of X")
    for y in sorted(b.side_y):
        if not b.y_neighbors(y):
            raise PreconditionError(f"Y-vertex {y} has no neighbor in X")

    xs = sorted(b.side_x)
    ys = set(b.side_y)
    while True:
        left = [(x, c) for x in xs for c in (0, 1)]
        adj = {
            (x, c): tuple(w for w in b.x_neighbors(x) if w in ys) for x, c in left
        }
        match_left = _augment(adj, left)
        if len(match_left) == len(left):
            return ExpansionPair(xs, ys)
        match_right = {y: u for u, y in match_left.items()}
        # Alternating BFS from unmatched copies: free edge to Y, matched edge back.
        reached = {u for u in left if u not in match_left}
        queue = deque(sorted(reached))
        reached_y = set()
        while queue:
            u = queue.popleft()
            for y in adj[u]:
                if y in reached_y:
                    continue
                reached_y.add(y)
                w = match_right.get(y)
                if w is not None and w not in reached:
                    reached.add(w)
                    queue.append(w)
        x_bad = {x for (x, _c) in reached}
        if not x_bad or x_bad == set(xs):
            raise InvariantError("alternating search produced a degenerate violator")
        y_bad = {y for x in x_bad for y in b.x_neighbors(x) if y in ys}
        xs = [x for x in xs if x not in x_bad]
        ys -= y_bad


def verify_expansion(b: BipartiteSubgraph, p: ExpansionPair, c: int) -> bool:
    """Definitional check by subset enumeration (test helper; |X'| <= 20).

    True iff N(Y') is exactly X' and every nonempty Z ⊆ X' has at least
    c * |Z| neighbors inside Y'.
    """
    if c < 1:
        raise PreconditionError("expansion constant must be positive")
    xs = sorted(p.x_prime)
    if len(xs) > 20:
        raise PreconditionError("X' too large for exhaustive verification")
    if not p.x_prime <= b.side_x or not p.y_prime <= b.side_y:
        return False
    neigh_of_y = set()
    for y in p.y_prime:
        neigh_of_y.update(b.y_neighbors(y))
    if neigh_of_y != set(p.x_prime):
        return False
    x_adj = {x: frozenset(w for w in b.x_neighbors(x) if w in p.y_prime) for x in xs}
    for mask in range(1, 1 << len(xs)):
        z = [xs[i] for i in range(len(xs)) if mask >> i & 1]
        seen: set = set()
        for x in z:
            seen |= x_adj[x]
        if len(seen) < c * len(z):
            return False
    return True
