"""Hypergraphic matroid machinery.

A set F of hyperedges is a hyperforest when it satisfies the strong Hall
condition: every nonempty F' ⊆ F covers at least |F'| + 1 vertices.  A
hyperforest with |V| - 1 edges is a hypertree; a hypergraph contains a
hypertree exactly when every partition of its vertices has at least
|parts| - 1 border hyperedges (partition-connectivity).  This module
provides the hyperforest oracle, greedy hypertree construction, shrinking
a hypertree to an ordinary spanning tree, and a deficient-partition
certificate for the negative case.
"""

from __future__ import annotations

from .graph import InvariantError, PreconditionError, SpanningTree, _augment


class Hypergraph:
    """Vertices 0..n-1 plus a list of hyperedges (nonempty vertex subsets).

    Edge ids are positions in the list and stay stable under sub-selection.
    Duplicate hyperedges are allowed.
    """

    __slots__ = ("n", "hyperedges")

    def __init__(self, n: int, hyperedges):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        edges = []
        for e in hyperedges:
            fs = frozenset(e)
            if not fs:
                raise PreconditionError("hyperedges must be nonempty")
            if any(not (0 <= v < n) for v in fs):
                raise PreconditionError(f"hyperedge {sorted(fs)} out of range")
            edges.append(fs)
        self.n = n
        self.hyperedges = tuple(edges)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m})"


class Partition:
    """Disjoint nonempty parts covering 0..n-1, canonically ordered by minimum."""

    __slots__ = ("n", "parts")

    def __init__(self, n: int, parts):
        ps = [frozenset(p) for p in parts]
        if any(not p for p in ps):
            raise PreconditionError("partition parts must be nonempty")
        seen: set = set()
        for p in ps:
            if seen & p:
                raise PreconditionError("partition parts overlap")
            seen |= p
        if seen != set(range(n)):
            raise PreconditionError("parts do not cover the vertex set")
        self.n = n
        self.parts = tuple(sorted(ps, key=min))

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition({[sorted(p) for p in self.parts]})"


class Hyperforest:
    """A selection of hyperedge ids satisfying the strong Hall condition."""

    __slots__ = ("edge_ids",)

    def __init__(self, edge_ids):
        self.edge_ids = frozenset(edge_ids)

    def __len__(self):
        return len(self.edge_ids)

    def __repr__(self):
        return f"Hyperforest({sorted(self.edge_ids)})"


# ---------------------------------------------------------------------------
# Internal helpers on plain families of vertex sets


def _has_sdr(sets) -> bool:
    """True iff the family admits a system of distinct representatives."""
    adj = {i: tuple(sorted(s)) for i, s in enumerate(sets)}
    match = _augment(adj, range(len(sets)))
    return len(match) == len(sets)


def _family_is_hyperforest(n: int, sets) -> bool:
    """Strong Hall condition for a family of vertex subsets of 0..n-1.

    Equivalent formulation: for every vertex v in the union, the family
    {e - {v}} admits a system of distinct representatives.
    """
    if not sets:
        return True
    if len(sets) > n - 1:
        return False
    union: set = set()
    for s in sets:
        union |= s
    for v in sorted(union):
        reduced = [s - {v} for s in sets]
        if any(not s for s in reduced):
            return False
        if not _has_sdr(reduced):
            return False
    return True


def _greedy_hypertree_sets(n: int, sets) -> list[int] | None:
    """Greedy matroid construction over a plain family; returns chosen ids."""
    chosen: list = []
    chosen_ids: list[int] = []
    for eid, s in enumerate(sets):
        if len(chosen) == n - 1:
            break
        if _family_is_hyperforest(n, chosen + [s]):
            chosen.append(s)
            chosen_ids.append(eid)
    return chosen_ids if len(chosen_ids) == n - 1 else None


def _is_partition_connected(n: int, sets) -> bool:
    return _greedy_hypertree_sets(n, sets) is not None


# ---------------------------------------------------------------------------
# Operations


def is_hyperforest(h: Hypergraph, edge_ids) -> bool:
    """Strong Hall test for the selected hyperedges."""
    ids = sorted(set(edge_ids))
    if any(not (0 <= i < h.m) for i in ids):
        raise PreconditionError("edge id out of range")
    return _family_is_hyperforest(h.n, [h.hyperedges[i] for i in ids])


def greedy_hypertree(h: Hypergraph) -> Hyperforest | None:
    """Build a hypertree greedily in ascending edge-id order, if one exists."""
    if h.n < 1:
        raise PreconditionError("hypergraph must have at least one vertex")
    ids = _greedy_hypertree_sets(h.n, h.hyperedges)
    return Hyperforest(ids) if ids is not None else None


def shrink_to_tree(h: Hypergraph, t: Hyperforest):
    """Shrink a hypertree to a spanning tree, one 2-subset per hyperedge.

    Repeatedly picks the lowest-id edge of size > 2 and deletes the
    lowest-indexed vertex whose removal keeps the strong Hall condition
    (one always exists for a hypertree).  Returns the tree together with
    the edge-id -> tree-edge mapping.
    """
    ids = sorted(t.edge_ids)
    current = {i: set(h.hyperedges[i]) for i in ids}
    if len(ids) != h.n - 1 or not _family_is_hyperforest(
        h.n, [frozenset(s) for s in current.values()]
    ):
        raise PreconditionError("edge selection is not a hypertree")
    while True:
        big = [i for i in ids if len(current[i]) > 2]
        if not big:
            break
        eid = big[0]
        shrunk = False
        for v in sorted(current[eid]):
            trial = [
                frozenset(current[i] - {v}) if i == eid else frozenset(current[i])
                for i in ids
            ]
            if _family_is_hyperforest(h.n, trial):
                current[eid].discard(v)
                shrunk = True
                break
        if not shrunk:
            raise InvariantError("no vertex of a hypertree edge could be deleted")
    mapping = {}
    tree_edges = []
    for i in ids:
        u, v = sorted(current[i])
        mapping[i] = (u, v)
        tree_edges.append((u, v))
    tree = SpanningTree(range(h.n), tree_edges)
    return tree, mapping


def border(h: Hypergraph, p: Partition) -> frozenset:
    """Ids of the hyperedges intersecting at least two parts of the partition."""
    if p.n != h.n:
        raise PreconditionError("partition is over a different vertex set")
    part_of = {}
    for idx, part in enumerate(p.parts):
        for v in part:
            part_of[v] = idx
    out = []
    for eid, e in enumerate(h.hyperedges):
        if len({part_of[v] for v in e}) >= 2:
            out.append(eid)
    return frozenset(out)


def deficient_partition(h: Hypergraph) -> Partition | None:
    """A partition with |border| <= |parts| - 2, or None if partition-connected.

    Works by contracting vertex pairs while the contraction stays
    non-partition-connected; at the fixpoint the singleton partition of
    the contracted hypergraph is deficient, and expanding the contraction
    classes yields the certificate on the original vertices.
    """
    if h.n < 2:
        raise PreconditionError("need at least two vertices")
    if _is_partition_connected(h.n, h.hyperedges):
        return None
    classes = [[v] for v in range(h.n)]
    while True:
        merged = False
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                trial = [c for k, c in enumerate(classes) if k not in (i, j)]
                trial.append(sorted(classes[i] + classes[j]))
                trial.sort(key=lambda c: c[0])
                if not _is_partition_connected(len(trial), _contract(h, trial)):
                    classes = trial
                    merged = True
                    break
            if merged:
                break
        if not merged:
            break
    p = Partition(h.n, classes)
    if len(border(h, p)) > len(p) - 2:
        raise InvariantError("contraction fixpoint did not yield a deficient partition")
    return p


def _contract(h: Hypergraph, classes) -> list[frozenset]:
    cls_of = {}
    for idx, cls in enumerate(classes):
        for v in cls:
            cls_of[v] = idx
    return [frozenset(cls_of[v] for v in e) for e in h.hyperedges]
