import random

import pytest

from mistkernel import (
    Graph,
    PreconditionError,
    decide_pist,
    hamiltonian_path,
    internal_count,
    opt_internal,
)
from bruteforce import brute_hamiltonian_path, brute_opt_internal


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(m):
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def random_connected(rng, n, extra):
    edges = {(i, rng.randrange(i)) for i in range(1, n)}
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((max(u, v), min(u, v)))
    return Graph(n, edges)


class TestOptInternal:
    def test_path(self):
        for n in (2, 3, 5, 8):
            assert opt_internal(path_graph(n)).opt == max(0, n - 2)

    def test_star(self):
        for m in (2, 4, 6):
            assert opt_internal(star_graph(m)).opt == 1

    def test_k5(self):
        g = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        assert opt_internal(g).opt == 3

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            opt_internal(Graph(4, [(0, 1), (2, 3)]))

    def test_size_guard(self, monkeypatch):
        monkeypatch.setenv("MIST_ORACLE_MAX_N", "4")
        with pytest.raises(PreconditionError):
            opt_internal(path_graph(5))

    def test_witness_is_optimal(self):
        rng = random.Random(61)
        for _ in range(40):
            g = random_connected(rng, rng.randrange(2, 9), rng.randrange(0, 8))
            res = opt_internal(g)
            assert internal_count(res.witness) == res.opt
            assert res.witness.edges <= g.edges
            assert res.opt == brute_opt_internal(g)

    def test_upper_bound_and_hamiltonian_boundary(self):
        rng = random.Random(67)
        for _ in range(40):
            n = rng.randrange(3, 9)
            g = random_connected(rng, n, rng.randrange(0, 10))
            res = opt_internal(g)
            assert res.opt <= n - 2
            assert (res.opt == n - 2) == brute_hamiltonian_path(g)


class TestHamiltonianPath:
    def test_agrees_with_brute_force(self):
        rng = random.Random(71)
        for _ in range(60):
            n = rng.randrange(1, 8)
            if n == 1:
                g = Graph(1)
            else:
                g = random_connected(rng, n, rng.randrange(0, 6))
            path = hamiltonian_path(g)
            assert (path is not None) == brute_hamiltonian_path(g)
            if path is not None:
                assert sorted(path) == list(range(n))
                assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


class TestDecidePist:
    def test_p6_hamiltonian(self):
        yes, witness = decide_pist(path_graph(6), 4)
        assert yes and internal_count(witness) >= 4

    def test_star_no(self):
        yes, witness = decide_pist(star_graph(5), 2)
        assert not yes and witness is None

    def test_p6_above_max(self):
        yes, _ = decide_pist(path_graph(6), 5)
        assert not yes

    def test_agrees_with_direct_oracle(self):
        rng = random.Random(73)
        for _ in range(40):
            g = random_connected(rng, rng.randrange(2, 10), rng.randrange(0, 6))
            opt = opt_internal(g).opt
            for k in range(0, g.n + 1):
                yes, witness = decide_pist(g, k)
                assert yes == (opt >= k)
                if yes:
                    assert witness.edges <= g.edges
                    assert internal_count(witness) >= k
