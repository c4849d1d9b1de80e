import itertools
import random

import pytest

from mistkernel import (
    BipartiteSubgraph,
    PreconditionError,
    find_expansion_2,
    verify_expansion,
)
from mistkernel.expansion import ExpansionPair


def bip(nx, ny, pairs):
    return BipartiteSubgraph(range(nx), range(nx, nx + ny), pairs)


class TestVerifyExpansion:
    def test_k24_passes_c2(self):
        b = bip(2, 4, [(x, y) for x in (0, 1) for y in (2, 3, 4, 5)])
        p = ExpansionPair({0, 1}, {2, 3, 4, 5})
        assert verify_expansion(b, p, 2)

    def test_k24_fails_c3(self):
        b = bip(2, 4, [(x, y) for x in (0, 1) for y in (2, 3, 4, 5)])
        p = ExpansionPair({0, 1}, {2, 3, 4, 5})
        assert not verify_expansion(b, p, 3)

    def test_outside_neighbor_fails(self):
        # y=4 also sees x=1, which is outside X'
        b = bip(2, 3, [(0, 2), (0, 3), (0, 4), (1, 4)])
        p = ExpansionPair({0}, {2, 3, 4})
        assert not verify_expansion(b, p, 2)


class TestFindExpansion2:
    def test_single_x(self):
        b = bip(1, 2, [(0, 1), (0, 2)])
        p = find_expansion_2(b)
        assert p.x_prime == frozenset({0})
        assert p.y_prime == frozenset({1, 2})

    def test_complete_k24(self):
        b = bip(2, 4, [(x, y) for x in (0, 1) for y in range(2, 6)])
        p = find_expansion_2(b)
        assert p.x_prime == frozenset({0, 1})
        assert p.y_prime == frozenset(range(2, 6))

    def test_unbalanced_split(self):
        # y2..y4 see only x0; y5 sees only x1: ({x0, x1}, Y) is invalid
        b = bip(2, 4, [(0, 2), (0, 3), (0, 4), (1, 5)])
        p = find_expansion_2(b)
        assert verify_expansion(b, p, 2)
        assert p.x_prime == frozenset({0})
        assert p.y_prime <= frozenset({2, 3, 4})

    def test_precondition_errors(self):
        with pytest.raises(PreconditionError):
            find_expansion_2(bip(2, 3, [(0, 2), (1, 3), (1, 4)]))
        with pytest.raises(PreconditionError):
            find_expansion_2(bip(1, 2, [(0, 1)]))  # isolated y


class TestRandomInstances:
    @staticmethod
    def random_valid_instance(rng):
        nx = rng.randrange(1, 7)
        ny = rng.randrange(2 * nx, 13)
        pairs = set()
        for y in range(nx, nx + ny):
            # at least one neighbor each
            pairs.add((rng.randrange(nx), y))
            for x in range(nx):
                if rng.random() < 0.3:
                    pairs.add((x, y))
        return bip(nx, ny, pairs)

    def test_outputs_always_verify(self):
        rng = random.Random(97)
        for _ in range(150):
            b = self.random_valid_instance(rng)
            p = find_expansion_2(b)
            assert p.x_prime <= b.side_x and p.y_prime <= b.side_y
            assert verify_expansion(b, p, 2)

    def test_pair_is_self_contained(self):
        rng = random.Random(101)
        for _ in range(60):
            b = self.random_valid_instance(rng)
            p = find_expansion_2(b)
            restricted = b.restrict(p.x_prime, p.y_prime)
            assert verify_expansion(restricted, p, 2)

    def test_exhaustive_on_tiny_instances(self):
        # every valid (X', Y') the solver returns is among the brute-force valid pairs
        rng = random.Random(103)
        for _ in range(40):
            nx = rng.randrange(1, 4)
            ny = rng.randrange(2 * nx, 2 * nx + 3)
            pairs = set()
            for y in range(nx, nx + ny):
                pairs.add((rng.randrange(nx), y))
                for x in range(nx):
                    if rng.random() < 0.4:
                        pairs.add((x, y))
            b = bip(nx, ny, pairs)
            p = find_expansion_2(b)
            valid = []
            xs = sorted(b.side_x)
            ys = sorted(b.side_y)
            for rx in range(1, nx + 1):
                for combo_x in itertools.combinations(xs, rx):
                    for ry in range(1, ny + 1):
                        for combo_y in itertools.combinations(ys, ry):
                            cand = ExpansionPair(combo_x, combo_y)
                            if verify_expansion(b, cand, 2):
                                valid.append(
                                    (frozenset(combo_x), frozenset(combo_y))
                                )
            assert (p.x_prime, p.y_prime) in valid
