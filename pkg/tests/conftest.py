import random

import pytest

from eisenspec.digraph import SignedDigraph, from_edge_list


def random_signed_digraph(rng: random.Random, n: int, p: float = 0.5) -> SignedDigraph:
    entries = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                entries.append((u, v, rng.randrange(6)))
    return from_edge_list(n, entries)


def random_bipartite_digraph(rng: random.Random, n: int, p: float = 0.6) -> SignedDigraph:
    left_size = rng.randrange(1, n)
    entries = []
    for u in range(left_size):
        for v in range(left_size, n):
            if rng.random() < p:
                entries.append((u, v, rng.randrange(6)))
    return from_edge_list(n, entries)


@pytest.fixture
def rng():
    return random.Random(20240811)
