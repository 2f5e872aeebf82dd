import random

import pytest

from conftest import random_signed_digraph
from eisenspec.algebra import IntPolynomial
from eisenspec.catalog import (
    complete,
    complete_bipartite,
    complete_star,
    path,
    transitive_tournament_4,
)
from eisenspec.digraph import from_edge_list
from eisenspec.expansions import (
    clique_expand,
    clique_expand_charpoly,
    clique_reduce,
    find_pseudotwins,
    find_twins,
    reduction_blocks,
    twin_expand,
    twin_expand_charpoly,
    twin_reduce,
)
from eisenspec.spectra import char_poly_exact, rank_exact
from eisenspec.switching import canonical_form, switching_isomorphic


def test_twin_expand_shapes():
    assert twin_expand(complete(2), [2, 3]) == complete_bipartite(2, 3)
    big = twin_expand(complete(3), [1, 8, 15])
    assert big.n == 24 and rank_exact(big) == 3
    phi = complete_star(4)
    assert twin_expand(phi, [1, 1, 1, 1]) == phi


def test_clique_expand_shapes():
    assert clique_expand(complete(2), [2, 1]) == complete(3)
    phi = complete_star(4)
    assert clique_expand(phi, [1, 1, 1, 1]) == phi


def test_expand_validation():
    with pytest.raises(ValueError):
        twin_expand(complete(3), [1, 2])
    with pytest.raises(ValueError):
        clique_expand(complete(3), [1, 0, 2])


def test_find_twins():
    k23 = complete_bipartite(2, 3)
    assert find_twins(k23) == [(0, 1), (2, 3), (2, 4), (3, 4)]
    assert find_twins(complete(3)) == []
    # a block gain bumped uniformly by one unit keeps the rows proportional
    phi = twin_expand(complete(2), [2, 1])
    bumped = from_edge_list(3, [(0, 2, 1), (1, 2, 1)])
    assert (0, 1) in find_twins(bumped)
    assert bumped.n == phi.n


def test_find_pseudotwins():
    assert find_pseudotwins(complete(3)) == [(0, 1), (0, 2), (1, 2)]
    mid = clique_expand(path(3), [1, 2, 1])
    assert (1, 2) in find_pseudotwins(mid)
    assert find_pseudotwins(complete(3).negate()) == []


def test_reductions():
    assert twin_reduce(complete_bipartite(3, 4)) == complete(2)
    assert clique_reduce(complete(6)).n == 1
    base = transitive_tournament_4("+")
    reduced = twin_reduce(twin_expand(base, [2, 1, 3, 2]))
    assert switching_isomorphic(reduced, base) is not None


def test_reduction_blocks():
    reduced, tau = reduction_blocks(twin_expand(complete_star(3), [3, 5, 16]))
    assert sorted(tau) == [3, 5, 16]
    assert reduced.n == 3


def test_spectral_padding(rng):
    for _ in range(15):
        k = rng.randint(2, 4)
        base = random_signed_digraph(rng, k, p=0.9)
        tau = [rng.randint(1, 3) for _ in range(k)]
        pad = sum(t - 1 for t in tau)
        te_poly = char_poly_exact(twin_expand(base, tau))
        for _ in range(pad):
            te_poly = te_poly.divide_exact(IntPolynomial((1, 0)))
        ce_poly = char_poly_exact(clique_expand(base, tau))
        for _ in range(pad):
            ce_poly = ce_poly.divide_exact(IntPolynomial((1, 1)))
        assert rank_exact(twin_expand(base, tau)) == rank_exact(base)


def test_reduce_after_expand_recovers_class(rng):
    for _ in range(10):
        k = rng.randint(2, 4)
        base = random_signed_digraph(rng, k, p=0.9)
        if not base.underlying().is_connected():
            continue
        tau = [rng.randint(1, 3) for _ in range(k)]
        te = twin_expand(base, tau)
        reduced = twin_reduce(te)
        if reduced.n <= 12 and base.n <= 12:
            assert canonical_form(reduced) == canonical_form(twin_reduce(base))


def test_reduction_order_stability(rng):
    # deleting twins in random orders must land in one switching class
    from eisenspec.expansions import find_twins as finder

    for _ in range(10):
        base = random_signed_digraph(rng, 3, p=1.0)
        te = twin_expand(base, [rng.randint(1, 3) for _ in range(3)])
        forms = set()
        for seed in range(5):
            local = random.Random(seed)
            current = te
            while True:
                pairs = finder(current)
                if not pairs:
                    break
                u, v = local.choice(pairs)
                current = current.induced([i for i in range(current.n) if i != v])
            forms.add(canonical_form(current))
        assert len(forms) == 1


def test_quotient_charpolys_match_dense(rng):
    for _ in range(25):
        k = rng.randint(1, 4)
        base = random_signed_digraph(rng, k, p=0.8)
        tau = [rng.randint(1, 4) for _ in range(k)]
        assert twin_expand_charpoly(base, tau) == char_poly_exact(twin_expand(base, tau))
        assert clique_expand_charpoly(base, tau) == char_poly_exact(
            clique_expand(base, tau)
        )
