import pytest

from conftest import random_signed_digraph
from eisenspec.algebra import IntPolynomial
from eisenspec.catalog import complete, complete_star, cycle, path
from eisenspec.sachs import char_poly_sachs, enumerate_elementary
from eisenspec.spectra import char_poly_exact


def test_enumeration_counts():
    k3 = complete(3).underlying()
    assert len(list(enumerate_elementary(k3, 2))) == 3
    assert len(list(enumerate_elementary(k3, 3))) == 1
    c4 = cycle(4).underlying()
    assert len(list(enumerate_elementary(c4, 4))) == 3


def test_every_subgraph_enumerated_once():
    k4 = complete(4).underlying()
    seen = set()
    for j in range(2, 5):
        for sub in enumerate_elementary(k4, j):
            key = (sub.edges, sub.cycles)
            assert key not in seen
            seen.add(key)
    # K4: 6 single edges, 3 perfect matchings, 4 triangles,
    # 4 triangle-skipping... no disjoint edge fits a triangle in K4,
    # and 3 four-cycles
    assert len(seen) == 6 + 3 + 4 + 3


def test_char_poly_goldens():
    assert char_poly_sachs(complete_star(4)) == IntPolynomial((1, 0, -6, -6, -1))
    assert char_poly_sachs(cycle(4, 4)) == IntPolynomial((1, 0, -4, 0, 3))
    assert char_poly_sachs(path(4)) == IntPolynomial((1, 0, -3, 0, 1))


def test_low_coefficients(rng):
    for _ in range(30):
        phi = random_signed_digraph(rng, rng.randint(2, 7))
        coeffs = char_poly_sachs(phi).coefficients
        assert coeffs[1] == 0
        assert coeffs[2] == -phi.m


def test_oracle_equality_random(rng):
    for _ in range(60):
        phi = random_signed_digraph(rng, rng.randint(1, 7))
        assert char_poly_sachs(phi) == char_poly_exact(phi)


def test_size_guard():
    big = complete(13)
    with pytest.raises(ValueError):
        char_poly_sachs(big)
    with pytest.raises(ValueError):
        list(enumerate_elementary(big.underlying(), 2))
