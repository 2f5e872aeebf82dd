import random
from collections import defaultdict

import pytest

from conftest import random_signed_digraph
from eisenspec.algebra import IntPolynomial
from eisenspec.bulk import (
    batch_matrices,
    charpoly_batch,
    codes_range,
    root_counts_batch,
    SignatureSpace,
)
from eisenspec.catalog import complete, complete_bipartite, cycle, path
from eisenspec.census import (
    CensusTask,
    cospectral_mates,
    enumerate_signatures,
    is_des,
    known_family,
    rank2_mate_solver,
)
from eisenspec.figures import cospectral_six_pair
from eisenspec.graphs import all_graphs, read_graph6_lines, to_graph6
from eisenspec.spectra import char_poly_exact, inertia
from eisenspec.switching import canonical_form, switching_isomorphic


def test_signature_counts():
    assert sum(1 for _ in enumerate_signatures(path(4).underlying())) == 1
    assert sum(1 for _ in enumerate_signatures(cycle(4).underlying())) == 6
    assert sum(1 for _ in enumerate_signatures(complete(4).underlying())) == 216


def test_signatures_cover_all_cycle_gains():
    gains = set()
    for phi in enumerate_signatures(cycle(4).underlying()):
        order = (0, 1, 2, 3)
        gains.add(sum(phi.gain(order[i], order[(i + 1) % 4]) for i in range(4)) % 6)
    assert gains == set(range(6))


def test_bulk_matches_scalar_path(rng):
    for n in range(2, 8):
        graph = random_signed_digraph(rng, n, p=0.7).underlying()
        space = SignatureSpace(graph)
        count = min(space.count, 300)
        codes = codes_range(space, 0, count)
        a, b = batch_matrices(space, codes)
        coeffs = charpoly_batch(a, b)
        for i in range(count):
            phi = space.codes_to_digraph(codes[i])
            assert tuple(coeffs[i]) == char_poly_exact(phi).coefficients
        n_pos, n_zero, n_neg = root_counts_batch(coeffs)
        for i in range(count):
            phi = space.codes_to_digraph(codes[i])
            assert (n_pos[i], n_zero[i], n_neg[i]) == inertia(phi)


def test_saltire_census():
    star = complete_bipartite(1, 4)
    partner = complete_bipartite(2, 2).disjoint_union(complete(1))
    assert char_poly_exact(star) == char_poly_exact(partner)
    report = is_des(star)
    assert report.des_verdict == "NOT_DES"
    assert len(report.classes) == 2
    forms = {key for key, _ in report.classes}
    assert forms == {canonical_form(star), canonical_form(partner)}


def test_unique_spectrum_at_order_four():
    report = is_des(complete(4))
    assert report.des_verdict == "DES" and len(report.classes) == 1


def test_restricted_census_finds_both_six_vertex_classes():
    a, b = cospectral_six_pair()
    report = cospectral_mates(
        CensusTask(n=6, target=char_poly_exact(a), graphs=(a.underlying(),))
    )
    forms = {key for key, _ in report.classes}
    assert {canonical_form(a), canonical_form(b)} <= forms
    assert len(forms) >= 2


def test_pruning_never_discards_mates():
    # bucket every 5-vertex signature by its polynomial once (no pruning at
    # all), then compare the pruned census against the unpruned buckets on
    # 100 random targets
    graphs = all_graphs(5)
    buckets = defaultdict(list)
    for gi, graph in enumerate(graphs):
        space = SignatureSpace(graph)
        codes = codes_range(space, 0, space.count)
        a, b = batch_matrices(space, codes)
        coeffs = charpoly_batch(a, b)
        for i in range(space.count):
            buckets[tuple(int(c) for c in coeffs[i])].append((gi, codes[i]))
    rng = random.Random(77)
    keys = sorted(buckets)
    for key in rng.sample(keys, 100):
        expected = set()
        for gi, row in buckets[key]:
            expected.add(
                canonical_form(SignatureSpace(graphs[gi]).codes_to_digraph(row))
            )
        task = CensusTask(n=5, target=IntPolynomial(key))
        report = cospectral_mates(task)
        assert {k for k, _ in report.classes} == expected


def test_scope_limited_beyond_builtin_source():
    big = complete(8)
    report = is_des(big)
    assert report.des_verdict == "SCOPE_LIMITED"


def test_census_with_graph6_source():
    star = complete_bipartite(1, 4)
    lines = "\n".join(to_graph6(g) for g in all_graphs(5))
    graphs = read_graph6_lines(lines)
    report = is_des(star, graphs=graphs)
    assert len(report.classes) == 2


def test_connected_only_excludes_disconnected_mate():
    star = complete_bipartite(1, 4)
    report = is_des(star, allow_disconnected=False)
    assert report.des_verdict == "DES"


def test_known_families_small():
    a, b = known_family("SMALL_K3STAR_T4")
    assert char_poly_exact(a) == char_poly_exact(b)
    assert switching_isomorphic(a, b) is None
    left, right = known_family("FAMILY_65", 1)
    assert char_poly_exact(left) == char_poly_exact(right)
    with pytest.raises(ValueError):
        known_family("FAMILY_65", 0)
    with pytest.raises(ValueError):
        known_family("NOPE")


def test_family_66_degenerates_at_one():
    a, b = known_family("FAMILY_66", 1)
    assert char_poly_exact(a) == char_poly_exact(b)
    assert switching_isomorphic(a, b) is not None


def test_rank2_mate_solver():
    assert rank2_mate_solver(1, 4) == [(1, 4, 0), (2, 2, 1)]
    assert rank2_mate_solver(2, 3) == [(2, 3, 0)]
    assert rank2_mate_solver(3, 5) == [(3, 5, 0)]
    # a 1x4 split would need five vertices, one more than the 2x2 source
    assert rank2_mate_solver(2, 2) == [(2, 2, 0)]
    assert rank2_mate_solver(1, 6) == [(1, 6, 0), (2, 3, 2)]


def test_census_threads_deterministic():
    star = complete_bipartite(1, 4)
    solo = is_des(star, threads=1)
    multi = is_des(star, threads=2)
    assert [k for k, _ in solo.classes] == [k for k, _ in multi.classes]
    assert solo.to_json()["classes"] == multi.to_json()["classes"]
