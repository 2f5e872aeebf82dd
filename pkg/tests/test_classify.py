import pytest

from eisenspec.catalog import (
    c5_type,
    complete,
    complete_bipartite,
    complete_double_star,
    complete_star,
    cycle,
    kite,
    path,
    semi_complete_hat,
    semi_complete_plain,
    semi_complete_tilde,
    transitive_tournament_4,
)
from eisenspec.classify import (
    c5_signature_type,
    check_c5_table,
    check_two_nonneg_necessary,
    classify_lambda2_negative,
    classify_rank2,
    classify_rank3,
    kite_condition,
    semicomplete_bridge_classify,
)
from eisenspec.digraph import from_edge_list
from eisenspec.expansions import clique_expand, twin_expand
from eisenspec.figures import bridged_clique_zero_pair, pentagon_expansion_zero_pair
from eisenspec.scan import rebuild_hits, sweep
from eisenspec.spectra import inertia, rank_exact
from eisenspec.switching import SwitchingFunction, apply_switch


def test_rank2_verdicts(rng):
    v = classify_rank2(complete_bipartite(2, 3))
    assert v.family == "RANK2_COMPLETE_BIPARTITE" and v.params["parts"] == [2, 3]
    scrambled = apply_switch(
        complete_bipartite(2, 3).relabel([4, 1, 0, 3, 2]),
        SwitchingFunction(tuple(rng.randrange(6) for _ in range(5))),
    )
    assert classify_rank2(scrambled).family == "RANK2_COMPLETE_BIPARTITE"
    assert classify_rank2(complete(3)).is_none
    twisted = from_edge_list(4, [(0, 2, 1), (0, 3, 0), (1, 2, 0), (1, 3, 0)])
    assert rank_exact(twisted) == 4
    assert classify_rank2(twisted).is_none
    with pytest.raises(ValueError):
        classify_rank2(complete(2).disjoint_union(complete(2)))


def test_rank3_verdicts():
    v = classify_rank3(twin_expand(complete_star(3), [3, 5, 16]))
    assert v.family == "RANK3_TRIANGLE"
    assert v.params["triangle_class"] == "omega"
    assert sorted(v.params["tau"]) == [3, 5, 16]
    v = classify_rank3(twin_expand(transitive_tournament_4("+"), [1, 1, 6, 6]))
    assert v.family == "RANK3_T4_POS"
    v = classify_rank3(twin_expand(transitive_tournament_4("-"), [2, 1, 1, 2]))
    assert v.family == "RANK3_T4_NEG"
    assert classify_rank3(path(4)).is_none
    v = classify_rank3(complete(3).negate())
    assert v.family == "RANK3_TRIANGLE" and v.params["triangle_class"] == "-1"


def test_lambda2_negative_verdicts():
    assert classify_lambda2_negative(complete_star(6)).family == "LAMBDA2NEG_KSTAR"
    assert classify_lambda2_negative(complete(5)).family == "LAMBDA2NEG_K"
    assert classify_lambda2_negative(complete_double_star(5)).is_none
    assert classify_lambda2_negative(complete(4).negate()).is_none
    assert classify_lambda2_negative(from_edge_list(3, [])).is_none


def test_two_nonneg_necessary_conditions():
    bad_c4 = check_two_nonneg_necessary(cycle(4, 0))
    assert any(v["condition"] == "C4_gain_one" for v in bad_c4)
    assert check_two_nonneg_necessary(clique_expand(cycle(4, 4), [3, 1, 1, 1])) == []
    bad_k4 = check_two_nonneg_necessary(complete(4).negate())
    assert any(v["condition"] == "K4_positive_triangle" for v in bad_k4)
    bad_c5 = check_two_nonneg_necessary(cycle(5, 1))
    assert any(v["condition"] == "C5_nonnegative_gain" for v in bad_c5)


def test_c5_types_round_trip():
    cases = [
        ("A", [2, 1, 1, 1, 1]),
        ("A", [3, 3, 3, 2, 1]),
        ("B", [1, 1, 1, 1, 2]),
        ("B", [2, 1, 1, 1, 3]),
        ("C", [1, 1, 1, 1, 1]),
        ("C", [5, 1, 1, 1, 1]),
        ("D", [2, 1, 1, 1, 2]),
        ("D", [1, 1, 1, 1, 2]),
    ]
    for tag, tau in cases:
        verdict = c5_signature_type(c5_type(tag, tau))
        assert verdict.family == f"C5_TYPE_{tag}", (tag, tau, verdict)


def test_c5_types_invariant_under_switching(rng):
    for tag, tau in [("A", [2, 2, 1, 1, 1]), ("C", [4, 1, 1, 1, 1]), ("D", [2, 1, 1, 1, 2])]:
        phi = c5_type(tag, tau)
        scrambled = apply_switch(
            phi, SwitchingFunction(tuple(rng.randrange(6) for _ in range(phi.n)))
        )
        assert c5_signature_type(scrambled).family == f"C5_TYPE_{tag}"


def test_c5_type_rejections():
    assert c5_signature_type(cycle(5, 0)).is_none
    assert c5_signature_type(cycle(5, 1)).is_none
    with pytest.raises(ValueError):
        c5_signature_type(complete(4))
    a, b = pentagon_expansion_zero_pair()
    assert c5_signature_type(a).is_none
    assert c5_signature_type(b).is_none


def test_single_negative_arc_is_type_c():
    phi = from_edge_list(
        5, [(0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 4, 0), (4, 0, 4)]
    )
    assert c5_signature_type(phi).family == "C5_TYPE_C"


def test_c5_consistency_on_small_expansion():
    # every two-positive signature on the doubled pentagon receives a type
    graph = c5_type("A", [2, 1, 1, 1, 1]).underlying()
    _, hits = sweep([graph], "inertia_eq", (2, 0, 4))
    digraphs = rebuild_hits([graph], hits)
    assert digraphs, "the doubled pentagon must admit two-positive signatures"
    for phi in digraphs:
        assert not c5_signature_type(phi).is_none


def test_check_c5_table():
    assert check_c5_table([3, 3, 3, 2, 1], "A")
    assert not check_c5_table([4, 3, 3, 2, 2], "A")
    assert check_c5_table([9, 1, 1, 1, 1], "C")
    assert check_c5_table([1, 2, 3, 3, 2], "A")  # dihedral image of a column
    assert check_c5_table([7, 7, 1, 1, 7], "B")
    assert check_c5_table([1, 1, 7, 7, 7], "B")  # reflection through the star
    assert not check_c5_table([7, 1, 7, 1, 7], "B")
    assert check_c5_table([7, 1, 1, 7, 7], "B")
    assert check_c5_table([1, 9, 1, 1, 1], "C")  # the bundle position is gauge
    assert not check_c5_table([2, 2, 2, 2, 2], "C")
    assert check_c5_table([3, 1, 1, 2, 4], "D")  # reversal of a free column
    with pytest.raises(ValueError):
        check_c5_table([1, 2, 3], "A")
    with pytest.raises(ValueError):
        check_c5_table([1, 1, 1, 1, 1], "E")


def test_kite_condition():
    assert kite_condition(kite(5, 2))
    assert kite_condition(kite(4, 1))
    starred = from_edge_list(
        7,
        [(u, v, 0) for u, v in kite(5, 2).gains if (u, v) != (0, 1)] + [(0, 1, 1)],
    )
    assert kite_condition(starred)
    # two one-arc triangles in the clique that share no edge lose the property
    twisted = from_edge_list(
        7,
        [(u, v, 0) for u, v in kite(5, 2).gains if (u, v) not in ((0, 1), (2, 3))]
        + [(0, 1, 1), (2, 3, 1)],
    )
    assert not kite_condition(twisted)
    with pytest.raises(ValueError):
        kite_condition(path(5))


def test_semicomplete_classes():
    assert semicomplete_bridge_classify(semi_complete_plain(2, 2)).family == "SEMI_G"
    tilde = semi_complete_tilde(3, 2)
    assert semicomplete_bridge_classify(tilde).family == "SEMI_TILDE"
    assert inertia(tilde) == (2, 0, 5)
    assert semicomplete_bridge_classify(semi_complete_hat(2, 4)).family == "SEMI_HAT"
    bad_a, bad_b = bridged_clique_zero_pair()
    assert semicomplete_bridge_classify(bad_a).is_none
    with pytest.raises(ValueError):
        semicomplete_bridge_classify(complete(5))


def test_zero_witness_figures():
    for phi in bridged_clique_zero_pair() + pentagon_expansion_zero_pair():
        n_pos, n_zero, _ = inertia(phi)
        assert n_pos == 2 and n_zero >= 1
