import pytest

from zdmd.constructions import (TYPO_NOTES, Regime, RegimeError, Z77_EXAMPLE, build_labeled_bs,
                                landmark_labels, landmark_set, parse_label, predicted_branch,
                                predicted_code, predicted_dimension, pretty, regime,
                                residue_isomorphism)
from zdmd.graph import barycentric_subdivision, bfs_all_pairs, is_independent_set
from zdmd.resolving import equidistant_family_bound, is_resolving, metric_code
from zdmd.ring import zero_divisor_graph

COVERED = [(3, 5), (3, 7), (3, 11), (3, 13), (5, 7), (5, 11), (5, 13), (7, 11), (7, 13),
           (7, 17), (11, 19), (13, 23)]


@pytest.mark.parametrize("p,q,expected", [
    (2, 13, Regime.TREE), (3, 5, Regime.P3), (5, 11, Regime.GENERAL), (7, 13, Regime.GENERAL),
    (5, 7, Regime.Q2P3), (7, 11, Regime.Q2P3), (11, 13, Regime.STRICT), (13, 17, Regime.STRICT),
    (11, 17, Regime.STRICT), (7, 23, Regime.GENERAL)])
def test_regime(p, q, expected):
    assert regime(p, q) is expected


def test_every_prime_pair_gets_a_prediction():
    # for odd primes q > p means q >= p + 2, so the strict range has no hole below it
    from zdmd.ring import is_prime
    primes = [n for n in range(2, 80) if is_prime(n)]
    for p in primes:
        for q in primes:
            if q > p:
                assert regime(p, q) is not Regime.OPEN


def test_regime_errors():
    for bad in [(4, 7), (7, 5), (7, 7), (1, 3)]:
        with pytest.raises(RegimeError):
            regime(*bad)


def test_predicted_dimension_examples():
    assert (predicted_dimension(2, 13).kind, predicted_dimension(2, 13).value) == ("exact", 11)
    assert predicted_dimension(5, 7).value == 6
    assert predicted_dimension(7, 11).value == 10
    assert str(predicted_dimension(11, 13)) == "> 11"


def test_label_parsing():
    assert parse_label("c^3_6") == ("c", 3, 6)
    assert parse_label("b2_10") == ("b", 2, 10)
    assert parse_label("a_1") == ("a", None, 1)
    assert pretty("c3_6") == "c^3_6"
    for bad in ["c_1", "a2_1", "x_1", "q"]:
        with pytest.raises(ValueError):
            parse_label(bad)


@pytest.mark.parametrize("p,q", [(2, 5), (3, 7), (5, 7), (7, 11)])
def test_labeled_graph_is_bs_of_zdg(p, q):
    g, part = build_labeled_bs(p, q)
    bs, _ = barycentric_subdivision(zero_divisor_graph(p * q))
    phi = residue_isomorphism(p, q)
    assert sorted(phi.values()) == list(range(bs.n))
    assert {tuple(sorted((phi[u], phi[v]))) for u, v in g.edges()} == set(bs.edges())
    assert g.n == p * q - 1 and g.edge_count == 2 * (p - 1) * (q - 1)
    assert all(g.degree(v) == p - 1 for v in part.a.values())
    assert all(g.degree(v) == q - 1 for v in part.qv.values())


def test_partition_lookup():
    g, part = build_labeled_bs(7, 11)
    v = part.vertex("c^3_6")
    assert part.label(v) == "c3_6"
    assert g.adj[v] == {part.a[6], part.qv[3]}
    assert part.anchor_q(part.vertex("b1_2")) == 4
    with pytest.raises(ValueError):
        part.vertex("b4_1")


def test_landmark_layout():
    assert landmark_labels(3, 7) == ["a_1", "b1_2", "b1_3", "b1_4", "b1_5"]
    assert landmark_labels(7, 11) == ["a_1", "c1_2", "c1_3", "c2_4", "c2_5", "c3_6", "c3_7",
                                      "b1_8", "b1_9", "b2_10"]
    # q = 2p - 3 runs the last block one further
    assert len(landmark_labels(5, 7)) == 6 and len(landmark_labels(5, 11)) == 9
    with pytest.raises(RegimeError):
        landmark_labels(2, 7)
    with pytest.raises(RegimeError):
        landmark_labels(11, 13)


@pytest.mark.parametrize("p,q", COVERED)
def test_landmarks_resolve_and_are_independent(p, q):
    g, part = build_labeled_bs(p, q)
    E = landmark_set(p, q)
    dm = bfs_all_pairs(g)
    assert is_resolving(dm, E)[0]
    assert is_independent_set(g, E)
    # landmark k >= 2 sits next to a_k
    for k, v in enumerate(E[1:], start=2):
        assert part.a[k] in g.adj[v]
    assert equidistant_family_bound(g, list(part.a.values()), dm) == q - 2


@pytest.mark.parametrize("p,q", COVERED)
def test_tables_match_bfs_everywhere(p, q):
    g, part = build_labeled_bs(p, q)
    E = landmark_set(p, q)
    dm = bfs_all_pairs(g)
    gaps = []
    for v in range(g.n):
        if v in E:
            continue
        code = predicted_code(p, q, part.label(v))
        if code is None:
            gaps.append(part.label(v))
        else:
            assert code == metric_code(dm, v, E), part.label(v)
    assert gaps == []


def test_z77_example_values():
    assert len(Z77_EXAMPLE) == 76
    assert Z77_EXAMPLE["q_1"] == (2, 1, 1, 3, 3, 3, 3, 3, 3, 3)
    assert Z77_EXAMPLE["c3_6"] == (3, 4, 4, 4, 4, 0, 2, 4, 4, 4)
    g, part = build_labeled_bs(7, 11)
    dm = bfs_all_pairs(g)
    E = landmark_set(7, 11)
    for label, code in Z77_EXAMPLE.items():
        assert metric_code(dm, part.vertex(label), E) == code, label


def test_spot_codes():
    assert predicted_code(3, 7, "q_2") == (2, 1, 1, 1, 1)
    assert predicted_code(5, 11, "a_10") == (4, 3, 3, 3, 3, 3, 3, 3, 3)
    assert predicted_branch(7, 11, "a_1") == (None, None)


def test_typo_notes_name_real_branches():
    seen = set()
    for p, q in COVERED:
        _, part = build_labeled_bs(p, q)
        for label in part.names.values():
            branch, _ = predicted_branch(p, q, label)
            if branch:
                seen.add(branch)
    assert set(TYPO_NOTES) <= seen


def test_certified_dimension():
    from zdmd.constructions import certified_dimension
    r = certified_dimension(5, 11)
    assert r.exact and r.value == 9 and r.method == "certificate+construction"
    r = certified_dimension(7, 11)
    assert (r.lower, r.upper) == (9, 10) and not r.exact
    r = certified_dimension(2, 13)
    assert r.value == 11 and r.method == "tree-formula"
    assert certified_dimension(11, 13) is None


def test_small_landmark_examples():
    assert landmark_labels(3, 5) == ["a_1", "b1_2", "b1_3"]
    assert landmark_labels(5, 11)[-4:] == ["b1_6", "b1_7", "b1_8", "b1_9"]
    g, _ = build_labeled_bs(2, 3)
    from zdmd.graph import is_path_graph
    assert is_path_graph(g) and g.n == 5
    g, _ = build_labeled_bs(5, 11)
    assert (g.n, g.edge_count) == (54, 80)
