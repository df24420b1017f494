import pytest
from hypothesis import given, strategies as st

from chromablend.cluster import ColourLabel, normalize, parse_cluster
from chromablend.embodiment import (
    build_max_embodiment,
    build_min_chromatic_embodiment,
    build_min_proper_embodiment,
    eps_equality_holds,
    epsilon_minus,
    epsilon_plus,
    epsilon_plus_binomial,
    epsilon_plus_pairwise,
)
from chromablend.errors import CapExceededError, ValidationError
from chromablend.oracle import chromatic_number, is_proper

base_clusters = st.lists(st.integers(1, 4), min_size=2, max_size=5).map(
    lambda ws: parse_cluster(",".join(map(str, ws)))
)


def brute_edge_count(cluster):
    return build_max_embodiment(cluster).m


class TestEpsilonPlus:
    @pytest.mark.parametrize(
        "literal,expected",
        [("1,1", 1), ("2,3", 6), ("2,3,4", 26), ("1,1,1,1", 6)],
    )
    def test_known_values(self, literal, expected):
        assert epsilon_plus(parse_cluster(literal)) == expected

    def test_derived_value_against_built_graph(self):
        cluster = parse_cluster("2,3,4")
        assert brute_edge_count(cluster) == 26

    def test_single_class_is_zero(self):
        assert epsilon_plus(normalize([(ColourLabel((1,)), 7)])) == 0

    @given(base_clusters)
    def test_formulas_agree_and_match_graph(self, cluster):
        assert (
            epsilon_plus_binomial(cluster)
            == epsilon_plus_pairwise(cluster)
            == brute_edge_count(cluster)
        )

    def test_works_on_blended_clusters(self):
        blended = normalize([(ColourLabel((1, 2)), 3), (ColourLabel((1, 3)), 5)])
        assert epsilon_plus(blended) == 15


class TestEpsilonMinus:
    @pytest.mark.parametrize(
        "literal,expected",
        [("1,1,1", 3), ("3,1", 3), ("2,2,2", 6), ("2,1", 2)],
    )
    def test_known_values(self, literal, expected):
        assert epsilon_minus(parse_cluster(literal)) == expected

    def test_matches_type_one_build(self):
        cluster = parse_cluster("2,2,2")
        assert build_min_chromatic_embodiment(cluster).m == 6

    def test_rejects_single_class(self):
        with pytest.raises(ValidationError):
            epsilon_minus(parse_cluster("5"))

    def test_rejects_blended_labels(self):
        blended = normalize([(ColourLabel((1, 2)), 1), (ColourLabel((3,)), 1)])
        with pytest.raises(ValidationError):
            epsilon_minus(blended)


class TestBuildMax:
    def test_complete_bipartite(self):
        g = build_max_embodiment(parse_cluster("2,3"))
        assert (g.n, g.m) == (5, 6)
        deg = sorted(g.degrees())
        assert deg == [2, 2, 2, 3, 3]

    def test_all_ones_gives_complete_graph(self):
        g = build_max_embodiment(parse_cluster("1,1,1"))
        assert (g.n, g.m) == (3, 3)

    def test_single_class_is_null_graph(self):
        g = build_max_embodiment(normalize([(ColourLabel((1, 2)), 4)]))
        assert (g.n, g.m) == (4, 0)
        assert all(lab == ColourLabel((1, 2)) for lab in g.labels)

    def test_labels_and_properness(self):
        g = build_max_embodiment(parse_cluster("2,3"))
        assert is_proper(g)
        assert g.labels[0] == ColourLabel((1,))
        assert g.labels[-1] == ColourLabel((2,))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            build_max_embodiment(parse_cluster("2000,2000"))
        g = build_max_embodiment(parse_cluster("3,3"), cap=6)
        assert g.n == 6
        with pytest.raises(CapExceededError):
            build_max_embodiment(parse_cluster("3,4"), cap=6)


class TestBuildMinChromatic:
    def test_two_one_is_a_path(self):
        g = build_min_chromatic_embodiment(parse_cluster("2,1"))
        assert (g.n, g.m) == (3, 2)
        assert sorted(g.degrees()) == [1, 1, 2]
        assert is_proper(g)

    def test_all_ones_is_complete(self):
        g = build_min_chromatic_embodiment(parse_cluster("1,1,1"))
        assert (g.n, g.m) == (3, 3)

    def test_representatives_form_clique(self):
        cluster = parse_cluster("2,3,2,4")
        g = build_min_chromatic_embodiment(cluster)
        reps = [0, 2, 5, 7]
        adjacency = g.adjacency_sets()
        for i, u in enumerate(reps):
            for v in reps[i + 1 :]:
                assert v in adjacency[u]

    def test_uniform_two(self):
        g = build_min_chromatic_embodiment(parse_cluster("2,2,2"))
        assert (g.n, g.m) == (6, 6)
        assert g.is_connected()
        assert is_proper(g)
        assert chromatic_number(g) == 3

    def test_edge_count_matches_formula(self):
        for literal in ("1,2", "3,3", "2,1,3", "1,1,2,2", "3,2,1,2,3"):
            cluster = parse_cluster(literal)
            g = build_min_chromatic_embodiment(cluster)
            assert g.m == epsilon_minus(cluster)
            assert g.is_connected()
            assert is_proper(g)

    def test_rejects_single_class(self):
        with pytest.raises(ValidationError):
            build_min_chromatic_embodiment(parse_cluster("4"))


class TestBuildMinProper:
    def test_two_singletons_single_edge(self):
        g = build_min_proper_embodiment(parse_cluster("1,1"))
        assert (g.n, g.m) == (2, 1)

    def test_two_two_tree(self):
        g = build_min_proper_embodiment(parse_cluster("2,2"))
        assert (g.n, g.m) == (4, 3)
        assert g.is_connected()
        assert is_proper(g)

    def test_three_one_one(self):
        g = build_min_proper_embodiment(parse_cluster("3,1,1"))
        assert (g.n, g.m) == (5, 4)
        assert g.is_connected()
        assert is_proper(g)

    @given(base_clusters)
    def test_always_a_proper_tree(self, cluster):
        g = build_min_proper_embodiment(cluster)
        assert g.m == cluster.total_weight - 1
        assert g.is_connected()
        assert is_proper(g)


class TestEpsEquality:
    def test_all_ones_equal(self):
        assert eps_equality_holds(parse_cluster("1,1,1,1"))

    def test_two_class_boundary_also_equal(self):
        # With two classes and weights (r, 1) both counts equal r, so the
        # all-ones equivalence genuinely has exceptions at l = 2.
        assert eps_equality_holds(parse_cluster("2,1"))
        assert not eps_equality_holds(parse_cluster("2,2"))

    def test_unequal(self):
        cluster = parse_cluster("2,2,3")
        assert epsilon_minus(cluster) == 7
        assert epsilon_plus(cluster) == 16
        assert not eps_equality_holds(cluster)

    def test_three_or_more_classes_iff_all_ones(self):
        for literal in ("1,1,1", "1,1,1,1,1"):
            assert eps_equality_holds(parse_cluster(literal))
        for literal in ("2,1,1", "1,2,1", "1,1,3", "2,2,2"):
            assert not eps_equality_holds(parse_cluster(literal))


def test_deleting_any_complete_graph_edge_drops_chi():
    from chromablend.graph import ColouredGraph

    g = build_min_chromatic_embodiment(parse_cluster("1,1,1,1"))
    for dropped in g.edges:
        pruned = ColouredGraph(g.n, tuple(e for e in g.edges if e != dropped))
        assert chromatic_number(pruned) == 3
