from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import labeled_trees, seeded_free_binary, seeded_rooted_binary
from oracles import brute_center, brute_distance_matrix, relabeled
from treecentral import (
    EdgeListError,
    canonical_code,
    distances_from,
    eccentricities,
    format_edge_list,
    make_caterpillar,
    parse_edge_list,
    root_at,
    rooted_code,
    set_distance,
    strip_center,
    tree_from_edges,
    validate_binary,
    validate_rooted_binary,
)


def path(n: int):
    return tree_from_edges(n, [(i, i + 1) for i in range(n - 1)])


class TestConstruction:
    def test_single_vertex(self):
        t = tree_from_edges(1, [])
        assert t.n == 1 and t.adj == ((),)

    def test_adjacency_sorted(self):
        t = tree_from_edges(4, [(3, 1), (1, 0), (1, 2)])
        assert t.adj[1] == (0, 2, 3)
        assert t.degree(1) == 3 and t.degree(0) == 1

    def test_edges_round_trip(self):
        t = tree_from_edges(5, [(0, 4), (4, 2), (2, 1), (2, 3)])
        assert tree_from_edges(5, list(t.edges())).adj == t.adj

    @pytest.mark.parametrize(
        "n,edges,fragment",
        [
            (3, [(0, 1)], "needs 2 edges"),
            (3, [(0, 1), (0, 1), (1, 2)], "duplicate"),
            (3, [(0, 1), (1, 1)], "self-loop"),
            (3, [(0, 1), (0, 1)], "duplicate"),
            (3, [(0, 1), (1, 3)], "out of range"),
            (4, [(0, 1), (1, 0), (2, 3)], "duplicate"),
        ],
    )
    def test_rejects_bad_edge_lists(self, n, edges, fragment):
        with pytest.raises(ValueError, match=fragment):
            tree_from_edges(n, edges)

    def test_rejects_disconnected(self):
        # right edge count but a cycle plus an unreachable vertex
        with pytest.raises(ValueError, match="disconnected"):
            tree_from_edges(4, [(0, 1), (1, 2), (0, 2)])


class TestBinaryChecks:
    def test_edge_is_binary(self):
        assert validate_binary(path(2))

    def test_longer_path_is_not(self):
        check = validate_binary(path(4))
        assert not check
        assert check.degree == 2

    def test_star_with_three_leaves(self):
        assert validate_binary(make_caterpillar(4).tree)

    def test_single_vertex_free_vs_rooted(self):
        one = tree_from_edges(1, [])
        assert not validate_binary(one)
        assert validate_rooted_binary(root_at(one, 0))

    def test_rooted_path_depends_on_root(self):
        p3 = path(3)
        assert validate_rooted_binary(root_at(p3, 1))
        check = validate_rooted_binary(root_at(p3, 0))
        assert not check and check.vertex == 0

    @given(seeded_free_binary())
    def test_random_binary_trees_pass(self, t):
        assert validate_binary(t)

    @given(seeded_rooted_binary())
    def test_random_rooted_binary_pass(self, t):
        assert validate_rooted_binary(root_at(t, 0))


class TestDistances:
    @given(labeled_trees(max_n=16))
    def test_matches_matrix_oracle(self, t):
        dist = brute_distance_matrix(t)
        for s in range(t.n):
            assert list(distances_from(t, s)) == dist[s]

    @given(labeled_trees(max_n=16))
    def test_eccentricities(self, t):
        dist = brute_distance_matrix(t)
        assert list(eccentricities(t)) == [max(row) for row in dist]

    def test_caterpillar_diameter(self):
        for n in range(4, 21, 2):
            assert max(eccentricities(make_caterpillar(n).tree)) == n // 2

    @given(labeled_trees(max_n=14), st.data())
    def test_set_distance_is_min_over_pairs(self, t, data):
        k = data.draw(st.integers(1, min(3, t.n)))
        a = tuple(sorted(data.draw(st.sets(st.integers(0, t.n - 1), min_size=k, max_size=k))))
        b = tuple(sorted(data.draw(st.sets(st.integers(0, t.n - 1), min_size=k, max_size=k))))
        dist = brute_distance_matrix(t)
        assert set_distance(t, a, b) == min(dist[u][v] for u in a for v in b)

    def test_set_distance_rejects_empty(self):
        with pytest.raises(ValueError):
            set_distance(path(3), (), (0,))


class TestCenter:
    @given(labeled_trees(max_n=20))
    def test_stripping_equals_eccentricity_argmin(self, t):
        assert strip_center(t) == brute_center(t)

    def test_tiny(self):
        assert strip_center(tree_from_edges(1, [])) == (0,)
        assert strip_center(path(2)) == (0, 1)
        assert strip_center(path(3)) == (1,)


class TestCanonicalCode:
    @settings(max_examples=60)
    @given(labeled_trees(max_n=14), st.randoms(use_true_random=False))
    def test_relabeling_invariant(self, t, rnd):
        perm = list(range(t.n))
        rnd.shuffle(perm)
        assert canonical_code(relabeled(t, perm)) == canonical_code(t)

    def test_distinguishes_shapes(self):
        star = make_caterpillar(4).tree
        assert canonical_code(star) != canonical_code(path(4))

    def test_rooted_code_sees_the_root(self):
        p3 = path(3)
        assert rooted_code(root_at(p3, 0)) != rooted_code(root_at(p3, 1))
        assert rooted_code(root_at(p3, 0)) == rooted_code(root_at(p3, 2))


class TestEdgeListFormat:
    def test_round_trip(self):
        t = make_caterpillar(10).tree
        assert parse_edge_list(format_edge_list(t)).adj == t.adj

    def test_format_shape(self):
        text = format_edge_list(path(3))
        assert text == "3\n0 1\n1 2\n"

    @given(labeled_trees(max_n=12))
    def test_round_trip_random(self, t):
        assert parse_edge_list(format_edge_list(t)).adj == t.adj

    @pytest.mark.parametrize(
        "text,line",
        [
            ("", 1),
            ("x\n", 1),
            ("3\n0 1\n1 two\n", 3),
            ("3\n0 1\n", 2),
            ("3\n0 1\n1 2\n2 0\n", 4),
            ("2\n0 1 2\n", 2),
            ("3\n0 3\n1 2\n", 2),
        ],
    )
    def test_error_lines(self, text, line):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
