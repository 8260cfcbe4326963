from __future__ import annotations

import random

import pytest

from oracles import brute_side_size, random_rooted_binary
from treecentral import (
    CrgSpec,
    canonical_code,
    crg_family,
    distances_from,
    eccentricities,
    enumerate_free_binary,
    make_caterpillar,
    make_crg,
    make_rgood,
    make_two_per_level,
    root_at,
    tree_from_edges,
    validate_binary,
    validate_rooted_binary,
)


class TestRgood:
    @pytest.mark.parametrize("n", list(range(1, 42, 2)))
    def test_valid_rooted_binary(self, n):
        rv = make_rgood(n)
        assert rv.n == n and rv.root == 0
        assert validate_rooted_binary(rv)

    @pytest.mark.parametrize("n", list(range(3, 42, 2)))
    def test_height_bracket(self, n):
        # smallest h fitting n vertices: 2^h + 1 <= n <= 2^(h+1) - 1
        h = make_rgood(n).height
        assert 2**h + 1 <= n <= 2 ** (h + 1) - 1

    def test_single_vertex(self):
        assert make_rgood(1).height == 0

    @pytest.mark.parametrize("n", [9, 15, 21, 33])
    def test_height_not_beaten_by_random_trees(self, n):
        rng = random.Random(n)
        h = make_rgood(n).height
        for _ in range(300):
            t = random_rooted_binary(rng, n)
            assert root_at(t, 0).height >= h

    @pytest.mark.parametrize("n", list(range(3, 64, 2)))
    def test_leaves_on_bottom_two_levels(self, n):
        rv = make_rgood(n)
        h = rv.height
        leaf_levels = {rv.level[v] for v in range(n) if not rv.children[v]}
        assert leaf_levels <= {h - 1, h}

    @pytest.mark.parametrize("n", list(range(5, 64, 2)))
    def test_deep_parents_fill_a_final_segment(self, n):
        rv = make_rgood(n)
        h = rv.height
        above = [v for v in range(n) if rv.level[v] == h - 1]
        deep_parents = sorted({rv.parent[v] for v in range(n) if rv.level[v] == h})
        assert deep_parents == above[len(above) - len(deep_parents):]

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            make_rgood(8)


class TestTwoPerLevel:
    @pytest.mark.parametrize("n", list(range(3, 42, 2)))
    def test_two_vertices_per_level(self, n):
        rv = make_two_per_level(n)
        assert validate_rooted_binary(rv)
        assert rv.height == (n - 1) // 2
        by_level = [0] * (rv.height + 1)
        for v in range(n):
            by_level[rv.level[v]] += 1
        assert by_level == [1] + [2] * rv.height

    def test_single_vertex(self):
        assert make_two_per_level(1).n == 1


class TestCaterpillar:
    @pytest.mark.parametrize("n", list(range(4, 30, 2)))
    def test_shape(self, n):
        fam = make_caterpillar(n)
        t = fam.tree
        assert validate_binary(t)
        spine = sorted(fam.label_map.values())
        assert len(spine) == n // 2 + 1
        # consecutive labels sit on adjacent vertices
        for a in range(1, n // 2 + 1):
            assert t.has_edge(fam.label_map[a], fam.label_map[a + 1])

    @pytest.mark.parametrize("n", list(range(4, 30, 2)))
    def test_diameter(self, n):
        assert max(eccentricities(make_caterpillar(n).tree)) == n // 2

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
    def test_diameter_is_the_maximum_possible(self, n):
        best = max(max(eccentricities(t)) for t in enumerate_free_binary(n))
        assert best == n // 2

    def test_first_label_has_max_eccentricity(self):
        for n in range(4, 20, 2):
            fam = make_caterpillar(n)
            ecc = eccentricities(fam.tree)
            assert ecc[fam.label_map[1]] == max(ecc)

    def test_rejects_tiny_and_odd(self):
        with pytest.raises(ValueError):
            make_caterpillar(2)
        with pytest.raises(ValueError):
            make_caterpillar(7)


class TestCrg:
    @pytest.mark.parametrize("n", list(range(4, 26, 2)))
    def test_family_members_are_binary(self, n):
        fams = crg_family(n)
        assert [f.l for f in fams] == list(range(3, n, 2))
        for fam in fams:
            assert fam.tree.n == n
            assert validate_binary(fam.tree)

    @pytest.mark.parametrize("n", list(range(6, 26, 2)))
    def test_spine_labels(self, n):
        for fam in crg_family(n):
            v = (n - fam.l + 3) // 2
            assert sorted(fam.label_map) == list(range(1, v + 1))
            for a in range(1, v):
                assert fam.tree.has_edge(fam.label_map[a], fam.label_map[a + 1])

    @pytest.mark.parametrize("n", list(range(6, 26, 2)))
    def test_graft_neighbor_is_on_a_heaviest_branch(self, n):
        for fam in crg_family(n):
            t = fam.tree
            v_id = fam.label_map[max(fam.label_map)]
            assert fam.v_prime in t.adj[v_id]
            assert fam.v_prime in fam.rgood_ids
            own = brute_side_size(t, fam.v_prime, v_id)
            for w in t.adj[v_id]:
                if w in fam.rgood_ids and w != fam.v_prime:
                    other = brute_side_size(t, w, v_id)
                    assert own >= other
                    if own == other:
                        # ties resolve to the first-built child, which has
                        # the smaller id
                        assert fam.v_prime < w

    @pytest.mark.parametrize("n", list(range(6, 26, 2)))
    def test_rgood_ids_cover_an_rgood_subtree(self, n):
        for fam in crg_family(n):
            assert len(fam.rgood_ids) == fam.l
            v_id = fam.label_map[max(fam.label_map)]
            assert v_id in fam.rgood_ids
            inner = [i for i in fam.rgood_ids if i != v_id]
            # the non-glue part is exactly the vertices beyond the
            # caterpillar block
            assert sorted(inner) == list(range(n - fam.l + 1, n))

    @pytest.mark.parametrize("n", list(range(8, 26, 2)))
    def test_removing_the_graft_leaves_a_caterpillar(self, n):
        for fam in crg_family(n):
            if fam.l > n - 3:
                continue
            keep = sorted(set(range(n)) - set(fam.rgood_ids) | {fam.label_map[max(fam.label_map)]})
            relabel = {old: i for i, old in enumerate(keep)}
            edges = [
                (relabel[u], relabel[w])
                for u, w in fam.tree.edges()
                if u in relabel and w in relabel
            ]
            induced = tree_from_edges(len(keep), edges)
            expect = make_caterpillar(n - fam.l + 1).tree
            assert canonical_code(induced) == canonical_code(expect)

    def test_largest_graft_leaves_a_bare_edge(self):
        fam = make_crg(CrgSpec(12, 11))
        assert sorted(fam.label_map) == [1, 2]
        assert fam.tree.has_edge(fam.label_map[1], fam.label_map[2])
        assert fam.tree.degree(fam.label_map[1]) == 1

    def test_hand_built_18_11(self):
        # built straight from the definition: caterpillar on 8 vertices
        # (spine 0..4, pendants 5,6,7), then a 11-vertex rgood part grown
        # off spine end 4
        edges = [
            (0, 1), (1, 2), (2, 3), (3, 4),
            (1, 5), (2, 6), (3, 7),
            (4, 8), (4, 9),
            (8, 10), (8, 11), (9, 12), (9, 13),
            (12, 14), (12, 15), (13, 16), (13, 17),
        ]
        by_hand = tree_from_edges(18, edges)
        fam = make_crg(CrgSpec(18, 11))
        assert canonical_code(fam.tree) == canonical_code(by_hand)

    def test_v_prime_on_deeper_side_when_unbalanced(self):
        # in an 11-vertex rgood part one root branch holds 7 vertices, the
        # other 3, so the graft neighbor must be the big one
        fam = make_crg(CrgSpec(18, 11))
        v_id = fam.label_map[5]
        sizes = sorted(brute_side_size(fam.tree, w, v_id) for w in fam.tree.adj[v_id] if w in fam.rgood_ids)
        assert sizes == [3, 7]
        assert brute_side_size(fam.tree, fam.v_prime, v_id) == 7

    def test_smallest_graft_is_a_caterpillar(self):
        for n in range(6, 20, 2):
            fam = make_crg(CrgSpec(n, 3))
            assert canonical_code(fam.tree) == canonical_code(make_caterpillar(n).tree)

    @pytest.mark.parametrize(
        "n,l",
        [(7, 3), (12, 2), (12, 4), (12, 1), (12, 13), (2, 3), (12, -3)],
    )
    def test_spec_validation(self, n, l):
        with pytest.raises(ValueError):
            CrgSpec(n, l)

    def test_distinct_codes_within_family_when_large(self):
        # small n collapse to one isomorphism class; by n = 14 the family
        # starts to spread out
        codes = {canonical_code(f.tree) for f in crg_family(14)}
        assert len(codes) >= 2
