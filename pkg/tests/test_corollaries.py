"""Contraction, avoidable paths outside a set, non-adjacent pairs, and the
disjoint-pair counterexample family."""

from __future__ import annotations

import pytest

from avoidablepaths import (
    Graph,
    all_labeled_graphs,
    check_avoidable,
    contract_connected_set,
    counterexample_graph,
    enumerate_avoidable_paths,
    enumerate_induced_paths,
    find_avoidable_outside,
    find_avoidable_path_refined,
    find_two_nonadjacent_avoidable,
    make_complete,
    make_cycle,
    mask_of,
    verify_counterexample,
)
from oracles import brute_enumerate_induced_paths


def _nonadjacent(G, p, q):
    if mask_of(p) & mask_of(q):
        return False
    return all(not G.has_edge(a, b) for a in p for b in q)


class TestContraction:
    def test_singleton_is_identity(self):
        g = make_cycle(5)
        contracted, survivor = contract_connected_set(g, [3])
        assert contracted == g and survivor == 3

    def test_triangle_in_k3(self):
        contracted, survivor = contract_connected_set(make_complete(3), [0, 1, 2])
        assert survivor == 0
        assert contracted.vertices() == [0]
        assert contracted.edges() == []

    def test_path_inside_c5(self):
        contracted, survivor = contract_connected_set(make_cycle(5), [0, 1, 2])
        assert survivor == 0
        assert contracted.is_induced_cycle([0, 3, 4])

    def test_disconnected_set_rejected(self):
        with pytest.raises(ValueError):
            contract_connected_set(make_cycle(5), [0, 2])

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            contract_connected_set(make_cycle(5), [])

    def test_contracted_neighborhood_is_original_union(self):
        g = make_cycle(8)
        contracted, survivor = contract_connected_set(g, [2, 3, 4])
        assert set(contracted.neighbors(survivor)) == g.open_neighborhood([2, 3, 4])


class TestAvoidableOutside:
    def test_singleton_reduces_to_refined(self):
        g = make_cycle(7)
        direct = find_avoidable_path_refined(g, 2, 3)
        viaset = find_avoidable_outside(g, [3], 2)
        assert direct.path == viaset.path

    def test_c8_pair_outside_an_edge(self):
        g = make_cycle(8)
        result = find_avoidable_outside(g, [0, 1], 2)
        assert result.path is not None
        assert set(result.path) <= {3, 4, 5, 6}
        assert check_avoidable(g, result.path).avoidable

    def test_full_coverage_is_free(self):
        g = make_complete(5)
        result = find_avoidable_outside(g, [2], 3)
        assert result.is_pk_free

    @pytest.mark.slow
    def test_exhaustive_small(self):
        """Every connected set in every labeled graph on up to five
        vertices: results avoid N[X] and verify on the original graph."""
        from itertools import combinations

        for n in range(1, 6):
            for g in all_labeled_graphs(n):
                verts = g.vertices()
                for size in range(1, n + 1):
                    for X in combinations(verts, size):
                        try:
                            contract_connected_set(g, X)
                        except ValueError:
                            continue
                        nbhd = mask_of(g.closed_neighborhood(X))
                        for k in (1, 2, 3):
                            result = find_avoidable_outside(g, X, k)
                            view = g.delete_closed_neighborhood(X)
                            if result.path is None:
                                assert not list(enumerate_induced_paths(view, k))
                            else:
                                assert not (mask_of(result.path) & nbhd)
                                assert check_avoidable(g, result.path).avoidable


class TestTwoNonadjacent:
    def test_two_components(self):
        g = Graph.build(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        pair = find_two_nonadjacent_avoidable(g, 3)
        assert pair is not None
        assert sorted(pair) == [(0, 1, 2), (3, 4, 5)]

    def test_complete_graph_has_none(self):
        for k in (1, 2, 3):
            assert find_two_nonadjacent_avoidable(make_complete(5), k) is None

    def test_even_cycles(self):
        for k in (1, 2, 3):
            g = make_cycle(2 * k + 2)
            pair = find_two_nonadjacent_avoidable(g, k)
            assert pair is not None
            p, q = pair
            assert _nonadjacent(g, p, q)
            assert check_avoidable(g, p).avoidable
            assert check_avoidable(g, q).avoidable

    def test_matches_brute_force_n4(self):
        for n in range(1, 5):
            for g in all_labeled_graphs(n):
                for k in (1, 2, 3):
                    paths = brute_enumerate_induced_paths(g, k)
                    exists = any(
                        _nonadjacent(g, p, q)
                        for i, p in enumerate(paths)
                        for q in paths[i + 1 :]
                    )
                    pair = find_two_nonadjacent_avoidable(g, k)
                    assert (pair is not None) == exists
                    if pair:
                        p, q = pair
                        assert _nonadjacent(g, p, q)
                        assert check_avoidable(g, p).avoidable
                        assert check_avoidable(g, q).avoidable

    def test_matches_brute_force_n6_sampled(self):
        """Seeded sample of six-vertex edge masks (the exhaustive n <= 5
        version is acceptance criterion 6)."""
        from avoidablepaths import SplitMix64

        rng = SplitMix64(2024)
        for _ in range(400):
            g = Graph.from_edge_mask(6, rng.randrange(1 << 15))
            for k in (2, 3):
                paths = brute_enumerate_induced_paths(g, k)
                exists = any(
                    _nonadjacent(g, p, q)
                    for i, p in enumerate(paths)
                    for q in paths[i + 1 :]
                )
                pair = find_two_nonadjacent_avoidable(g, k)
                assert (pair is not None) == exists
                if pair:
                    p, q = pair
                    assert _nonadjacent(g, p, q)
                    assert check_avoidable(g, p).avoidable
                    assert check_avoidable(g, q).avoidable


class TestCounterexampleFamily:
    def test_k3_structure(self):
        from avoidablepaths import enumerate_induced_cycles

        g = counterexample_graph(3)
        assert g.n == 6
        assert g.edge_count() == 7
        triangles = [c for c in enumerate_induced_cycles(g) if len(c) == 3]
        assert len(triangles) == 1

    def test_k4_structure(self):
        g = counterexample_graph(4)
        assert g.n == 8
        assert g.edge_count() == 9

    def test_small_k_rejected(self):
        for k in (0, 1, 2):
            with pytest.raises(ValueError):
                counterexample_graph(k)

    def test_k3_has_two_disjoint_p3(self):
        report = verify_counterexample(3)
        assert report.has_two_disjoint_pk
        assert not report.has_two_disjoint_avoidable
        p, q = report.pk_pair
        assert not (mask_of(p) & mask_of(q))

    def test_disjoint_pairs_partition_everything(self):
        for k in (3, 4, 5):
            g = counterexample_graph(k)
            paths = list(enumerate_induced_paths(g, k))
            masks = [mask_of(p) for p in paths]
            full = g.active_mask
            for i in range(len(paths)):
                for j in range(i + 1, len(paths)):
                    if masks[i] & masks[j] == 0:
                        assert masks[i] | masks[j] == full

    def test_paired_avoidable_paths_hit_triangle_twice(self):
        """An avoidable path whose complement is also an induced path must
        take two of the three triangle vertices; the complement then takes
        one and keeps a failing extension, which is why the two flags of
        the report can never both be true.  (Avoidable paths without a
        disjoint partner may miss the triangle entirely.)"""
        from avoidablepaths import subset_has_induced_path

        for k in (3, 4, 5):
            g = counterexample_graph(k)
            triangle = mask_of([0, 1, g.n - 1])
            full = g.active_mask
            paired = 0
            for p in enumerate_avoidable_paths(g, k):
                complement = Graph(g.n, g._adj, full & ~mask_of(p))
                if subset_has_induced_path(complement, k):
                    paired += 1
                    assert (mask_of(p) & triangle).bit_count() >= 2
            assert paired > 0
