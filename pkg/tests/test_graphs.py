"""Graph core: construction, neighbourhood algebra, views, merging."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avoidablepaths import Graph, bits, make_complete, make_cycle, make_path, make_star
from conftest import graphs


class TestBuild:
    def test_path_graph(self):
        g = Graph.build(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.active_count() == 3

    def test_cycle(self):
        g = Graph.build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_count() == 4
        assert all(g.degree(v) == 2 for v in g.vertices())

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.build(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph.build(2, [(0, 2)])
        with pytest.raises(ValueError):
            Graph.build(2, [(-1, 0)])

    def test_duplicates_collapse(self):
        g = Graph.build(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_empty_graph_is_legal(self):
        g = Graph.build(0)
        assert g.vertices() == []
        assert g.edges() == []
        assert g.active_count() == 0


class TestNeighborhoods:
    def test_closed_neighborhood_on_cycle(self):
        assert make_cycle(5).closed_neighborhood([0]) == {4, 0, 1}

    def test_closed_neighborhood_complete(self):
        assert make_complete(4).closed_neighborhood([2]) == {0, 1, 2, 3}

    def test_closed_neighborhood_both_ends(self):
        assert make_path(3).closed_neighborhood([0, 2]) == {0, 1, 2}

    def test_inactive_member_rejected(self):
        g = make_cycle(5).delete_vertices([0])
        with pytest.raises(ValueError):
            g.closed_neighborhood([0])

    def test_dominates_star(self):
        g = make_star(4)
        assert g.dominates([0], [0, 1, 2, 3])

    def test_dominates_path_ends(self):
        assert not make_path(4).dominates([0], [3])

    def test_dominates_reflexive(self):
        g = make_cycle(6)
        assert g.dominates([1, 4], [1, 4])


class TestDeletionViews:
    def test_cycle_minus_neighborhood(self):
        view = make_cycle(5).delete_closed_neighborhood([0])
        assert view.vertices() == [2, 3]
        assert view.edges() == [(2, 3)]

    def test_complete_minus_anything_is_empty(self):
        for n in (2, 4, 6):
            view = make_complete(n).delete_closed_neighborhood([1])
            assert view.active_count() == 0

    def test_counterexample_minus_apex(self):
        # cycle 0..4 plus apex 5 on {0, 1}; dropping N[5] leaves the path 2-3-4
        from avoidablepaths import counterexample_graph

        view = counterexample_graph(3).delete_closed_neighborhood([5])
        assert view.vertices() == [2, 3, 4]
        assert view.edges() == [(2, 3), (3, 4)]
        assert view.is_induced_path([2, 3, 4])

    def test_view_keeps_ids(self):
        g = make_cycle(6)
        view = g.delete_vertices([0])
        assert view.neighbors(5) == [4]
        assert view.neighbors(1) == [2]

    def test_no_active_vertex_touches_deleted_set(self):
        g = make_cycle(7)
        view = g.delete_closed_neighborhood([2, 3])
        for v in view.vertices():
            assert not (g.adj_mask(v) >> 2) & 1
            assert not (g.adj_mask(v) >> 3) & 1


class TestMerge:
    def test_triangle_merge(self):
        g = make_complete(3).merge_vertices(0, 1)
        assert g.vertices() == [0, 2]
        assert g.edges() == [(0, 2)]

    def test_path_merge(self):
        g = make_path(3).merge_vertices(0, 1)
        assert g.edges() == [(0, 2)]

    def test_cycle_merge_gives_smaller_cycle(self):
        g = make_cycle(5).merge_vertices(0, 1)
        assert g.vertices() == [0, 2, 3, 4]
        assert g.is_induced_cycle([0, 2, 3, 4])

    def test_nonadjacent_merge_rejected(self):
        with pytest.raises(ValueError):
            make_cycle(5).merge_vertices(0, 2)

    def test_inactive_merge_rejected(self):
        g = make_cycle(5).delete_vertices([1])
        with pytest.raises(ValueError):
            g.merge_vertices(0, 1)

    def test_merge_keeps_other_adjacencies(self):
        g = make_cycle(6)
        merged = g.merge_vertices(2, 3)
        for u, v in ((0, 1), (4, 5), (0, 5)):
            assert merged.has_edge(u, v)
        assert not merged.has_edge(0, 4)


class TestInducedPathPredicate:
    def test_cycle_arc(self):
        assert make_cycle(5).is_induced_path([0, 1, 2])

    def test_whole_cycle_is_not_a_path(self):
        assert not make_cycle(5).is_induced_path([0, 1, 2, 3, 4])

    def test_triangle_has_no_p3(self):
        assert not make_complete(3).is_induced_path([0, 1, 2])

    def test_singleton_and_empty(self):
        g = make_path(2)
        assert g.is_induced_path([0])
        assert not g.is_induced_path([])

    def test_repeats_and_inactive(self):
        g = make_path(4)
        assert not g.is_induced_path([0, 1, 0])
        assert not g.delete_vertices([1]).is_induced_path([0, 1])


class TestConnectingPath:
    def test_around_cycle(self):
        assert make_cycle(5).connecting_path(0, 2) == [0, 1, 2]

    def test_blocked(self):
        assert make_path(4).connecting_path(0, 3, [1]) is None

    def test_detour(self):
        assert make_cycle(6).connecting_path(0, 3, [1, 2]) == [0, 5, 4, 3]

    def test_trivial(self):
        assert make_cycle(4).connecting_path(1, 1) == [1]

    def test_forbidden_endpoint_rejected(self):
        with pytest.raises(ValueError):
            make_cycle(4).connecting_path(0, 2, [0])


# ----------------------------------------------------------------------
# properties


@given(graphs(), st.data())
@settings(max_examples=120, deadline=None)
def test_merge_invariants(g, data):
    edges = g.edges()
    if not edges:
        return
    u, v = data.draw(st.sampled_from(edges))
    merged = g.merge_vertices(u, v)
    merged.check_invariants()
    assert merged.active_count() == g.active_count() - 1
    assert not merged.is_active(v)
    expected = (g.closed_neighborhood([u, v]) - {u, v}) | set()
    assert set(merged.neighbors(u)) == expected - {u, v}
    # adjacency between untouched vertices is exactly as before
    for a in merged.vertices():
        for b in merged.vertices():
            if u in (a, b):
                continue
            assert merged.has_edge(a, b) == g.has_edge(a, b)


@given(graphs(), st.data())
@settings(max_examples=120, deadline=None)
def test_neighborhood_algebra(g, data):
    verts = g.vertices()
    X = data.draw(st.sets(st.sampled_from(verts)) if verts else st.just(set()))
    Y = data.draw(st.sets(st.sampled_from(verts)) if verts else st.just(set()))
    nb = g.closed_neighborhood(X)
    assert X <= nb
    assert g.dominates(X, Y) == (Y <= nb)
    view = g.delete_closed_neighborhood(X)
    assert set(view.vertices()).isdisjoint(nb)
    for v in view.vertices():
        assert not (set(g.neighbors(v)) & X)


@given(graphs(min_n=2), st.data())
@settings(max_examples=100, deadline=None)
def test_connecting_path_is_induced_in_view(g, data):
    verts = g.vertices()
    x = data.draw(st.sampled_from(verts))
    y = data.draw(st.sampled_from(verts))
    pool = [v for v in verts if v not in (x, y)]
    forbidden = data.draw(st.sets(st.sampled_from(pool))) if pool else set()
    path = g.connecting_path(x, y, forbidden)
    if path is not None:
        view = g.delete_vertices(forbidden)
        assert view.is_induced_path(path)
        assert path[0] == x and path[-1] == y


@given(graphs(min_n=1), st.data())
@settings(max_examples=100, deadline=None)
def test_id_stability_under_views_and_merges(g, data):
    """Surviving ids keep their original adjacency toward other survivors
    that were never merge participants."""
    current = g
    participants = set()
    for _ in range(data.draw(st.integers(0, 3))):
        choice = data.draw(st.integers(0, 1))
        if choice == 0 and current.active_count() > 1:
            drop = data.draw(st.sampled_from(current.vertices()))
            current = current.delete_vertices([drop])
        else:
            edges = current.edges()
            if not edges:
                continue
            u, v = data.draw(st.sampled_from(edges))
            current = current.merge_vertices(u, v)
            participants.add(u)
    for a in current.vertices():
        for b in current.vertices():
            if a >= b or a in participants or b in participants:
                continue
            assert current.has_edge(a, b) == g.has_edge(a, b)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_equality_and_hash_follow_value(g):
    twin = Graph(g.n, g._adj, g.active_mask)
    assert g == twin and hash(g) == hash(twin)
    assert list(bits(g.active_mask)) == g.vertices()
