import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxicity.boxes import box_edges, verify
from boxicity.construction import (
    ConstructOptions,
    augmented_graph,
    class_realizations,
    construct_box_representation,
    pipeline_check,
)
from boxicity.graphs import (
    Graph,
    cocktail_party,
    color_classes,
    complete,
    cycle,
    greedy_color,
    max_degree,
    path,
    square,
)
from boxicity.intervals import interval_edges, verify_interval_representation

from strategies import bounded_degree_graphs, graphs


class TestAugmentedGraph:
    def test_path3_class_a(self):
        g = augmented_graph(path(3), {0})
        assert set(g.edge_set) == {(0, 1), (1, 2)}

    def test_edgeless_clique_on_rest(self):
        g = augmented_graph(Graph(3), {0})
        assert set(g.edge_set) == {(1, 2)}

    def test_empty_class_gives_complete(self):
        assert augmented_graph(path(3), set()) == complete(3)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            augmented_graph(path(3), {5})

    @given(graphs(max_n=10), st.data())
    def test_edges_at_class_untouched(self, g, data):
        if g.n == 0:
            vi = set()
        else:
            vi = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
        a = augmented_graph(g, vi)
        assert g.edge_set <= a.edge_set
        for u in vi:
            assert a.adj[u] == g.adj[u]
        outside = set(range(g.n)) - vi
        for u in outside:
            assert a.adj[u] >= (frozenset(outside) - {u})


class TestClassRealizations:
    def test_path3_singleton_class(self):
        r0, r1 = class_realizations(path(3), {0})
        expected = [(1, 1), (0, 1), (0, 0)]
        assert r0.pairs() == expected
        assert r1.pairs() == expected
        assert interval_edges(r0) == {(0, 1), (1, 2)}

    def test_independent_class_of_edgeless_pair(self):
        r0, r1 = class_realizations(Graph(2), {0, 1})
        assert r0.pairs() == [(1, 1), (2, 2)]
        assert r1.pairs() == [(2, 2), (1, 1)]
        assert interval_edges(r0) & interval_edges(r1) == set()

    def test_c4_singleton_class(self):
        g = cycle(4)  # 0-1-2-3-0
        r0, _ = class_realizations(g, {0})
        assert r0.pairs() == [(1, 1), (0, 1), (0, 0), (0, 1)]
        assert interval_edges(r0) == {(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)}
        assert interval_edges(r0) == set(augmented_graph(g, {0}).edge_set)

    def test_rejects_dependent_class(self):
        with pytest.raises(ValueError, match="not independent"):
            class_realizations(path(3), {0, 1})

    def test_rejects_two_neighbors_in_class(self):
        # star center 0 adjacent to 1 and 2; {1, 2} is independent but 0
        # sees both
        g = Graph(3, [(0, 1), (0, 2)])
        with pytest.raises(ValueError, match="two neighbors"):
            class_realizations(g, {1, 2})

    def test_error_names_offenders(self):
        g = Graph(3, [(0, 1), (0, 2)])
        with pytest.raises(ValueError, match=r"vertex 0 has two neighbors"):
            class_realizations(g, {1, 2})

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError, match="permutation"):
            class_realizations(path(3), {0}, order=[1])

    def test_pair_realizes_augmented_graph(self):
        g = cycle(6)
        vi = color_classes(greedy_color(square(g)))[0]
        r0, r1 = class_realizations(g, vi)
        expected = set(augmented_graph(g, vi).edge_set)
        assert interval_edges(r0) & interval_edges(r1) == expected

    @given(bounded_degree_graphs(max_n=30))
    def test_every_class_verifies(self, g):
        for vi in color_classes(greedy_color(square(g))):
            r0, r1 = class_realizations(g, vi)
            gi = augmented_graph(g, vi)
            ok, _ = verify_interval_representation(gi, [r0, r1])
            assert ok

    @given(bounded_degree_graphs(max_n=20), st.randoms(use_true_random=False))
    def test_any_layout_order_works(self, g, rnd):
        # the class layout is symmetric: every labeling must verify
        for vi in color_classes(greedy_color(square(g))):
            order = sorted(vi)
            rnd.shuffle(order)
            r0, r1 = class_realizations(g, vi, order=order)
            gi = augmented_graph(g, vi)
            assert verify_interval_representation(gi, [r0, r1])[0]

    @given(bounded_degree_graphs(max_n=25))
    def test_class_vertices_pairwise_disjoint_points(self, g):
        # distinct class vertices never overlap, in either realization
        for vi in color_classes(greedy_color(square(g))):
            r0, r1 = class_realizations(g, vi)
            members = sorted(vi)
            for i, u in enumerate(members):
                for v in members[i + 1 :]:
                    for r in (r0, r1):
                        assert (u, v) not in interval_edges(r) or u == v

    @given(bounded_degree_graphs(max_n=25))
    def test_one_sided_separation(self, g):
        # non-edge between class vertex u and outsider w: some realization
        # puts their intervals apart
        for vi in color_classes(greedy_color(square(g))):
            r0, r1 = class_realizations(g, vi)
            for u in sorted(vi):
                for w in range(g.n):
                    if w in vi or g.has_edge(u, w):
                        continue
                    separated = any(
                        max(r.los[u], r.los[w]) > min(r.his[u], r.his[w])
                        for r in (r0, r1)
                    )
                    assert separated


class TestConstruct:
    def test_k5_prunes_to_zero(self):
        b, trace = construct_box_representation(complete(5))
        assert b.d == 0
        assert verify(complete(5), b).ok
        assert trace.k == 5

    def test_p3_dimensions(self):
        g = path(3)
        b, trace = construct_box_representation(g)
        assert trace.k == 3  # square of P_3 is a triangle
        assert verify(g, b).ok
        assert b.d <= 3
        raw, _ = construct_box_representation(g, ConstructOptions(prune=False))
        assert raw.d == 2 * trace.k

    def test_c4_verifies_within_bound(self):
        g = cycle(4)
        b, _ = construct_box_representation(g)
        assert verify(g, b).ok
        assert b.d <= 2 * max_degree(g) ** 2 + 2

    def test_empty_graph(self):
        b, trace = construct_box_representation(Graph(0))
        assert b.d == 0 and b.n == 0
        assert verify(Graph(0), b).ok
        assert pipeline_check(Graph(0), trace)

    def test_single_vertex(self):
        g = Graph(1)
        b, _ = construct_box_representation(g)
        assert b.d == 0
        assert verify(g, b).ok

    def test_trace_modes(self):
        g = cycle(5)
        _, full = construct_box_representation(g, ConstructOptions(trace="full"))
        assert full.augmented is not None and len(full.augmented) == full.k
        _, slim = construct_box_representation(g, ConstructOptions(trace="slim"))
        assert slim.augmented is None
        _, off = construct_box_representation(g, ConstructOptions(trace="off"))
        assert off is None

    def test_rejects_unknown_options(self):
        with pytest.raises(ValueError):
            ConstructOptions(order="degree")
        with pytest.raises(ValueError):
            ConstructOptions(trace="maybe")

    def test_smallest_last_order_also_verifies(self):
        g = cocktail_party(4)
        b, trace = construct_box_representation(
            g, ConstructOptions(order="smallest-last")
        )
        assert verify(g, b).ok
        assert pipeline_check(g, trace)

    @given(bounded_degree_graphs(max_n=40))
    def test_soundness_and_bound(self, g):
        b, trace = construct_box_representation(g)
        assert verify(g, b).ok
        d = max_degree(g)
        assert b.d <= 2 * trace.k <= 2 * (d * d + 1)

    @given(graphs(max_n=12))
    def test_dense_graphs_too(self, g):
        b, _ = construct_box_representation(g)
        assert verify(g, b).ok

    @given(bounded_degree_graphs(max_n=25))
    def test_pruning_never_changes_edges(self, g):
        pruned, _ = construct_box_representation(g)
        raw, _ = construct_box_representation(g, ConstructOptions(prune=False))
        assert pruned.d <= raw.d
        assert box_edges(pruned) == box_edges(raw) == set(g.edge_set)


class TestPipelineCheck:
    def test_own_trace_passes(self):
        for g in (path(5), cycle(6), complete(4), cocktail_party(3)):
            _, trace = construct_box_representation(g)
            assert pipeline_check(g, trace)

    def test_detects_deleted_augmented_edge(self):
        g = cycle(5)
        _, trace = construct_box_representation(g)
        victim = trace.augmented[0]
        edges = victim.edges()[:-1]
        tampered = dataclasses.replace(
            trace,
            augmented=(Graph(g.n, edges),) + trace.augmented[1:],
        )
        assert not pipeline_check(g, tampered)

    def test_detects_moved_class_vertex(self):
        g = cycle(5)
        _, trace = construct_box_representation(g)
        classes = list(trace.classes)
        a, b = sorted(classes[0]), sorted(classes[1])
        classes[0] = frozenset(a[1:]) | {b[0]}
        classes[1] = (frozenset(b) - {b[0]}) | {a[0]}
        tampered = dataclasses.replace(trace, classes=tuple(classes))
        assert not pipeline_check(g, tampered)

    def test_detects_tampered_interval(self):
        g = cycle(5)
        _, trace = construct_box_representation(g)
        r0, r1 = trace.pairs[0]
        pairs = r0.pairs()
        pairs[0] = (99, 99)  # strand the class vertex away from its neighbors
        from boxicity.intervals import IntervalRealization

        tampered = dataclasses.replace(
            trace,
            pairs=((IntervalRealization(pairs), r1),) + trace.pairs[1:],
        )
        assert not pipeline_check(g, tampered)

    def test_swapped_pair_still_passes(self):
        # intersection is symmetric in the two realizations
        g = cycle(5)
        _, trace = construct_box_representation(g)
        r0, r1 = trace.pairs[0]
        swapped = dataclasses.replace(trace, pairs=((r1, r0),) + trace.pairs[1:])
        assert pipeline_check(g, swapped)

    def test_slim_trace_passes(self):
        g = cycle(6)
        _, trace = construct_box_representation(g, ConstructOptions(trace="slim"))
        assert pipeline_check(g, trace)

    def test_packed_path_agrees(self, monkeypatch):
        from boxicity import _bitops

        g = cocktail_party(4)
        _, trace = construct_box_representation(g)
        assert pipeline_check(g, trace)
        monkeypatch.setattr(_bitops, "DENSE_LIMIT", 0)
        assert pipeline_check(g, trace)

    def test_packed_path_detects_tampering(self, monkeypatch):
        from boxicity import _bitops

        g = cocktail_party(4)
        _, trace = construct_box_representation(g)
        victim = trace.augmented[0]
        tampered = dataclasses.replace(
            trace,
            augmented=(Graph(g.n, victim.edges()[:-1]),) + trace.augmented[1:],
        )
        monkeypatch.setattr(_bitops, "DENSE_LIMIT", 0)
        assert not pipeline_check(g, tampered)

    @settings(max_examples=40)
    @given(bounded_degree_graphs(max_n=30))
    def test_random_traces_pass(self, g):
        _, trace = construct_box_representation(g)
        assert pipeline_check(g, trace)
