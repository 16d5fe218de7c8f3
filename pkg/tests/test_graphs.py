import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from mcskit.errors import (
    DisconnectedGraphError,
    FormatError,
    GuardExceededError,
    InputError,
)
from mcskit.generators import GenConfig, random_interval_instance
from mcskit.graphs import (
    ColoredGraph,
    bfs_distances,
    covering_set,
    exact_mcs,
    exact_min_dominating_set,
    format_graph,
    is_consistent_subset,
    nearest_neighbors,
    parse_graph,
    shortest_path,
)


def path3(colors=(1, 1, 1)):
    return ColoredGraph({1: colors[0], 2: colors[1], 3: colors[2]}, [(1, 2), (2, 3)])


def star(leaves=4):
    colors = {1: 1}
    colors.update({i: 1 for i in range(2, leaves + 2)})
    return ColoredGraph(colors, [(1, i) for i in range(2, leaves + 2)])


@st.composite
def colored_graphs(draw, max_n=7, connected=False):
    n = draw(st.integers(2, max_n))
    alpha = draw(st.integers(1, min(3, n)))
    colors = list(range(1, alpha + 1)) + [
        draw(st.integers(1, alpha)) for _ in range(n - alpha)
    ]
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = [p for p in pairs if draw(st.booleans())]
    if connected:
        # chain backbone keeps it connected without skewing much else
        edges += [(i, i + 1) for i in range(1, n)]
    return ColoredGraph(dict(zip(range(1, n + 1), colors)), edges)


class TestBfs:
    def test_path_distances(self):
        assert bfs_distances(path3(), 1) == {1: 0, 2: 1, 3: 2}

    def test_source_is_zero(self):
        g = star()
        assert bfs_distances(g, 3)[3] == 0

    def test_unreachable_is_infinite(self):
        g = ColoredGraph({1: 1, 2: 1, 3: 1, 4: 1}, [(1, 2), (3, 4)])
        d = bfs_distances(g, 1)
        assert d[2] == 1 and d[3] == math.inf and d[4] == math.inf

    def test_invalid_source(self):
        with pytest.raises(InputError):
            bfs_distances(path3(), 9)

    @given(colored_graphs(connected=True))
    def test_adjacent_vertices_differ_by_at_most_one(self, g):
        for u in g.vertex_ids:
            du = bfs_distances(g, u)
            for v in g.neighbors(u):
                dv = bfs_distances(g, v)
                assert all(abs(du[w] - dv[w]) <= 1 for w in g.vertex_ids)

    @given(colored_graphs())
    def test_matches_reference_bfs(self, g):
        adj = {v: set(g.neighbors(v)) for v in g.vertex_ids}
        for v in g.vertex_ids:
            ref = oracles.bfs(adj, v)
            got = bfs_distances(g, v)
            for w in g.vertex_ids:
                assert got[w] == ref.get(w, math.inf)


class TestShortestPath:
    def test_path_endpoints(self):
        assert shortest_path(path3(), 1, 3) == [1, 2, 3]

    def test_self_path(self):
        assert shortest_path(path3(), 2, 2) == [2]

    def test_disconnected_pair_is_none(self):
        g = ColoredGraph({1: 1, 2: 1}, [])
        assert shortest_path(g, 1, 2) is None

    @given(colored_graphs(connected=True))
    def test_length_matches_distance(self, g):
        ids = g.vertex_ids
        p = shortest_path(g, ids[0], ids[-1])
        assert p is not None
        assert len(p) - 1 == bfs_distances(g, ids[0])[ids[-1]]
        assert all(p[i + 1] in g.neighbors(p[i]) for i in range(len(p) - 1))


class TestNearestAndCovering:
    def test_member_vertex_is_its_own_neighbor(self):
        assert nearest_neighbors(path3(), 1, {1, 2, 3}) == {1}

    def test_path_nearest(self):
        assert nearest_neighbors(path3(), 1, {2, 3}) == {2}

    def test_star_ties_are_kept(self):
        g = star(4)
        assert nearest_neighbors(g, 1, {2, 3, 4, 5}) == {2, 3, 4, 5}

    def test_empty_candidates_rejected(self):
        with pytest.raises(InputError):
            nearest_neighbors(path3(), 1, set())

    def test_self_covers_self(self):
        g = path3((1, 2, 1))
        assert covering_set(g, 1, {1, 2}) == {1}

    def test_wrong_color_blocks(self):
        g = path3((1, 2, 1))
        assert covering_set(g, 1, {2, 3}) == set()

    def test_same_color_far_member(self):
        g = path3((1, 2, 1))
        assert covering_set(g, 1, {3}) == {3}

    @given(colored_graphs(connected=True), st.data())
    def test_cov_subset_of_nn_subset_of_members(self, g, data):
        members = data.draw(
            st.sets(st.sampled_from(g.vertex_ids), min_size=1), label="members"
        )
        v = data.draw(st.sampled_from(g.vertex_ids), label="v")
        nn = nearest_neighbors(g, v, members)
        cov = covering_set(g, v, members)
        assert cov <= nn <= frozenset(members)


class TestConsistency:
    def test_whole_vertex_set(self):
        g = path3((1, 2, 1))
        assert is_consistent_subset(g, {1, 2, 3})

    def test_bicolored_edge_needs_both(self):
        g = ColoredGraph({1: 1, 2: 2}, [(1, 2)])
        assert not is_consistent_subset(g, {1})
        assert is_consistent_subset(g, {1, 2})

    def test_empty_subset_rejected(self):
        with pytest.raises(InputError):
            is_consistent_subset(path3(), set())

    def test_disconnected_rejected(self):
        g = ColoredGraph({1: 1, 2: 1}, [])
        with pytest.raises(DisconnectedGraphError):
            is_consistent_subset(g, {1})

    @given(colored_graphs(connected=True))
    def test_whole_set_always_consistent(self, g):
        assert is_consistent_subset(g, set(g.vertex_ids))

    def test_locally_minimal_cs_larger_than_mcs_exists(self):
        # Seeded witness: {1,2,4,5} is consistent, no proper subset is,
        # yet the optimum has size 2.
        inst = random_interval_instance(GenConfig(7, 2, 3))
        g = inst.graph
        from itertools import combinations

        cs = frozenset({1, 2, 4, 5})
        assert is_consistent_subset(g, cs)
        for k in range(1, len(cs)):
            for sub in combinations(sorted(cs), k):
                assert not is_consistent_subset(g, frozenset(sub))
        assert len(exact_mcs(g)) == 2


class TestExactMcs:
    def test_monochromatic_takes_smallest_id(self):
        assert exact_mcs(path3()) == {1}

    def test_bicolored_k2(self):
        g = ColoredGraph({1: 1, 2: 2}, [(1, 2)])
        assert exact_mcs(g) == {1, 2}

    def test_budget_unsatisfiable_returns_none(self):
        g = ColoredGraph({1: 1, 2: 2, 3: 3}, [(1, 2), (2, 3)])
        assert exact_mcs(g, budget=2) is None

    def test_guard(self):
        g = path3()
        with pytest.raises(GuardExceededError):
            exact_mcs(g, guard=2)
        assert exact_mcs(g, guard=None) == {1}

    def test_disconnected_rejected(self):
        g = ColoredGraph({1: 1, 2: 1}, [])
        with pytest.raises(DisconnectedGraphError):
            exact_mcs(g)

    def test_size_agrees_with_bitmask_oracle(self):
        for seed in range(1, 41):
            inst = random_interval_instance(GenConfig(3 + seed % 10, 2 if seed % 2 else 3, seed))
            adj = oracles.interval_adjacency(inst.intervals)
            colors = {r.id: r.color for r in inst.intervals}
            got = exact_mcs(inst.graph)
            assert len(got) == oracles.mcs_size(adj, colors)
            assert is_consistent_subset(inst.graph, got)

    def test_result_contains_every_color(self):
        for seed in range(1, 21):
            inst = random_interval_instance(GenConfig(4 + seed % 6, 3, seed))
            got = exact_mcs(inst.graph)
            assert {inst.by_id[v].color for v in got} == set(range(1, inst.alpha + 1))


class TestExactDominatingSet:
    def test_star_center(self):
        assert exact_min_dominating_set(star(5)) == {1}

    def test_path_middle(self):
        assert exact_min_dominating_set(path3()) == {2}

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            exact_min_dominating_set(star(5), guard=3)

    def test_size_agrees_with_bitmask_oracle(self):
        from mcskit.generators import random_chord_diagram

        for seed in range(1, 31):
            d = random_chord_diagram(GenConfig(2 + seed % 8, 2, seed))
            adj = oracles.chord_adjacency(d.chords)
            got = exact_min_dominating_set(d.graph)
            assert len(got) == oracles.min_domset_size(adj)
            assert all(v in got or d.graph.neighbors(v) & got for v in d.graph.vertex_ids)


class TestGraphFormat:
    DOC = "graph 3 2\nv 1 1\nv 2 2\nv 3 1\ne 1 2\ne 2 3\n"

    def test_round_trip(self):
        g = parse_graph(self.DOC)
        assert format_graph(g) == self.DOC

    def test_comments_and_blanks(self):
        g = parse_graph("# hi\n\ngraph 1 1\nv 1 1  # trailing\n")
        assert g.vertex_count == 1

    def test_missing_header(self):
        with pytest.raises(FormatError):
            parse_graph("v 1 1\n")

    def test_noncontiguous_ids(self):
        with pytest.raises(FormatError):
            parse_graph("graph 2 1\nv 1 1\nv 5 1\n")

    def test_alpha_mismatch(self):
        with pytest.raises(FormatError):
            parse_graph("graph 2 2\nv 1 1\nv 2 1\n")

    def test_bad_record(self):
        with pytest.raises(FormatError):
            parse_graph("graph 1 1\nv 1 one\n")


class TestColoredGraphValidation:
    def test_color_gap_rejected(self):
        with pytest.raises(InputError):
            ColoredGraph({1: 1, 2: 3}, [(1, 2)])

    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            ColoredGraph({1: 1}, [(1, 1)])

    def test_unknown_edge_endpoint_rejected(self):
        with pytest.raises(InputError):
            ColoredGraph({1: 1}, [(1, 2)])
