import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from mcskit.chords import (
    ChordDiagram,
    ChordRecord,
    chords_cross,
    circle_graph,
    format_chords,
    format_reduced,
    parse_chords,
    parse_reduced,
    reduce_domset_to_mcs,
    verify_reduction_lemma,
)
from mcskit.errors import (
    DisconnectedGraphError,
    FormatError,
    GuardExceededError,
    InputError,
)
from mcskit.generators import GenConfig, random_chord_diagram
from mcskit.graphs import exact_min_dominating_set, is_consistent_subset


def chord(i, a, b, color=1):
    return ChordRecord(i, color, a, b)


class TestCrossing:
    def test_interleaved(self):
        assert chords_cross(chord(1, 1, 3), chord(2, 2, 4))

    def test_disjoint_arcs(self):
        assert not chords_cross(chord(1, 1, 2), chord(2, 3, 4))

    def test_nested(self):
        assert not chords_cross(chord(1, 1, 4), chord(2, 2, 3))

    def test_shared_endpoint_rejected(self):
        with pytest.raises(InputError):
            chords_cross(chord(1, 1, 3), chord(2, 3, 4))

    @given(st.permutations(list(range(1, 5))))
    def test_symmetric(self, pts):
        a, b = chord(1, pts[0], pts[1]), chord(2, pts[2], pts[3])
        assert chords_cross(a, b) == chords_cross(b, a)


class TestCircleGraph:
    def test_two_interleaved_chords_make_an_edge(self):
        d = ChordDiagram([chord(1, 1, 3), chord(2, 2, 4)])
        assert circle_graph(d).neighbors(1) == {2}

    def test_mutually_interleaved_chords_form_a_clique(self):
        n = 5
        d = ChordDiagram([chord(i, i, n + i) for i in range(1, n + 1)])
        g = circle_graph(d)
        assert g.edge_count() == n * (n - 1) // 2

    def test_nested_chords_have_no_edges(self):
        n = 5
        d = ChordDiagram([chord(i, i, 2 * n + 1 - i) for i in range(1, n + 1)])
        assert circle_graph(d).edge_count() == 0

    def test_matches_reference_adjacency(self):
        for seed in range(1, 15):
            d = random_chord_diagram(GenConfig(2 + seed % 7, 2, seed))
            g = circle_graph(d)
            assert {v: set(g.neighbors(v)) for v in g.vertex_ids} == oracles.chord_adjacency(
                d.chords
            )


class TestReduction:
    def test_single_chord_gadget(self):
        d = ChordDiagram([chord(1, 1, 2)])
        reduced = reduce_domset_to_mcs(d)
        g = circle_graph(reduced.diagram)
        assert g.vertex_count == 2 and g.edge_count() == 1
        assert {reduced.diagram.by_id[i].color for i in (1, 2)} == {1, 2}

    def test_edge_count_is_n_plus_m(self):
        for seed in range(1, 20):
            d = random_chord_diagram(GenConfig(2 + seed % 7, 2, seed))
            g = circle_graph(d)
            g2 = circle_graph(reduce_domset_to_mcs(d).diagram)
            assert g2.vertex_count == 2 * d.n
            assert g2.edge_count() == d.n + g.edge_count()

    def test_pendants_have_degree_one(self):
        for seed in range(1, 20):
            d = random_chord_diagram(GenConfig(2 + seed % 8, 2, seed))
            reduced = reduce_domset_to_mcs(d)
            g2 = circle_graph(reduced.diagram)
            for v1, v2 in reduced.pendant_of.items():
                assert g2.neighbors(v2) == {v1}

    def test_copy_pattern_matches_source(self):
        for seed in range(1, 20):
            d = random_chord_diagram(GenConfig(2 + seed % 8, 2, seed))
            reduced = reduce_domset_to_mcs(d)
            g, g2 = circle_graph(d), circle_graph(reduced.diagram)
            for u in g.vertex_ids:
                assert g.neighbors(u) == g2.neighbors(u) - {reduced.pendant_of[u]}

    def test_colors(self):
        d = random_chord_diagram(GenConfig(5, 2, 9))
        reduced = reduce_domset_to_mcs(d)
        colors = {r.id: r.color for r in reduced.diagram.chords}
        assert all(colors[v] == 1 for v in reduced.v1_ids)
        assert sorted(colors[v] for v in reduced.v2_ids) == list(range(2, d.n + 2))


class TestReductionLemma:
    def test_single_chord(self):
        verdict = verify_reduction_lemma(ChordDiagram([chord(1, 1, 2)]))
        assert verdict.dominating_size == 1
        assert verdict.mcs_size == 2 == verdict.expected_mcs_size
        assert verdict.verdict

    def test_triangle_source(self):
        d = ChordDiagram([chord(1, 1, 4), chord(2, 2, 5), chord(3, 3, 6)])
        verdict = verify_reduction_lemma(d)
        assert verdict.dominating_size == 1
        assert verdict.mcs_size == 4 == verdict.expected_mcs_size
        assert verdict.verdict

    def test_forward_witness_for_any_dominating_set(self):
        d = random_chord_diagram(GenConfig(6, 2, 7))
        reduced = reduce_domset_to_mcs(d)
        g2 = circle_graph(reduced.diagram)
        domset = exact_min_dominating_set(circle_graph(d))
        assert is_consistent_subset(g2, reduced.v2_ids | domset)
        # also a non-minimum dominating set works as a witness
        bigger = domset | {min(set(circle_graph(d).vertex_ids) - domset)}
        assert is_consistent_subset(g2, reduced.v2_ids | bigger)

    def test_seeded_batch(self):
        for seed in range(1, 25):
            d = random_chord_diagram(GenConfig(2 + seed % 7, 2, seed))
            assert verify_reduction_lemma(d).verdict

    def test_guard(self):
        d = random_chord_diagram(GenConfig(6, 2, 7))
        with pytest.raises(GuardExceededError):
            verify_reduction_lemma(d, guard=4)

    def test_disconnected_source_rejected(self):
        d = ChordDiagram([chord(1, 1, 2), chord(2, 3, 4)])
        with pytest.raises(DisconnectedGraphError):
            verify_reduction_lemma(d)


class TestChordFormat:
    DOC = "chords 2\nc 1 1 1 3\nc 2 2 2 4\n"

    def test_round_trip(self):
        assert format_chords(parse_chords(self.DOC)) == self.DOC

    def test_reduced_round_trip(self):
        d = parse_chords(self.DOC)
        reduced = reduce_domset_to_mcs(d)
        text = format_reduced(reduced)
        back = parse_reduced(text)
        assert back.pendant_of == reduced.pendant_of
        assert back.diagram.chords == reduced.diagram.chords

    def test_plain_parser_rejects_pendants(self):
        with pytest.raises(FormatError):
            parse_chords(self.DOC + "pendant 1 2\n")

    def test_header_count_mismatch(self):
        with pytest.raises(FormatError):
            parse_chords("chords 3\nc 1 1 1 3\nc 2 1 2 4\n")

    def test_position_validation(self):
        with pytest.raises(FormatError):
            parse_chords("chords 2\nc 1 1 1 3\nc 2 1 3 4\n")


class TestDiagramValidation:
    def test_ids_must_be_contiguous(self):
        with pytest.raises(InputError):
            ChordDiagram([chord(2, 1, 2)])

    def test_positions_must_cover_range(self):
        with pytest.raises(InputError):
            ChordDiagram([chord(1, 1, 5)])
