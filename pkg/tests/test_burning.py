import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphburn import graph as gr
from graphburn.burning import (
    UNBURNED,
    RootedTreePartition,
    TreePart,
    check_sequence,
    cone_substitution,
    cover_to_sequence,
    is_burning_sequence,
    partition_to_sequence,
    sequence_from_centers,
    sequence_to_partition,
    simulate,
)
from graphburn.errors import InvalidCover, InvalidNode, InvalidPartition, InvalidSequence

from strategies import connected_graphs, graphs


def sequences(g, max_len):
    for k in range(1, max_len + 1):
        yield from itertools.permutations(range(g.n), k)


@st.composite
def graph_and_sequence(draw, max_n=8):
    g = draw(graphs(max_n=max_n))
    seq = draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=min(g.n, 5), unique=True))
    return g, tuple(seq)


class TestSimulate:
    def test_p4_example(self):
        sched = simulate(gr.path(4), [1, 3])
        assert sched.valid and sched.burn_round == (2, 1, 2, 2)

    def test_k1(self):
        sched = simulate(gr.path(1), [0])
        assert sched.valid and sched.burn_round == (1,)

    def test_adjacent_pair_leaves_a_node(self):
        sched = simulate(gr.path(4), [1, 2])
        assert sched.invalid_at == 3 and sched.burn_round == (2, 1, 2, UNBURNED)

    def test_source_already_burned(self):
        sched = simulate(gr.path(4), [1, 3, 2])
        assert sched.invalid_at == 3 and sched.reason == "source already burned"

    def test_unburned_after_last_round(self):
        sched = simulate(gr.path(5), [0, 4])
        assert sched.invalid_at == 3 and sched.burn_round[2] == UNBURNED

    def test_repeated_source(self):
        assert simulate(gr.complete(3), [0, 0]).invalid_at == 2

    def test_bad_id(self):
        with pytest.raises(InvalidNode):
            simulate(gr.path(3), [3])

    @given(graph_and_sequence())
    def test_burn_round_is_min_over_sources(self, gs):
        g, seq = gs
        sched = simulate(g, seq)
        if not sched.valid:
            return
        d = g.dist
        for v in range(g.n):
            best = min(i + d[x, v] for i, x in enumerate(seq, 1) if d[x, v] >= 0)
            assert sched.burn_round[v] == best

    @given(graph_and_sequence())
    def test_sources_burn_in_their_round(self, gs):
        g, seq = gs
        sched = simulate(g, seq)
        if sched.valid:
            assert all(sched.burn_round[x] == i for i, x in enumerate(seq, 1))


class TestCharacterization:
    def test_p4_examples(self):
        g = gr.path(4)
        assert check_sequence(g, [1, 3]).valid
        assert check_sequence(g, [1, 2]).uncovered == 3
        assert check_sequence(g, [1, 3, 2]).violation == (1, 3)
        assert check_sequence(g, [0]).uncovered == 1

    def test_star(self):
        g = gr.star(4)
        assert is_burning_sequence(g, [0, 1])
        assert not is_burning_sequence(g, [1, 0])

    @pytest.mark.parametrize("g", [gr.path(5), gr.cycle(6), gr.star(4), gr.spider(3, 2),
                                   gr.wheel(5), gr.disjoint_union([gr.path(3), gr.path(2)])],
                             ids=["P5", "C6", "K1_4", "spider", "W5", "P3+P2"])
    def test_exhaustive_agreement(self, g):
        for seq in sequences(g, 4):
            assert check_sequence(g, seq).valid == simulate(g, seq).valid, seq

    @settings(max_examples=300)
    @given(graph_and_sequence())
    def test_agrees_with_simulation(self, gs):
        g, seq = gs
        assert check_sequence(g, seq).valid == simulate(g, seq).valid


class TestPartitions:
    def test_p4(self):
        p = sequence_to_partition(gr.path(4), [1, 3])
        assert p.roots == (1, 3)
        assert p.parts[0].members == frozenset({0, 1, 2})
        assert p.parts[1].members == frozenset({3})
        assert p.parts[0].height == 1 and p.parts[1].height == 0

    def test_tight_pair_goes_to_the_later_source(self):
        # v4 lit in round 3 sits one step from v3, which the round-2 source
        # reaches in round 3 too; v3 must stay with the later root or part 3 breaks
        p = sequence_to_partition(gr.path(4), [0, 1, 3])
        assert p.roots == (0, 1, 3)
        assert [sorted(part.members) for part in p.parts] == [[0], [1, 2], [3]]

    def test_invalid_sequence_rejected(self):
        with pytest.raises(InvalidSequence):
            sequence_to_partition(gr.path(4), [0])

    @settings(max_examples=200)
    @given(graph_and_sequence())
    def test_round_trip(self, gs):
        g, seq = gs
        if not simulate(g, seq).valid:
            return
        p = sequence_to_partition(g, seq)
        assert partition_to_sequence(g, p) == seq
        k = len(seq)
        for i, part in enumerate(p.parts, 1):
            assert part.height <= k - i
            assert g.induced_subgraph(sorted(part.members)).is_connected()

    def _good(self):
        return RootedTreePartition((
            TreePart(1, frozenset({0, 1, 2}), {0: 1, 2: 1}),
            TreePart(3, frozenset({3}), {}),
        ))

    def test_manual_partition(self):
        assert partition_to_sequence(gr.path(4), self._good()) == (1, 3)

    @pytest.mark.parametrize("parts", [
        (TreePart(1, frozenset({0, 1, 2}), {0: 1, 2: 1}), TreePart(3, frozenset({2, 3}), {2: 3})),
        (TreePart(1, frozenset({0, 1}), {0: 1}), TreePart(3, frozenset({3}), {})),
        (TreePart(1, frozenset({0, 1, 2}), {0: 1, 2: 0}), TreePart(3, frozenset({3}), {})),
        (TreePart(0, frozenset({0, 1, 2}), {1: 0, 2: 1}), TreePart(3, frozenset({3}), {})),
        (TreePart(2, frozenset({0, 1, 2}), {0: 1, 1: 2}), TreePart(3, frozenset({3}), {})),
        (TreePart(5, frozenset({0, 1, 2}), {0: 1, 2: 1}), TreePart(3, frozenset({3}), {})),
    ], ids=["overlap", "uncovered", "non-edge", "too-tall", "roots-too-close", "root-not-member"])
    def test_errors(self, parts):
        with pytest.raises(InvalidPartition):
            partition_to_sequence(gr.path(4), RootedTreePartition(parts))


class TestCovers:
    def test_p9_three_unit_balls(self):
        g = gr.path(9)
        seq = cover_to_sequence(g, [[0, 1, 2], [3, 4, 5], [6, 7, 8]], 1)
        assert len(seq) <= 4 and simulate(g, seq).valid

    def test_p9_nested_radii(self):
        g = gr.path(9)
        seq = cover_to_sequence(g, [range(0, 5), range(5, 8), [8]], 3)
        assert len(seq) <= 3 and simulate(g, seq).valid

    def test_complete(self):
        g = gr.complete(6)
        seq = cover_to_sequence(g, [range(6)], 1)
        assert len(seq) <= 2 and simulate(g, seq).valid

    @pytest.mark.parametrize("cover,k", [
        ([[0, 1, 2], [3]], 1),
        ([[0, 2], [1, 3, 4]], 2),
        ([[0, 1, 2, 3, 4]], 1),
        ([[0, 1, 2], [], [3, 4]], 2),
    ], ids=["missing", "disconnected", "radius", "empty"])
    def test_errors(self, cover, k):
        with pytest.raises(InvalidCover):
            cover_to_sequence(gr.path(5), cover, k)

    @settings(max_examples=80)
    @given(connected_graphs(), st.data())
    def test_length_bound(self, g, data):
        k = data.draw(st.integers(0, 3))
        # pieces: balls of radius <= k around random centers until all covered
        left = set(range(g.n))
        cover = []
        while left:
            c = data.draw(st.sampled_from(sorted(left)))
            piece = gr.ball(g, c, k)
            cover.append(piece)
            left -= piece
        seq = cover_to_sequence(g, cover, k)
        assert simulate(g, seq).valid and len(seq) <= len(cover) + k

    @given(connected_graphs(), st.data())
    def test_decreasing_radii_give_length_k(self, g, data):
        k = data.draw(st.integers(1, 4))
        centers = data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k))
        cover = [gr.ball(g, c, k - i) for i, c in enumerate(centers, 1)]
        if set().union(*cover) != set(range(g.n)):
            return
        seq = cover_to_sequence(g, cover, k)
        assert simulate(g, seq).valid and len(seq) <= k

    @given(connected_graphs(), st.data())
    def test_sequence_from_centers(self, g, data):
        centers = data.draw(st.lists(st.integers(0, g.n - 1), max_size=g.n))
        seq = sequence_from_centers(g, centers)
        sched = simulate(g, seq)
        assert sched.valid
        for j, c in enumerate(centers, 1):
            assert sched.burn_round[c] <= j


class TestCone:
    def test_leaf_swapped_for_its_neighbour(self):
        g = gr.path(5)
        assert cone_substitution(g, (0, 3, 4), 1, 1) == (1, 3, 4)

    def test_last_position_and_used_nodes_rejected(self):
        g = gr.path(4)
        assert cone_substitution(g, (2, 0), 2, 1) is None
        assert cone_substitution(g, (2, 0), 1, 0) is None

    def test_no_containment(self):
        assert cone_substitution(gr.path(7), (3, 0, 6), 1, 2) is None

    def test_pendant_to_support(self):
        g = gr.spider(3, 2)
        out = cone_substitution(g, (0, 2, 6), 2, 1)
        assert out == (0, 1, 6) and simulate(g, out).valid

    def test_distance_rule(self):
        # K_4 minus edge 01: N[0] ⊆ N[3], but 3 is adjacent to the round-3 source 1
        g = gr.from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert simulate(g, (0, 2, 1)).valid
        assert cone_substitution(g, (0, 2, 1), 1, 3) is None
        assert not simulate(g, (3, 2, 1)).valid

    def test_literal_containment_is_unsound(self):
        # N[x] ⊆ N[x_j] does not preserve validity on K_{1,3}
        g = gr.star(3)
        assert simulate(g, (0, 1)).valid
        assert not simulate(g, (2, 1)).valid

    @settings(max_examples=300)
    @given(graph_and_sequence(max_n=7), st.data())
    def test_substitution_keeps_validity(self, gs, data):
        g, seq = gs
        if not simulate(g, seq).valid:
            return
        j = data.draw(st.integers(1, len(seq)))
        x = data.draw(st.integers(0, g.n - 1))
        out = cone_substitution(g, seq, j, x)
        if out is not None:
            assert simulate(g, out).valid

    def test_applies_somewhere(self):
        # K_4 minus an edge: N[0] = {0,1,2} ⊆ N[1] = {0,1,2,3}
        g = gr.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        hits = 0
        for seq in sequences(g, 3):
            if not simulate(g, seq).valid:
                continue
            for j in range(1, len(seq)):
                for x in range(g.n):
                    out = cone_substitution(g, seq, j, x)
                    if out is not None:
                        hits += 1
                        assert simulate(g, out).valid
        assert hits > 0


class TestMoreExamples:
    def test_k1_partition(self):
        p = sequence_to_partition(gr.path(1), [0])
        assert len(p.parts) == 1 and p.parts[0].height == 0
        assert partition_to_sequence(gr.path(1), p) == (0,)

    def test_c4_partitions(self):
        g = gr.cycle(4)
        for seq in sequences(g, 2):
            if len(seq) == 2 and simulate(g, seq).valid:
                p = sequence_to_partition(g, seq)
                assert p.parts[0].height <= 1 and p.parts[1].height == 0

    def test_shared_root_rejected(self):
        parts = (TreePart(1, frozenset({0, 1, 2}), {0: 1, 2: 1}), TreePart(1, frozenset({3}), {}))
        with pytest.raises(InvalidPartition):
            partition_to_sequence(gr.path(4), RootedTreePartition(parts))

    def test_p9_cover_around_given_centers(self):
        g = gr.path(9)
        seq = cover_to_sequence(g, [gr.ball(g, c, 1) for c in (1, 4, 7)], 1)
        assert len(seq) <= 4 and simulate(g, seq).valid
