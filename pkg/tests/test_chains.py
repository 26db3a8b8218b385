import pytest

from flagweak import (
    CapExceededError,
    GroupContext,
    build_interval,
    diameter,
    enumerate_group,
    gamma_graph,
    generic_moves,
    identity,
    is_connected,
    maximal_chains,
    mu0,
    tits_moves,
    up_covers,
)
from flagweak.chains import GeneratorWord, alpha, chains_between
from flagweak.core import a, b, right_multiply
from flagweak.order import _bit_indices

from conftest import el


def word_strs(words):
    return [str(w) for w in words]


class TestGeneratorWord:
    def test_elements_and_end(self, b2):
        w = GeneratorWord(identity(b2), (b(2), a(1)))
        assert [str(x) for x in w.elements()] == ["1^0,2^0", "1^0,2^1", "2^0,1^0"]
        assert w.end == el(b2, "2,1")

    def test_validity(self, b2):
        good = GeneratorWord(identity(b2), (b(1), b(2)))
        assert good.is_valid()
        # a_1 does not cover the identity: its step jumps finv by 2
        bad = GeneratorWord(identity(b2), (a(1),))
        assert not bad.is_valid()

    def test_str(self, b2):
        assert str(GeneratorWord(identity(b2), (b(1), a(1)))) == "b1.a1"
        assert str(GeneratorWord(identity(b2), ())) == "(empty)"


class TestMaximalChains:
    def test_full_b2(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        got = word_strs(maximal_chains(iv))
        assert got == [
            "b1.b2.a1.b1",
            "b2.a1.b1.b2",
            "b2.a1.b2.b1",
            "b2.b1.a1.b1",
        ]

    def test_single_cover(self, b3):
        g = el(b3, "1,-2,3")
        h = right_multiply(g, b(1))
        iv = build_interval(g, h)
        assert word_strs(maximal_chains(iv)) == ["b1"]

    def test_two_atom_square(self, b2):
        iv = build_interval(identity(b2), el(b2, "-1,-2"))
        assert word_strs(maximal_chains(iv)) == ["b1.b2", "b2.b1"]

    def test_lengths_match_rank_gap(self, b3, hasse_b3):
        g, h = el(b3, "1,-2,3"), el(b3, "-3,-2,1")
        iv = build_interval(g, h, hasse_b3)
        for w in maximal_chains(iv):
            assert len(w.letters) == h.finv - g.finv
            assert w.is_valid() and w.end == h

    def test_cap(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        with pytest.raises(CapExceededError):
            maximal_chains(iv, cap=2)

    def test_chains_between_matches_interval_route(self, b3, hasse_b3):
        g, h = el(b3, "1,2,-3"), el(b3, "-3,2,-1")
        iv = build_interval(g, h, hasse_b3)
        assert set(chains_between(g, h)) == {w.letters for w in maximal_chains(iv)}


class TestAlpha:
    def test_adjacent_swaps(self, b4):
        g = el(b4, "1,-2,-3,4")
        assert str(alpha(a(1), a(2), g)) == "a1.a2.b2.a1"
        assert str(alpha(a(2), a(1), g)) == "a2.b2.a1.a2"

    def test_two_bumps(self, b3):
        assert str(alpha(b(1), b(2), identity(b3))) == "b1.b2"

    def test_swap_with_own_bump(self, b2):
        g = el(b2, "1,-2")
        assert str(alpha(a(1), b(1), g)) == "a1.b2"
        assert str(alpha(b(1), a(1), g)) == "b1.a1"

    def test_impossible_pair(self, b2):
        assert alpha(a(1), b(2), identity(b2)) is None
        assert alpha(b(2), a(1), identity(b2)) is None

    def test_requires_covers(self, b2):
        with pytest.raises(ValueError):
            alpha(a(1), b(1), identity(b2))

    def test_requires_two_colors(self, g32):
        with pytest.raises(ValueError):
            alpha(b(1), b(2), identity(g32))

    def test_distinct_generators(self, b2):
        with pytest.raises(ValueError):
            alpha(b(1), b(1), identity(b2))

    def test_base_independence_b3(self, b3):
        from flagweak.lattice import join

        seen = {}
        for g in enumerate_group(b3):
            covers = up_covers(g)
            for s, gs in covers:
                for s2, gs2 in covers:
                    if s == s2:
                        continue
                    word = alpha(s, s2, g)
                    key = (s, s2)
                    seen.setdefault(key, set()).add(word.letters)
                    top = join(gs, gs2)
                    chains = chains_between(g, top)
                    assert len(chains) == 2
                    assert set(chains) == {
                        word.letters,
                        alpha(s2, s, g).letters,
                    }
        for letters in seen.values():
            assert len(letters) == 1


class TestMoves:
    def test_t1_example(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        words = {str(w): w for w in maximal_chains(iv)}
        moves = tits_moves(words["b1.b2.a1.b1"])
        assert [(m.position, str(m.word)) for m in moves] == [(1, "b2.b1.a1.b1")]
        assert moves[0].kind == "T1"

    def test_t3_example(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        words = {str(w): w for w in maximal_chains(iv)}
        got = {(m.position, str(m.word)) for m in tits_moves(words["b2.b1.a1.b1"])}
        assert (2, "b2.a1.b2.b1") in got

    def test_no_moves(self, b3):
        g = el(b3, "1,-2,3")
        w = GeneratorWord(g, (b(1),))
        assert tits_moves(w) == ()

    def test_t5_both_directions(self, b4):
        g = el(b4, "1,-2,-3,4")
        fwd = GeneratorWord(g, (a(1), a(2), b(2), a(1)))
        assert fwd.is_valid()
        moves = tits_moves(fwd)
        targets = {str(m.word) for m in moves if m.kind == "T5"}
        assert "a2.b2.a1.a2" in targets
        back = GeneratorWord(g, (a(2), b(2), a(1), a(2)))
        targets = {str(m.word) for m in tits_moves(back) if m.kind == "T5"}
        assert "a1.a2.b2.a1" in targets

    def test_moves_preserve_endpoints(self, b3, hasse_b3):
        g, h = identity(b3), el(b3, "-2,-1,3")
        iv = build_interval(g, h, hasse_b3)
        for w in maximal_chains(iv):
            for m in tits_moves(w):
                assert m.word.base == g and m.word.end == h
                assert m.word.is_valid()

    def test_generic_equals_tits_on_b2(self, b2, hasse_b2):
        for gid, g in enumerate(hasse_b2.elements):
            for hid in _bit_indices(hasse_b2.upset_bits[gid]):
                iv = build_interval(g, hasse_b2.elements[hid], hasse_b2)
                for w in maximal_chains(iv):
                    assert {m.word.letters for m in tits_moves(w)} == {
                        m.word.letters for m in generic_moves(w)
                    }

    def test_generic_equals_tits_on_b3(self):
        from flagweak.checks import check_moves_equivalence

        res = check_moves_equivalence(2, 3)
        assert res.ok, res.line()

    def test_generic_single_chain_three_colors(self):
        ctx = GroupContext(3, 1)
        iv = build_interval(identity(ctx), mu0(ctx))
        words = maximal_chains(iv)
        assert word_strs(words) == ["b1.b1"]
        assert generic_moves(words[0]) == ()

    def test_moves_route_to_generic_for_three_colors(self, g32):
        iv = build_interval(identity(g32), mu0(g32))
        w = maximal_chains(iv)[0]
        assert {m.word.letters for m in tits_moves(w)} == {
            m.word.letters for m in generic_moves(w)
        }


class TestGammaGraph:
    def test_b2_path(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        graph = gamma_graph(iv)
        assert len(graph.words) == 4
        assert is_connected(graph)
        assert diameter(graph).value == 3
        assert diameter(graph).exact
        degrees = sorted(len(row) for row in graph.adjacency)
        assert degrees == [1, 1, 2, 2]
        assert graph.move_kinds() == ("T1", "T3")

    def test_single_vertex(self, b3):
        g = el(b3, "1,-2,3")
        iv = build_interval(g, right_multiply(g, b(1)))
        graph = gamma_graph(iv)
        assert len(graph.words) == 1
        assert is_connected(graph)
        assert diameter(graph) .value == 0

    def test_all_intervals_of_b2_connected(self, b2, hasse_b2):
        for gid, g in enumerate(hasse_b2.elements):
            for hid in _bit_indices(hasse_b2.upset_bits[gid]):
                iv = build_interval(g, hasse_b2.elements[hid], hasse_b2)
                assert is_connected(gamma_graph(iv))

    def test_three_color_full_graph_connected(self, g32):
        iv = build_interval(identity(g32), mu0(g32))
        graph = gamma_graph(iv)
        assert len(graph.words) > 1
        assert is_connected(graph)

    def test_diameter_lower_bound_mode(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        graph = gamma_graph(iv)
        result = diameter(graph, exact_limit=2)
        assert not result.exact
        assert result.value <= 3
        assert str(result).endswith("(lower bound)")

    def test_dot_export(self, b2):
        iv = build_interval(identity(b2), mu0(b2))
        graph = gamma_graph(iv)
        from flagweak.chains import to_dot

        dot = to_dot(graph)
        assert 'label="b1.b2.a1.b1"' in dot
        assert 'label="T1"' in dot
