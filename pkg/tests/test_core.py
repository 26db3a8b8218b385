import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagweak import (
    CapExceededError,
    ColoredPermutation,
    ContextMismatchError,
    GroupContext,
    ParseError,
    bar,
    compose,
    dual,
    enumerate_group,
    format_element,
    generator,
    generators,
    identity,
    inverse,
    mu0,
    parse_element,
    right_multiply,
    stats,
)
from flagweak.core import (
    GeneratorLabel,
    a,
    b,
    perm_compose,
    perm_descent_set,
    perm_inverse,
    perm_inversion_count,
)

from conftest import el


class TestContext:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            GroupContext(0, 2)
        with pytest.raises(ValueError):
            GroupContext(2, 0)

    def test_order(self):
        assert GroupContext(2, 3).order == 48
        assert GroupContext(3, 2).order == 18
        assert GroupContext(1, 4).order == 24

    def test_cap(self):
        with pytest.raises(CapExceededError):
            GroupContext(2, 3, cap=10)
        # cap does not affect equality
        assert GroupContext(2, 3, cap=100) == GroupContext(2, 3)


class TestWindowValidation:
    def test_bad_color(self, b2):
        with pytest.raises(ValueError):
            ColoredPermutation(b2, ((1, 0), (2, 2)))

    def test_not_a_permutation(self, b2):
        with pytest.raises(ValueError):
            ColoredPermutation(b2, ((1, 0), (1, 0)))

    def test_wrong_length(self, b2):
        with pytest.raises(ValueError):
            ColoredPermutation(b2, ((1, 0),))


class TestIdentity:
    def test_b2(self, b2):
        assert identity(b2).window == ((1, 0), (2, 0))
        assert identity(b2).finv == 0

    def test_single_letter(self):
        assert identity(GroupContext(3, 1)).window == ((1, 0),)

    def test_r1_is_symmetric_group(self):
        ctx = GroupContext(1, 3)
        assert identity(ctx).abs_seq == (1, 2, 3)
        assert all(c == 0 for c in identity(ctx).colors)


class TestCompose:
    def test_swap_squared_is_two_bumps(self, b2):
        a1 = generator(b2, a(1))
        assert compose(a1, a1) == el(b2, "-1,-2")
        b1b2 = compose(generator(b2, b(1)), generator(b2, b(2)))
        assert compose(a1, a1) == b1b2

    def test_identity_neutral(self, b2):
        for h in enumerate_group(b2):
            assert compose(identity(b2), h) == h
            assert compose(h, identity(b2)) == h

    def test_specific_product(self, b2):
        assert compose(el(b2, "-2,1"), el(b2, "2,-1")) == identity(b2)

    def test_context_mismatch(self, b2, b3):
        with pytest.raises(ContextMismatchError):
            compose(identity(b2), identity(b3))

    def test_matches_signed_function_composition(self, b3):
        # for two colors, the product must be composition of signed maps
        def apply(g, x):
            v, c = g.window[abs(x) - 1]
            y = -v if c else v
            return -y if x < 0 else y

        rng = random.Random(7)
        elems = list(enumerate_group(b3))
        for _ in range(200):
            g, h = rng.choice(elems), rng.choice(elems)
            gh = compose(g, h)
            for x in range(1, 4):
                assert apply(gh, x) == apply(g, apply(h, x))

    def test_associativity_exhaustive_small(self):
        for ctx in (GroupContext(2, 2), GroupContext(3, 1), GroupContext(1, 3)):
            elems = list(enumerate_group(ctx))
            for x, y, z in itertools.product(elems, repeat=3):
                assert compose(compose(x, y), z) == compose(x, compose(y, z))

    def test_group_axioms_sampled_small_groups(self):
        rng = random.Random(3)
        for r in (1, 2, 3):
            for n in (1, 2, 3):
                ctx = GroupContext(r, n)
                elems = list(enumerate_group(ctx))
                e = identity(ctx)
                for _ in range(200):
                    x, y, z = (rng.choice(elems) for _ in range(3))
                    assert compose(compose(x, y), z) == compose(x, compose(y, z))
                    assert compose(x, e) == x and compose(e, x) == x
                    assert compose(x, inverse(x)) == e

    def test_group_axioms_random_triples(self):
        # 10^4 seeded random triples at four colors, five letters
        ctx = GroupContext(4, 5)
        rng = random.Random(20110923)

        def rand_elem():
            perm = list(range(1, 6))
            rng.shuffle(perm)
            return ColoredPermutation(
                ctx, tuple((v, rng.randrange(4)) for v in perm)
            )

        e = identity(ctx)
        for _ in range(10**4):
            x, y, z = rand_elem(), rand_elem(), rand_elem()
            assert compose(compose(x, y), z) == compose(x, compose(y, z))
            assert compose(x, inverse(x)) == e
            assert compose(inverse(x), x) == e


class TestInverse:
    def test_specific(self, b2):
        assert inverse(el(b2, "-2,1")) == el(b2, "2,-1")

    def test_identity(self, b2):
        assert inverse(identity(b2)) == identity(b2)

    def test_bumps_are_involutions_two_colors(self, b3):
        for i in (1, 2, 3):
            bi = generator(b3, b(i))
            assert inverse(bi) == bi

    def test_two_sided(self, g32):
        for g in enumerate_group(g32):
            assert compose(g, inverse(g)) == identity(g32)
            assert compose(inverse(g), g) == identity(g32)

    def test_signed_functional_inverse(self, b3):
        def apply(g, x):
            v, c = g.window[abs(x) - 1]
            y = -v if c else v
            return -y if x < 0 else y

        for g in enumerate_group(b3):
            gi = inverse(g)
            for x in list(range(1, 4)) + [-1, -2, -3]:
                assert apply(g, apply(gi, x)) == x


class TestStats:
    def test_specific(self, b2):
        s = stats(el(b2, "-2,1"))
        assert s.inv == 1 and s.color_sum == 1 and s.finv == 3
        assert s.inv_set == {(1, 2)}
        assert s.descent_set == {1}

    def test_identity_all_zero(self, b3):
        s = stats(identity(b3))
        assert s.inv == 0 and s.color_sum == 0 and s.finv == 0
        assert not s.inv_set and not s.descent_set

    def test_top_rank_is_n_squared(self):
        for n in (2, 3, 4):
            ctx = GroupContext(2, n)
            assert mu0(ctx).finv == n * n

    def test_finv_identity_everywhere(self, b3, g32):
        for ctx in (b3, g32):
            for g in enumerate_group(ctx):
                s = stats(g)
                assert s.finv == ctx.r * s.inv + s.color_sum == g.finv


class TestGenerators:
    def test_a1_in_b3(self, b3):
        assert generator(b3, a(1)) == el(b3, "-2,1,3")

    def test_b2_in_b3(self, b3):
        assert generator(b3, b(2)) == el(b3, "1,-2,3")

    def test_bump_order_r(self):
        ctx = GroupContext(3, 2)
        b1 = generator(ctx, b(1))
        cube = compose(compose(b1, b1), b1)
        assert cube == identity(ctx)
        assert compose(b1, b1) != identity(ctx)

    def test_index_out_of_range(self, b2):
        with pytest.raises(ValueError):
            generator(b2, a(2))
        with pytest.raises(ValueError):
            generator(b2, b(3))

    def test_label_validation(self):
        with pytest.raises(ValueError):
            GeneratorLabel("c", 1)
        with pytest.raises(ValueError):
            GeneratorLabel("a", 0)

    def test_generating_set_layout(self, b3):
        labels = [lab for lab, _ in generators(b3)]
        assert labels == [a(1), a(2), b(1), b(2), b(3)]

    def test_r1_swaps_are_plain(self):
        ctx = GroupContext(1, 3)
        assert generator(ctx, a(1)).abs_seq == (2, 1, 3)
        assert generator(ctx, b(2)) == identity(ctx)


class TestRightMultiply:
    def test_red_edge(self, b2):
        assert right_multiply(el(b2, "1,-2"), a(1)) == el(b2, "2,1")

    def test_black_edge(self, b2):
        assert right_multiply(identity(b2), b(1)) == el(b2, "-1,2")

    def test_double_bump_three_colors(self):
        ctx = GroupContext(3, 1)
        g = right_multiply(right_multiply(identity(ctx), b(1)), b(1))
        assert g.window == ((1, 2),)

    def test_agrees_with_compose(self, b3):
        for g in enumerate_group(b3):
            for lab, gen in generators(b3):
                assert right_multiply(g, lab) == compose(g, gen)


class TestDual:
    def test_dual_of_identity_is_top(self, b2):
        assert dual(identity(b2)) == mu0(b2)
        assert mu0(b2) == el(b2, "-2,-1")
        assert mu0(b2).finv == 4

    def test_specific(self, b2):
        d = dual(el(b2, "-1,2"))
        assert d == el(b2, "-2,1")
        assert d.finv == 3

    def test_bar_identity_for_two_colors(self, b3):
        for g in enumerate_group(b3):
            assert bar(g) == g

    def test_involution_and_rank_complement(self):
        for r, n in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]:
            ctx = GroupContext(r, n)
            top = mu0(ctx).finv
            for g in enumerate_group(ctx):
                d = dual(g)
                assert dual(d) == g
                assert g.finv + d.finv == top


class TestEnumerate:
    @pytest.mark.parametrize(
        "r,n,count", [(2, 2, 8), (1, 3, 6), (3, 2, 18), (2, 3, 48)]
    )
    def test_counts(self, r, n, count):
        elems = list(enumerate_group(GroupContext(r, n)))
        assert len(elems) == count
        assert len(set(elems)) == count

    def test_order_is_sorted(self, g32):
        keys = [g.sort_key for g in enumerate_group(g32)]
        assert keys == sorted(keys)

    def test_starts_at_identity(self, b3):
        assert next(iter(enumerate_group(b3))) == identity(b3)


class TestGrammar:
    def test_caret_roundtrip(self, g32):
        for g in enumerate_group(g32):
            assert parse_element(g32, format_element(g)) == g

    def test_signed_roundtrip(self, b3):
        for g in enumerate_group(b3):
            assert parse_element(b3, format_element(g, signed=True)) == g

    def test_compact_forms(self, b2, b3):
        assert parse_element(b2, "12") == identity(b2)
        assert parse_element(b3, "2̄13") == el(b3, "-2,1,3")
        assert parse_element(b2, "-2-1") == mu0(b2)

    def test_signed_output_needs_two_colors(self, g32):
        with pytest.raises(ValueError):
            format_element(identity(g32), signed=True)

    @pytest.mark.parametrize(
        "bad", ["", "1^2,2^0", "1,1", "3,2", "x,y", "1^0", "-1,2,3", "1^-1,2^0"]
    )
    def test_rejects(self, b2, bad):
        with pytest.raises(ParseError):
            parse_element(b2, bad)

    @given(st.data())
    @settings(max_examples=100, deadline=None)
    def test_roundtrip_property(self, data):
        r = data.draw(st.integers(1, 4))
        n = data.draw(st.integers(1, 5))
        ctx = GroupContext(r, n)
        perm = data.draw(st.permutations(list(range(1, n + 1))))
        cols = data.draw(st.lists(st.integers(0, r - 1), min_size=n, max_size=n))
        g = ColoredPermutation(ctx, tuple(zip(perm, cols)))
        assert parse_element(ctx, format_element(g)) == g
        if r == 2:
            assert parse_element(ctx, format_element(g, signed=True)) == g


class TestPermHelpers:
    def test_inverse(self):
        assert perm_inverse((2, 3, 1)) == (3, 1, 2)

    def test_compose(self):
        assert perm_compose((2, 1, 3), (3, 2, 1)) == (3, 1, 2)

    def test_counts(self):
        assert perm_inversion_count((3, 2, 1)) == 3
        assert perm_descent_set((2, 1, 3)) == {1}
