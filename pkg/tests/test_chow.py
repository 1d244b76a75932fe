import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cicy_bundles import (
    ALL_CONTEXTS,
    QUINTIC,
    X24,
    X33,
    X223,
    X2222,
    CicyContext,
    NotInvertibleError,
    TruncatedClass,
    chern_from_resolution,
    chern_of_extension,
    chi_rank2,
    context_from_label,
    h0_line_bundle,
    max_rank_no_trivial,
    ring_invert,
    ring_mul,
    twist_rank2,
)


def cls(*coeffs):
    return TruncatedClass.of(*coeffs)


rationals = st.fractions(min_value=-10, max_value=10).map(Fraction)
units = st.tuples(
    st.fractions(min_value=-10, max_value=10).filter(lambda x: x != 0),
    rationals, rationals, rationals,
).map(lambda t: TruncatedClass(tuple(Fraction(c) for c in t)))


class TestContexts:
    def test_the_five(self):
        data = {
            (5,): (4, 5, 1),
            (2, 4): (5, 8, 2),
            (3, 3): (5, 9, 2),
            (2, 2, 3): (6, 12, 3),
            (2, 2, 2, 2): (7, 16, 4),
        }
        for md, (n, u, v) in data.items():
            ctx = CicyContext(md)
            assert (ctx.ambient_dim, ctx.u, ctx.v) == (n, u, v)
            assert ctx.v + 4 == ctx.ambient_dim + 1

    def test_strict_rejects_unknown(self):
        with pytest.raises(ValueError, match="valid multidegrees"):
            CicyContext((7,))
        with pytest.raises(ValueError, match="valid multidegrees"):
            CicyContext((2, 2, 4))

    def test_lax_accepts_cy_with_warning(self):
        with pytest.warns(UserWarning):
            ctx = CicyContext((1, 5), strict=False)
        assert ctx.u == 5

    def test_lax_rejects_non_cy(self):
        with pytest.raises(ValueError, match="not Calabi-Yau"):
            CicyContext((3, 4), strict=False)

    def test_labels_and_aliases(self):
        assert context_from_label("2,4") == X24
        assert context_from_label("X9") == X33
        assert context_from_label("X12") == X223
        assert context_from_label(" 2, 2, 2, 2 ") == X2222


class TestRing:
    def test_binomial_square(self):
        assert cls(1, 1) * cls(1, 1) == cls(1, 2, 1)

    def test_unit(self):
        x = cls(3, -1, 7, 2)
        assert ring_mul(TruncatedClass.unit(), x) == x

    def test_geometric_series(self):
        assert ring_mul(cls(1, 2, 4, 8), cls(1, -2)) == TruncatedClass.unit()
        assert ring_invert(cls(1, -2)) == cls(1, 2, 4, 8)
        assert ring_invert(cls(1, -1)) == cls(1, 1, 1, 1)
        assert ring_invert(TruncatedClass.unit()) == TruncatedClass.unit()

    def test_not_invertible(self):
        with pytest.raises(NotInvertibleError, match="not invertible"):
            ring_invert(cls(0, 1))

    @given(units)
    def test_inverse_roundtrip(self, x):
        assert ring_mul(x, ring_invert(x)) == TruncatedClass.unit()
        assert ring_mul(ring_invert(x), x) == TruncatedClass.unit()

    @given(units, units)
    def test_commutative(self, x, y):
        assert ring_mul(x, y) == ring_mul(y, x)

    @given(units, units, units)
    def test_associative(self, x, y, z):
        assert ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z))


class TestChi:
    @pytest.mark.parametrize("ctx, expected", [
        (QUINTIC, 5), (X24, 6), (X33, 6), (X223, 7), (X2222, 8),
    ])
    def test_hyperplane_oracle(self, ctx, expected):
        assert chi_rank2(ctx, 1, 0) == expected == ctx.ambient_dim + 1

    @pytest.mark.parametrize("ctx", ALL_CONTEXTS)
    def test_trivial(self, ctx):
        assert chi_rank2(ctx, 0, 0) == 0

    def test_twisted_pair(self):
        assert chi_rank2(QUINTIC, 2, 5) == 10
        # twice the section count of O(1)
        assert chi_rank2(QUINTIC, 2, 5) == 2 * h0_line_bundle(QUINTIC, 1)

    def test_exact_rational(self):
        value = chi_rank2(X33, 1, 1)
        assert isinstance(value, Fraction)
        assert value == Fraction(11, 2)


class TestResolutions:
    def test_quintic_cases(self):
        inv = chern_from_resolution([-2], [0, 0, 0, 0], QUINTIC)
        assert (inv.rank, inv.c1, inv.c2) == (3, 2, 20)
        inv = chern_from_resolution([-1], [0, 0, 0, 0, 0], QUINTIC)
        assert (inv.rank, inv.c1, inv.c2) == (4, 1, 5)
        inv = chern_from_resolution([-1], [0, 0, 0, 1], QUINTIC)
        assert (inv.rank, inv.c1, inv.c2) == (3, 2, 10)

    def test_trivial_bundle(self):
        inv = chern_from_resolution([], [0, 0], X223)
        assert (inv.rank, inv.c1, inv.c2) == (2, 0, 0)

    @pytest.mark.parametrize("r", range(1, 6))
    def test_trivial_any_rank(self, r):
        inv = chern_from_resolution([], [0] * r, X24)
        assert (inv.rank, inv.c1, inv.c2) == (r, 0, 0)

    def test_rank_guard(self):
        with pytest.raises(ValueError, match="rank"):
            chern_from_resolution([0, 0], [0], QUINTIC)

    def test_c1_additivity(self):
        rng = random.Random(3)
        for _ in range(300):
            sub = [rng.randint(-3, -1) for _ in range(rng.randint(0, 2))]
            quot = [rng.randint(-2, 3) for _ in range(len(sub) + rng.randint(1, 4))]
            inv = chern_from_resolution(sub, quot, X33)
            assert inv.c1 == sum(quot) - sum(sub)


class TestExtensionsAndTwists:
    def test_extension_examples(self):
        assert chern_of_extension(1, 1, 3, X24).as_pair() == (2, 11)
        assert chern_of_extension(0, 2, 16, X33).as_pair() == (2, 16)
        assert chern_of_extension(1, 1, 0, QUINTIC).as_pair() == (2, 5)

    def test_twist_examples(self):
        assert twist_rank2(2, 10, -1, QUINTIC) == (0, 5)
        assert twist_rank2(4, -3, 0, X223) == (4, -3)
        assert twist_rank2(0, 0, 1, X24) == (2, 8)

    @given(st.integers(-5, 5), st.integers(-50, 50), st.integers(-4, 4),
           st.sampled_from(ALL_CONTEXTS))
    def test_twist_roundtrip(self, c1, c2, t, ctx):
        assert twist_rank2(*twist_rank2(c1, c2, t, ctx), -t, ctx) == (c1, c2)


class TestSections:
    def test_anchors(self):
        assert h0_line_bundle(QUINTIC, 2) == 15
        assert h0_line_bundle(X24, 1) == 6
        assert h0_line_bundle(X33, 0) == 1
        assert h0_line_bundle(X2222, -2) == 0

    @pytest.mark.parametrize("ctx", ALL_CONTEXTS)
    def test_linear_forms_restrict(self, ctx):
        assert h0_line_bundle(ctx, 1) == ctx.ambient_dim + 1

    def test_max_rank(self):
        assert max_rank_no_trivial([-2], QUINTIC) == 14
        assert max_rank_no_trivial([-1, -1], QUINTIC) == 8
        assert max_rank_no_trivial([-1], QUINTIC) == 4

    def test_max_rank_guard(self):
        with pytest.raises(ValueError, match="negative"):
            max_rank_no_trivial([1], QUINTIC)
