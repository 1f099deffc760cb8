import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_poly
from reesdeg.ring import (
    FieldSpec,
    Poly,
    RingCtx,
    RingError,
    format_poly,
    format_ring_header,
    fresh_names,
    monomial_compare,
    monomial_div,
    monomial_lcm,
    monomials_of_degree,
    parse_poly,
    parse_ring_header,
    poly_exact_div,
)

QQ = FieldSpec(0)
FP = FieldSpec(32003)


def ctx3(field=QQ, order="grevlex"):
    return RingCtx(("x0", "x1", "x2"), field, order=order)


class TestFieldSpec:
    def test_rational_norm(self):
        assert QQ.norm(3) == Fraction(3)
        assert QQ.norm(Fraction(2, 4)) == Fraction(1, 2)

    def test_prime_norm_wraps(self):
        f = FieldSpec(7)
        assert f.norm(9) == 2
        assert f.norm(-1) == 6
        assert f.norm(Fraction(1, 2)) == f.div(1, 2)

    def test_inverse(self):
        f = FieldSpec(7)
        for a in range(1, 7):
            assert f.mul(a, f.inv(a)) == 1
        assert QQ.inv(Fraction(3, 5)) == Fraction(5, 3)

    def test_bad_characteristic(self):
        with pytest.raises(RingError):
            FieldSpec(6)
        with pytest.raises(RingError):
            FieldSpec(2**31 - 1 + 2)

    def test_zero_inverse(self):
        with pytest.raises(ZeroDivisionError):
            FieldSpec(7).inv(0)
        with pytest.raises(ZeroDivisionError):
            QQ.inv(0)


class TestOrders:
    def test_grevlex_degree_two_ranking(self):
        # Oracle: enumerate every degree-2 monomial and sort by the order key.
        ctx = ctx3()
        mons = list(monomials_of_degree(3, 2))
        ranked = sorted(mons, key=ctx.key, reverse=True)
        names = ["*".join([("x%d" % i)] * e if e > 1 else ["x%d" % i] * e)
                 for m in ranked for i, e in enumerate(m) if e]
        # x0^2 > x0*x1 > x1^2 > x0*x2 > x1*x2 > x2^2
        assert ranked == [
            (2, 0, 0), (1, 1, 0), (0, 2, 0),
            (1, 0, 1), (0, 1, 1), (0, 0, 2),
        ]
        assert names  # silence lint on the readable spelling above

    def test_grevlex_degree_first(self):
        ctx = ctx3()
        assert ctx.key((0, 0, 2)) > ctx.key((1, 0, 0))

    def test_lex_ignores_degree(self):
        ctx = ctx3(order="lex")
        assert ctx.key((1, 0, 0)) > ctx.key((0, 5, 5))

    def test_block_order_eliminates_front(self):
        ctx = ctx3(order=("block", 1))
        # any monomial containing x0 beats any x0-free monomial
        assert ctx.key((1, 0, 0)) > ctx.key((0, 9, 9))
        # within the x0-free block the comparison is grevlex
        assert ctx.key((0, 2, 0)) > ctx.key((0, 1, 1))

    def test_monomial_compare_consistent(self):
        ctx = ctx3()
        assert monomial_compare((1, 1, 0), (0, 2, 0), ctx) > 0
        assert monomial_compare((0, 0, 1), (0, 0, 1), ctx) == 0


class TestMonomials:
    def test_div_and_lcm(self):
        assert monomial_div((3, 1, 0), (1, 1, 0)) == (2, 0, 0)
        assert monomial_div((1, 0, 0), (0, 1, 0)) is None
        assert monomial_lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)

    def test_monomials_of_degree_count(self):
        for n in (1, 2, 3):
            for d in range(5):
                mons = list(monomials_of_degree(n, d))
                assert len(mons) == math.comb(d + n - 1, n - 1)
                assert len(set(mons)) == len(mons)
                assert all(sum(m) == d for m in mons)


class TestPolyArithmetic:
    def test_zero_terms_dropped(self):
        ctx = ctx3()
        f = Poly(ctx, {(1, 0, 0): 1, (0, 1, 0): 0})
        assert f.terms == {(1, 0, 0): Fraction(1)}

    def test_add_cancels(self):
        ctx = ctx3()
        x = Poly.var(ctx, 0)
        assert not (x - x)
        assert (x + x).terms == {(1, 0, 0): Fraction(2)}

    def test_product_example(self):
        ctx = ctx3()
        f = parse_poly("x0 + x1", ctx)
        g = parse_poly("x0 - x1", ctx)
        assert f * g == parse_poly("x0^2 - x1^2", ctx)

    def test_char_p_wraps_in_product(self):
        ctx = ctx3(FieldSpec(7))
        f = parse_poly("3*x0", ctx)
        assert (f * f) == parse_poly("2*x0^2", ctx)

    def test_pow(self):
        ctx = ctx3()
        f = parse_poly("x0 + x1", ctx)
        assert f.pow(3) == parse_poly("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", ctx)
        assert f.pow(0) == Poly.constant(ctx, 1)

    def test_lt_is_max(self):
        ctx = ctx3()
        f = parse_poly("x2^2 + x0*x1", ctx)
        assert f.lm() == (1, 1, 0)

    def test_evaluate(self):
        ctx = ctx3()
        f = parse_poly("x0^2 + 2*x1*x2", ctx)
        assert f.evaluate([1, 2, 3]) == Fraction(13)

    def test_is_homogeneous(self):
        ctx = ctx3()
        assert parse_poly("x0^2 + x1*x2", ctx).is_homogeneous()
        assert not parse_poly("x0^2 + x1", ctx).is_homogeneous()
        assert Poly.zero(ctx).is_homogeneous()

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**30), st.sampled_from([0, 7, 32003]))
    def test_ring_laws_random(self, seed, char):
        import random

        rng = random.Random(seed)
        ctx = ctx3(FieldSpec(char))
        f = random_poly(ctx, rng)
        g = random_poly(ctx, rng)
        h = random_poly(ctx, rng)
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + Poly.zero(ctx) == f
        assert f * Poly.constant(ctx, 1) == f


class TestExactDivision:
    def test_divides(self):
        ctx = ctx3()
        f = parse_poly("x0^2 - x1^2", ctx)
        g = parse_poly("x0 - x1", ctx)
        assert poly_exact_div(f, g) == parse_poly("x0 + x1", ctx)

    def test_zero_numerator(self):
        ctx = ctx3()
        g = parse_poly("x0 - x1", ctx)
        assert not poly_exact_div(Poly.zero(ctx), g)

    def test_remainder_raises(self):
        ctx = ctx3()
        with pytest.raises(RingError):
            poly_exact_div(parse_poly("x0^2 + 1", ctx), parse_poly("x0 - x1", ctx))

    def test_random_products_divide_back(self):
        import random

        rng = random.Random(5)
        for _ in range(40):
            ctx = ctx3(FieldSpec(rng.choice([0, 7, 32003])))
            f = random_poly(ctx, rng)
            g = random_poly(ctx, rng)
            if not g:
                continue
            assert poly_exact_div(f * g, g) == f


class TestParseFormat:
    def test_known_strings(self):
        ctx = ctx3()
        cases = [
            "x0^2 - x1*x2",
            "2*x0^3 + x1 - 5",
            "-x0 + 1/2*x1",
            "x2",
            "0",
            "7",
        ]
        for text in cases:
            f = parse_poly(text, ctx)
            assert parse_poly(format_poly(f), ctx) == f

    def test_fp_normalized_output(self):
        ctx = ctx3(FP)
        f = parse_poly("-x0 - 16001*x1", ctx)
        assert format_poly(f) == "32002*x0 + 16002*x1"

    def test_parenthesis_free_grammar_rejects_garbage(self):
        ctx = ctx3()
        for bad in ("x0 +", "y3", "x0^^2", "x0**2", "(x0)"):
            with pytest.raises(RingError):
                parse_poly(bad, ctx)

    def test_round_trip_random(self):
        import random

        rng = random.Random(11)
        for _ in range(60):
            ctx = ctx3(FieldSpec(rng.choice([0, 7, 32003])))
            f = random_poly(ctx, rng)
            assert parse_poly(format_poly(f), ctx) == f

    def test_format_orders_terms_descending(self):
        ctx = ctx3()
        f = parse_poly("x2 + x0^2 + x1*x2", ctx)
        assert format_poly(f) == "x0^2 + x1*x2 + x2"


class TestRingHeader:
    def test_round_trip_plain(self):
        ctx = ctx3(FP)
        line = format_ring_header(ctx)
        assert parse_ring_header(line) == ctx

    def test_round_trip_params_and_orders(self):
        for order in ("grevlex", "lex", ("block", 2)):
            ctx = RingCtx(
                ("x0", "x1", "x2", "a"),
                QQ,
                order=order,
                n_params=1,
            )
            assert parse_ring_header(format_ring_header(ctx)) == ctx

    def test_parse_example(self):
        ctx = parse_ring_header("ring x0 x1 x2 over 32003 order grevlex")
        assert ctx.var_names == ("x0", "x1", "x2")
        assert ctx.field.characteristic == 32003

    def test_bad_header(self):
        with pytest.raises(RingError):
            parse_ring_header("ring over 7")
        with pytest.raises(RingError):
            parse_ring_header("x0 x1 over 7")


class TestSubstitution:
    def test_substitute_tail_params(self):
        full = RingCtx(("x", "y", "a"), QQ, n_params=1)
        small = RingCtx(("x", "y"), QQ)
        f = parse_poly("a*x^2 + y^2 + a", full)
        g = f.substitute_tail(small, [3])
        assert g == parse_poly("3*x^2 + y^2 + 3", small)

    def test_map_vars_embedding(self):
        small = RingCtx(("x", "y"), QQ)
        big = RingCtx(("t", "x", "y"), QQ)
        f = parse_poly("x^2 - y", small)
        g = f.map_vars(big, [1, 2])
        assert g == parse_poly("x^2 - y", big)


def test_fresh_names_avoid_collisions():
    names = fresh_names("y", 3, {"y0", "x0"})
    assert len(names) == 3
    assert "y0" not in names
    assert len(set(names)) == 3
