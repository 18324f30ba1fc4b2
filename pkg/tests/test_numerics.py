"""Scalar layer: exact rational ops, decimal ln/log10, conversions, rendering."""

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussquad.numerics import (
    DEFAULT_PRECISION,
    format_fixed,
    format_sig,
    hp_ln,
    hp_log10_scaled,
    rat_arith,
    resolve_precision,
    to_hp,
)
from oracles import LN_2, LN_100000, LOG10_SCALED_HALF

nonzero_rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=997
).filter(lambda f: f != 0)
rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=997
)


class TestRatArith:
    def test_addition(self):
        assert rat_arith(Fraction(1, 3), Fraction(1, 6), "+") == Fraction(1, 2)

    def test_cf_term_product(self):
        assert rat_arith(Fraction(1, 3), Fraction(4, 15), "*") == Fraction(4, 45)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            rat_arith(Fraction(1, 2), Fraction(0), "/")

    def test_unicode_aliases(self):
        assert rat_arith(1, 2, "×") == 2
        assert rat_arith(1, 2, "÷") == Fraction(1, 2)
        assert rat_arith(1, 2, "−") == -1

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            rat_arith(1, 2, "%")

    @given(a=rationals, b=rationals)
    def test_add_then_subtract_is_identity(self, a, b):
        assert rat_arith(rat_arith(a, b, "+"), b, "-") == a

    @given(a=nonzero_rationals)
    def test_multiply_by_reciprocal(self, a):
        assert rat_arith(a, 1 / a, "*") == 1


class TestHpLn:
    def test_ln_one_is_zero(self):
        assert hp_ln(1) == 0

    def test_ln_1e5_against_frozen_digits(self):
        assert abs(hp_ln(100000) - LN_100000) < Decimal("1e-44")

    def test_ln_2(self):
        assert abs(hp_ln(2) - LN_2) < Decimal("1e-44")

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            hp_ln(0)
        with pytest.raises(ValueError):
            hp_ln(-3)

    def test_fraction_input(self):
        # ln(1/2) = -ln 2
        assert abs(hp_ln(Fraction(1, 2)) + LN_2) < Decimal("1e-44")

    @settings(max_examples=40, deadline=None)
    @given(
        x=st.integers(min_value=1, max_value=10**6),
        y=st.integers(min_value=1, max_value=10**6),
    )
    def test_product_rule(self, x, y):
        from decimal import Context, localcontext

        p = DEFAULT_PRECISION
        with localcontext(Context(prec=p + 10)):
            lhs = hp_ln(x * y, p)
            rhs = hp_ln(x, p) + hp_ln(y, p)
            bound = Decimal(1).scaleb(-(p - 6)) * max(abs(lhs), abs(rhs), Decimal(1))
            assert abs(lhs - rhs) <= bound


class TestLog10Scaled:
    def test_unit_weight(self):
        assert hp_log10_scaled(1) == 9

    def test_half_weight_against_frozen_digits(self):
        assert abs(hp_log10_scaled(Fraction(1, 2)) - LOG10_SCALED_HALF) < Decimal("1e-40")

    def test_cancellation_case(self):
        assert abs(hp_log10_scaled(Fraction(1, 10**9))) < Decimal("1e-35")

    def test_domain_error(self):
        with pytest.raises(ValueError):
            hp_log10_scaled(0)


class TestConversion:
    def test_third_round_trip(self):
        x = to_hp(Fraction(1, 3), 50)
        assert abs(x * 3 - 1) <= Decimal("1e-48")

    def test_int_exact(self):
        assert to_hp(7) == 7

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            resolve_precision(39)
        with pytest.raises(ValueError):
            hp_ln(2, prec=10)

    @given(a=rationals)
    @settings(max_examples=60, deadline=None)
    def test_conversion_close_to_exact(self, a):
        x = to_hp(a, 50)
        err = abs(Fraction(x) - a)
        assert err <= abs(a) * Fraction(1, 10**49) if a else err == 0


class TestRendering:
    @pytest.mark.parametrize(
        "value, sig, expected",
        [
            (Decimal("0.5"), 16, "0.5000000000000000"),
            (Decimal(1), 16, "1.000000000000000"),
            (Decimal(9), 10, "9.000000000"),
            (Decimal("0.57735026918962576450914878"), 16, "0.5773502691896258"),
            (Decimal("-0.57735026918962576450914878"), 16, "-0.5773502691896258"),
            (Decimal("8.6989700043360188"), 10, "8.698970004"),
            (Decimal(0), 16, "0.0000000000000000"),
            (Decimal("0.99999999"), 4, "1.000"),
            (Decimal("1.489734e-16"), 10, "1.489734000E-16"),
            (Decimal("12345.678"), 4, "12350"),
        ],
    )
    def test_format_sig(self, value, sig, expected):
        assert format_sig(value, sig) == expected

    def test_format_fixed(self):
        assert format_fixed(Decimal("8390.39460796686"), 6) == "8390.394608"
        assert format_fixed(Decimal("8406.2431208437"), 7) == "8406.2431208"
        assert format_fixed(Decimal("1.25"), 1) == "1.2"  # half-even
