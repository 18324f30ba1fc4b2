"""Exact polynomial algebra: construction, division, modular inverses, integrals."""

from decimal import Context, Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussquad.ratpoly import RatPoly, mod_inverse_eval, poly_ext_gcd

F = Fraction

small_rationals = st.fractions(
    min_value=F(-8), max_value=F(8), max_denominator=12
)
coeff_lists = st.lists(small_rationals, min_size=0, max_size=7)


def poly(*coeffs):
    return RatPoly(coeffs)


class TestConstruction:
    def test_from_single_root(self):
        assert RatPoly.from_roots([F(1, 2)]) == poly(F(-1, 2), 1)

    def test_empty_product(self):
        assert RatPoly.from_roots([]) == RatPoly.one()

    def test_three_roots(self):
        got = RatPoly.from_roots([0, F(1, 2), 1])
        assert got == poly(0, F(1, 2), F(-3, 2), 1)

    def test_trailing_zeros_stripped(self):
        assert poly(1, 2, 0, 0) == poly(1, 2)
        assert poly(0, 0).is_zero

    @given(roots=st.lists(small_rationals, min_size=1, max_size=8))
    def test_roots_evaluate_to_zero(self, roots):
        p = RatPoly.from_roots(roots)
        assert p.leading == 1
        for r in roots:
            assert p.eval(r) == 0


class TestDivision:
    def test_exact_factor(self):
        q, r = poly(F(-1, 4), 0, 1).divrem(poly(F(-1, 2), 1))
        assert q == poly(F(1, 2), 1)
        assert r.is_zero

    def test_cube_by_linear(self):
        q, r = poly(0, 0, 0, 1).divrem(poly(-1, 1))
        assert q == poly(1, 1, 1)
        assert r == poly(1)

    def test_unit_divisor(self):
        f = poly(F(1, 3), -2, 5)
        q, r = f.divrem(RatPoly.one())
        assert q == f and r.is_zero

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            poly(1, 1).divrem(RatPoly.zero())

    @given(f=coeff_lists, g=coeff_lists)
    @settings(max_examples=80)
    def test_reconstruction(self, f, g):
        fp, gp = RatPoly(f), RatPoly(g)
        if gp.is_zero:
            return
        q, r = fp.divrem(gp)
        assert q * gp + r == fp
        assert r.degree < gp.degree


class TestDerivative:
    def test_linear(self):
        assert poly(F(-1, 2), 1).derivative() == RatPoly.one()

    def test_quadratic(self):
        assert poly(F(-1, 3), 0, 1).derivative() == poly(0, 2)

    def test_constant(self):
        assert poly(5).derivative().is_zero

    @given(f=coeff_lists, g=coeff_lists)
    def test_linearity(self, f, g):
        fp, gp = RatPoly(f), RatPoly(g)
        assert (fp + gp).derivative() == fp.derivative() + gp.derivative()


class TestEvaluation:
    def test_root_value(self):
        assert poly(F(-1, 2), 1).eval(F(1, 2)) == 0

    def test_direct_substitution(self):
        assert poly(F(-1, 3), 0, 1).eval(1) == F(2, 3)

    def test_odd_at_origin(self):
        assert poly(0, F(-3, 5), 0, 1).eval(0) == 0

    def test_eval_hp_matches_exact(self):
        p = poly(F(1, 6), -1, 1)
        with localcontext(Context(prec=50)):
            got = p.eval_hp(Decimal(1) / 3)
            want = p.eval(F(1, 3))
            err = abs(got - Decimal(want.numerator) / Decimal(want.denominator))
        assert err < Decimal("1e-45")


class TestIntegrals:
    @pytest.mark.parametrize("m", range(9))
    def test_unit_interval_monomials(self, m):
        mono = RatPoly([0] * m + [1])
        assert mono.integral_01() == F(1, m + 1)

    def test_odd_symmetry(self):
        assert RatPoly.identity().integral_pm1() == 0

    def test_square(self):
        assert poly(0, 0, 1).integral_pm1() == F(2, 3)


class TestModInverseEval:
    def test_identity_quotient(self):
        got = mod_inverse_eval(RatPoly.one(), RatPoly.one(), poly(F(-1, 3), 0, 1))
        assert got == RatPoly.one()

    def test_two_point_weight_function(self):
        # Node polynomial t^2 - t + 1/6 with split part t - 1/2: both weights 1/2.
        zetap = poly(F(1, 6), -1, 1)
        got = mod_inverse_eval(poly(F(-1, 2), 1), zetap.derivative(), zetap)
        assert got == poly(F(1, 2))

    def test_constant_ratio(self):
        got = mod_inverse_eval(RatPoly.identity(), poly(0, 2), poly(F(-1, 3), 0, 1))
        assert got == poly(F(1, 2))

    def test_shared_root_rejected(self):
        zeta = poly(F(-1, 2), 1)
        zetap = zeta * poly(1, 1)
        with pytest.raises(ValueError, match="shared|share"):
            mod_inverse_eval(RatPoly.one(), zeta, zetap)

    @given(
        zp_roots=st.lists(
            st.integers(min_value=-6, max_value=6).map(lambda k: F(k, 3)),
            min_size=1,
            max_size=3,
            unique=True,
        ),
        z_coeffs=st.lists(small_rationals, min_size=1, max_size=3),
        zeta_shift=st.integers(min_value=7, max_value=10),
    )
    @settings(max_examples=60)
    def test_agrees_with_quotient_at_roots(self, zp_roots, z_coeffs, zeta_shift):
        zetap = RatPoly.from_roots(zp_roots)
        # Roots of zeta sit far from every root of zetap, so they are coprime.
        zeta = RatPoly.from_roots([F(zeta_shift)])
        Z = RatPoly(z_coeffs)
        got = mod_inverse_eval(Z, zeta, zetap)
        assert got.degree < zetap.degree
        for r in zp_roots:
            assert got.eval(r) * zeta.eval(r) == Z.eval(r)


class TestExtGcd:
    @given(f=coeff_lists, g=coeff_lists)
    @settings(max_examples=60)
    def test_bezout_identity(self, f, g):
        fp, gp = RatPoly(f), RatPoly(g)
        d, s, t = poly_ext_gcd(fp, gp)
        assert s * fp + t * gp == d
        if not d.is_zero:
            assert d.leading == 1
            assert (fp % d).is_zero if not fp.is_zero else True
            assert (gp % d).is_zero if not gp.is_zero else True


class TestAffine:
    def test_square_bridge(self):
        # (2t-1)^2 = 4t^2 - 4t + 1
        assert poly(0, 0, 1).compose_affine(2, -1) == poly(1, -4, 4)

    def test_inverse_maps_compose(self):
        p = poly(F(1, 6), -1, 1)
        back = p.compose_affine(2, -1).compose_affine(F(1, 2), F(1, 2))
        assert back == p

    def test_format(self):
        assert poly(F(1, 6), -1, 1).format("t") == "t^2 - t + 1/6"
        assert RatPoly.zero().format() == "0"
        assert poly(0, F(-3, 5), 0, 1).format("u") == "u^3 - 3/5*u"
