import math
from fractions import Fraction

import pytest

from apostolb import (
    DEFAULT_RING,
    ApostolError,
    CorruptedSource,
    FamilySource,
    FamilySpec,
    KernelSpec,
    PoleError,
    TruncSeries,
    UFactory,
    apostol_bernoulli_number,
    apostol_bernoulli_number_closed,
    apostol_genocchi,
    bernoulli_number,
    bernoulli_polynomial,
    cs_closed_form,
    family_poly,
    family_series,
    general_t_poly,
    parse_poly,
    u_factory,
)
from apostolb.families import CLOSED_FORM_NOTES, closed_form_latex
from apostolb.fps import cos_sin_zt, exp_poly, extract_family, series_invert

from oracles import apostol_polynomial, to_poly

R = DEFAULT_RING
x, y, z = R.var("x"), R.var("y"), R.var("z")
ALL_U = [u_factory("one"), u_factory("gh", 2), u_factory("gh", 3), u_factory("ha"),
         u_factory("ha", appell="genocchi"), u_factory("ml", 0), u_factory("ml", 1),
         u_factory("ml", 2, reciprocal=True), u_factory("te", 1), u_factory("te", 2)]


def fam(v=1, lam=1, mu=-1, u=None, trig="none"):
    return FamilySpec(KernelSpec(v, lam, mu), u or u_factory("one"), trig)


class TestBernoulli:
    # listed values of B_0 .. B_18
    LISTED = {0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
              6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66),
              12: Fraction(-691, 2730), 14: Fraction(7, 6), 16: Fraction(-3617, 510),
              18: Fraction(43867, 798)}

    def test_numbers(self):
        for n in range(19):
            assert bernoulli_number(n) == self.LISTED.get(n, 0), n

    def test_polynomials(self):
        listed = ["1", "x - 1/2", "x^2 - x + 1/6", "x^3 - 3/2*x^2 + 1/2*x", "x^4 - 2*x^3 + x^2 - 1/30"]
        assert [bernoulli_polynomial(n) for n in range(5)] == [parse_poly(t, R) for t in listed]


class TestApostolClosedForms:
    @pytest.mark.parametrize("lam", [2, 3, Fraction(1, 2), -1, Fraction(5, 3)])
    def test_match_series(self, lam):
        for n in range(6):
            assert apostol_bernoulli_number_closed(n, lam) == apostol_bernoulli_number(n, lam)

    def test_values_at_two(self):
        assert [apostol_bernoulli_number_closed(n, 2) for n in range(6)] == [0, 1, -4, 18, -104, 750]

    def test_pole(self):
        with pytest.raises(PoleError):
            apostol_bernoulli_number_closed(2, 1)

    def test_fourth_sign(self):
        # -4 lam (lam^2 + 4 lam + 1)/(lam - 1)^4 at lam = 3 is -264/16
        assert apostol_bernoulli_number_closed(4, 3) == Fraction(-4 * 3 * 22, 16)
        assert 4 in CLOSED_FORM_NOTES

    def test_latex(self):
        assert closed_form_latex(1) == r"\frac{1}{\lambda-1}"
        assert closed_form_latex(2) == r"\frac{-2 \lambda}{(\lambda-1)^{2}}"

    def test_lambda_one_is_bernoulli(self):
        assert [apostol_bernoulli_number(n, 1) for n in range(8)] == [bernoulli_number(n) for n in range(8)]


class TestUFactory:
    def test_miller_lee_coefficients(self):
        s = u_factory("miller-lee", 1).series(4)
        assert list(s.coeffs) == [R.const(c) for c in (1, -2, 1, 0, 0)]

    def test_reciprocal(self):
        a = u_factory("ml", 2).series(6)
        b = u_factory("ml", 2, reciprocal=True).series(6)
        assert a * b == TruncSeries.one(6)

    def test_gould_hopper_t_poly(self):
        for n in range(8):
            expected = sum((MultiPoly_mono(n, k) for k in range(n // 2 + 1)), R.zero)
            assert general_t_poly(u_factory("gh", 2), n) == expected

    @pytest.mark.parametrize("u", ALL_U, ids=lambda u: u.label)
    def test_log_derivative(self, u):
        s = u.series(9)
        assert u.log_derivative(8) == s.derivative() * series_invert(s).truncate(8)

    def test_uses_y(self):
        assert u_factory("gh", 2).uses_y and not u_factory("ml", 1).uses_y

    @pytest.mark.parametrize("bad", [
        lambda: UFactory("gould-hopper", 0),
        lambda: UFactory("miller-lee", -1),
        lambda: UFactory("one", 2),
        lambda: u_factory("gh", 2, appell="genocchi"),
        lambda: u_factory("te", 1, reciprocal=True),
        lambda: u_factory("laguerre"),
    ])
    def test_invalid(self, bad):
        with pytest.raises(ApostolError):
            bad()


def MultiPoly_mono(n, k):
    from apostolb import MultiPoly

    c = Fraction(math.factorial(n), math.factorial(k) * math.factorial(n - 2 * k))
    return MultiPoly.monomial(R, {"x": n - 2 * k, "y": k}, c)


class TestWorkedValues:
    def test_cos_kind(self):
        assert family_poly(fam(trig="cos"), 2) == parse_poly("x^2 - z^2 - x + 1/6", R)

    def test_sin_kind(self):
        assert family_poly(fam(trig="sin"), 2) == 2 * x * z - z

    def test_gould_hopper_cos(self):
        p = family_poly(fam(u=u_factory("gh", 2), trig="cos"), 2)
        assert p == parse_poly("x^2 - x + 1/6 - z^2 + 2*y", R)

    def test_genocchi(self):
        assert [apostol_genocchi(n, 1, 1, 1) for n in range(3)] == [R.zero, R.const(1), 2 * x - 1]

    @pytest.mark.parametrize("lam,mu", [(1, 1), (3, 2), (Fraction(1, 2), Fraction(1, 3))])
    def test_leading_zero_off_branch(self, lam, mu):
        assert family_poly(fam(1, lam, mu), 0).is_zero()


class TestClosedCS:
    def test_against_series(self):
        c_s, s_s = cos_sin_zt(12, "y")
        e = exp_poly(x, 12)
        for n in range(13):
            c, s = cs_closed_form(n)
            assert c == extract_family(e * c_s, n)
            assert s == extract_family(e * s_s, n)


class TestDegeneracyLadder:
    @pytest.mark.parametrize("u", [u_factory("one"), u_factory("gh", 2)], ids=lambda u: u.label)
    @pytest.mark.parametrize("lam,mu", [(2, -1), (3, 2)])
    def test_z_zero_drops_trig(self, u, lam, mu):
        for n in range(11):
            assert family_poly(fam(2, lam, mu, u, "cos"), n).subs({"z": 0}) == family_poly(fam(2, lam, mu, u), n)
            assert family_poly(fam(2, lam, mu, u, "sin"), n).subs({"z": 0}).is_zero()

    @pytest.mark.parametrize("lam", [2, Fraction(1, 2), Fraction(5, 3), 1])
    @pytest.mark.parametrize("v", [1, 2, 3])
    def test_classical_apostol(self, lam, v):
        for n in range(11):
            assert family_poly(fam(v, lam, -1), n) == to_poly(apostol_polynomial(n, lam, v))

    def test_bernoulli(self):
        for n in range(11):
            assert family_poly(fam(1, 1, -1), n) == to_poly(apostol_polynomial(n, 1, 1))

    def test_order_zero_is_monomial(self):
        for n in range(11):
            assert family_poly(fam(0, 3, 2), n) == x ** n


class TestSources:
    def test_corrupted_member(self):
        spec = fam(trig="cos")
        src = CorruptedSource(spec, 3, 1)
        assert src.member(spec, 3) == family_poly(spec, 3) + 1
        assert src.member(spec, 2) == family_poly(spec, 2)
        assert src.member(fam(), 3) == family_poly(fam(), 3)

    def test_members(self):
        assert FamilySource().members(fam(), 3) == [bernoulli_polynomial(n) for n in range(3)]

    def test_cache_growth_is_consistent(self):
        spec = fam(2, 3, 2, u_factory("te", 2), "sin")
        small = family_series(spec, 4)
        large = family_series(spec, 25)
        assert large.truncate(4) == small

    def test_negative_index(self):
        with pytest.raises(ApostolError):
            family_poly(fam(), -1)
