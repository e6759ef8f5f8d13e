import math
from fractions import Fraction

import pytest

from apostolb import (
    DEFAULT_RING,
    I,
    ApostolError,
    BranchUnavailableError,
    CorruptedSource,
    FamilySpec,
    KernelSpec,
    apostol_genocchi,
    family_poly,
    u_factory,
)
from apostolb.theorems import (
    SELECTORS,
    TRACEABILITY,
    SampleSet,
    run_suite,
    traceability,
    verify_aux_double_series,
    verify_complex_split,
    verify_double_angle,
    verify_expansion_thms,
    verify_genocchi_coupling,
    verify_golden_tables,
    verify_intro_identities,
    verify_mixed_shift_derivative,
    verify_order_additivity,
    verify_order_split_derivative,
    verify_partials,
    verify_shift_thms,
    verify_two_index_shift,
)

R = DEFAULT_RING
x, y, z, k, w = (R.var(n) for n in "xyzkw")
C = math.comb
SMALL = SampleSet(pairs=((1, -1), (3, 2)), factories=(u_factory("one"), u_factory("gh", 2)))


def fam(v=1, lam=1, mu=-1, u=None, trig="none"):
    return FamilySpec(KernelSpec(v, lam, mu), u or u_factory("one"), trig)


def all_pass(reports):
    bad = [r for r in reports if not r.passed]
    assert not bad, bad[0]
    return True


class TestSampleSet:
    def test_deterministic(self):
        assert SampleSet(7).rationals(5, "t") == SampleSet(7).rationals(5, "t")
        assert SampleSet(7).rationals(5, "t") != SampleSet(8).rationals(5, "t")

    def test_distinct_draws(self):
        vals = SampleSet(0).rationals(10)
        assert len(set(map(str, vals))) == 10

    def test_branch_labels(self):
        labels = [d["branch"] for d in SampleSet().draws]
        assert labels == ["lam+mu=0", "lam+mu!=0", "lam+mu!=0", "lam+mu!=0", "lam+mu!=0"]


class TestSuitePasses:
    def test_expansion(self):
        assert all_pass(verify_expansion_thms(5, SMALL))

    def test_shift(self):
        reps = verify_shift_thms(5, SMALL)
        assert {r.mode for r in reps if r.identity_id == "thm3.3"} == {"symbolic", "sampled"}
        assert all_pass(reps)

    def test_two_index(self):
        assert all_pass(verify_two_index_shift(4, 2, SMALL))

    def test_aux(self):
        assert all_pass(verify_aux_double_series(SMALL))

    def test_order_additivity(self):
        assert all_pass(verify_order_additivity(5, SMALL))

    def test_complex_split(self):
        reps = verify_complex_split(5, SMALL)
        assert all(r.mode == "symbolic-gaussian" for r in reps)
        assert all_pass(reps)

    def test_double_angle(self):
        assert all_pass(verify_double_angle(5, SMALL))

    def test_partials(self):
        assert all_pass(verify_partials(5, SMALL))

    def test_mixed_shift(self):
        assert all_pass(verify_mixed_shift_derivative(4, 2, SMALL))

    def test_order_split(self):
        assert all_pass(verify_order_split_derivative(5, SMALL))

    def test_order_split_lambda_mu_one(self):
        s = SampleSet(pairs=((1, 1),), orders=(1,))
        assert all_pass(verify_order_split_derivative(6, s))

    def test_genocchi(self):
        assert all_pass(verify_genocchi_coupling(4, SMALL))

    def test_intro(self):
        assert all_pass(verify_intro_identities(5, SampleSet(apostol_lambdas=(1, 2))))

    def test_golden(self):
        assert all_pass(verify_golden_tables())


class TestWorkedExamples:
    def test_expansion_gould_hopper(self):
        lhs = family_poly(fam(u=u_factory("gh", 2), trig="cos"), 2)
        plain = [family_poly(fam(trig="cos"), n) for n in range(3)]
        ur = [u_factory("gh", 2).coefficient(r) for r in range(3)]
        rhs = sum((ur[r] * plain[2 - r] * C(2, r) for r in range(3)), R.zero)
        assert lhs == rhs == x ** 2 - x + Fraction(1, 6) - z ** 2 + 2 * y

    def test_two_index_one_one(self):
        P = [family_poly(fam(trig="cos"), n) for n in range(3)]
        rhs = P[2] + (w - x) * P[1] * 2 + (w - x) ** 2 * P[0]
        assert rhs == P[2].subs({"x": w})

    def test_complex_split_first_member(self):
        c, s = family_poly(fam(trig="cos"), 1), family_poly(fam(trig="sin"), 1)
        assert c + s * I == x + z * I - Fraction(1, 2)

    def test_genocchi_inner_values(self):
        assert [apostol_genocchi(n, 1, 1, 1) for n in range(3)] == [R.zero, R.const(1), 2 * x - 1]

    def test_genocchi_coupling_order_zero_is_shift(self):
        # v = 0, m = 0: G^(0)_r = x^r, so the identity is the binomial shift
        assert [apostol_genocchi(n, 0, 2, 1) for n in range(4)] == [x ** n for n in range(4)]

    def test_sum_of_powers_example(self):
        # n = 2, m = 3, lam = 2: 0 + 1 + 4 = 5
        B3 = family_poly(fam(1, 2, -1), 3)
        tot = sum((B3.eval({"x": j}) for j in (1, 2, 3)), 0)
        assert (2 - 1) * tot / 3 + (B3.eval({"x": 3}) - B3.eval({"x": 0})) / 3 == 5


class TestStatedFormsFail:
    """The deviations recorded as errata are real: the literal forms fail."""

    P = [family_poly(fam(2, 3, 2, u_factory("gh", 2), "cos"), n) for n in range(8)]

    def test_two_index_single_index_reading(self):
        n, r = 2, 1
        rhs = sum(((w - x) ** (l + m) * self.P[n + r - l - m] * (C(n, l) * C(r, m))
                   for l in range(n + 1) for m in range(r + 1)), R.zero)
        assert self.P[n].subs({"x": w}) != rhs

    def test_double_angle_same_index(self):
        n = 3
        plain = [family_poly(fam(), j) for j in range(n + 1)]
        ts2 = [family_poly(fam(trig="sin"), j).subs({"z": 2 * z}) for j in range(n + 1)]
        s = [family_poly(fam(trig="sin"), j) for j in range(n + 1)]
        c = [family_poly(fam(trig="cos"), j) for j in range(n + 1)]
        lhs = sum((plain[n - r] * ts2[r] * C(n, r) for r in range(n + 1)), R.zero)
        stated = sum((s[r] * c[r] * C(n, r) for r in range(n + 1)), R.zero) * 2
        assert lhs != stated

    def test_order_split_without_factorial(self):
        # delta = 0, m = 2: d^2 P_n = n(n-1) P_{n-2}, the stated form gives half
        n = 4
        with_fact = self.P[n - 2] * (C(n, 2) * 2)
        assert self.P[n].diff("x", 2) == with_fact
        assert self.P[n].diff("x", 2) != self.P[n - 2] * C(n, 2)

    def test_special_case_keeps_shifted_argument(self):
        n = 3
        rhs = sum((self.P[n - r] * x ** r * C(n, r) for r in range(n + 1)), R.zero)
        assert self.P[n].subs({"x": 2 * x}) == rhs
        assert self.P[n].subs({"x": x + k}) != rhs

    def test_addition_with_free_symbol_b(self):
        b = R.var("b")
        B = [family_poly(fam(1, 2, -1), j) for j in range(4)]
        rhs = sum((B[j] * b ** (3 - j) * C(3, j) for j in range(4)), R.zero)
        assert B[3].subs({"x": x + y}) != rhs
        assert B[3].subs({"x": x + b}) == rhs


class TestFailureReporting:
    def test_corrupted_member_localizes(self):
        bad = fam(1, 3, 2, None, "cos")
        reps = verify_expansion_thms(6, SMALL, CorruptedSource(bad, 3, z))
        failing = [r for r in reps if not r.passed]
        assert failing
        # with U = 1 the corrupted member sits on both sides at n = 3 and cancels
        assert {r.first_failure.index for r in failing} == {(3,), (4,)}
        for r in failing:
            assert (r.params["lambda"], r.params["mu"], r.params["v"], r.params["trig"]) == ("3", "2", "1", "cos")

    def test_shift_fault_in_low_member(self):
        bad = fam(2, 1, -1, u_factory("gh", 2), "cos")
        reps = verify_shift_thms(6, SMALL, CorruptedSource(bad, 2, x * y))
        failing = [r for r in reps if not r.passed]
        assert failing and all(r.first_failure.index[0] == 2 for r in failing)

    def test_golden_fault(self):
        from apostolb.families import BERNOULLI_NUMBERS

        table = dict(BERNOULLI_NUMBERS)
        table[10] += 1
        rep = verify_golden_tables(bernoulli_table=table)[0]
        assert not rep.passed and rep.first_failure.index == (10,)

    def test_report_dict(self):
        rep = verify_partials(2, SampleSet(pairs=((1, -1),), factories=(u_factory("one"),), orders=(1,)))[0]
        d = rep.to_dict()
        assert d["schema_version"] == 1 and d["passed"] and d["first_failure"] is None


class TestSuite:
    def test_mu_zero(self):
        with pytest.raises(BranchUnavailableError):
            verify_order_split_derivative(3, SampleSet(pairs=((1, 0),)))

    def test_unknown_selector(self):
        with pytest.raises(ApostolError):
            run_suite("thm9.9")

    def test_deterministic(self):
        a = [r.to_dict() for r in run_suite("thm4.1", 4)]
        b = [r.to_dict() for r in run_suite("thm4.1", 4)]
        assert a == b

    def test_traceability_covers_each_selector_once(self):
        thms = [f"thm3.{j}" for j in range(1, 11)] + [f"thm4.{j}" for j in range(1, 5)]
        assert [r["selector"] for r in traceability() if r["selector"].startswith("thm")] == thms
        assert set(SELECTORS) == {"all", *TRACEABILITY}

    @pytest.mark.parametrize("sel", ["thm3.2", "thm3.5", "thm3.10", "thm4.2"])
    def test_selector_filters(self, sel):
        ids = {r.identity_id.split("/")[0] for r in run_suite(sel, 3, max_v=1, max_alpha=1)}
        assert ids == {sel}

    def test_erratum_notes(self):
        reps = run_suite("all", 3, max_v=1, max_alpha=1, max_m=1)
        noted = {r.identity_id for r in reps if r.erratum_note}
        assert {"thm3.4", "thm3.5", "thm3.7", "thm3.10", "thm4.3", "thm4.4", "golden.apostol_closed",
                "intro.addition"} <= noted
        assert not {"thm3.1", "thm3.2", "thm3.8", "thm4.1"} & noted


class TestVerdictReport:
    def test_passed_iff_no_failure(self):
        from apostolb.report import Failure, VerdictReport

        with pytest.raises(ValueError):
            VerdictReport("x", {}, 1, True, Failure((1,), "a", "b"))
        with pytest.raises(ValueError):
            VerdictReport("x", {}, 1, False)

    def test_sweep_keeps_first_failure(self):
        from apostolb.report import Sweep

        sw = Sweep("demo", {})
        sw.check(0, x, x)
        sw.check(1, x, y)
        sw.check(2, x, z)
        rep = sw.report()
        assert rep.first_failure.index == (1,) and rep.first_failure.rhs == "y" and rep.max_index == 2
