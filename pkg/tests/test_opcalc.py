from fractions import Fraction

import pytest

from apostolb import DEFAULT_RING, CorruptedSource, FamilySpec, InsufficientOrderError, KernelSpec, family_poly, u_factory
from apostolb.opcalc import (
    DOperatorSeries,
    build_ratio_operator,
    build_trig_operator,
    dseries_apply,
    ode_operator_terms,
    raising_route_members,
    verify_lowering,
    verify_ode,
    verify_raising_gf,
)

R = DEFAULT_RING
x, y, z = R.var("x"), R.var("y"), R.var("z")
Q = Fraction


def consts(*vals):
    return [R.const(v) for v in vals]


def fam(v=1, lam=1, mu=-1, u=None, trig="none"):
    return FamilySpec(KernelSpec(v, lam, mu), u or u_factory("one"), trig)


class TestOperators:
    def test_ratio_degenerate_branch(self):
        op = build_ratio_operator(KernelSpec(1, 1, -1), 3)
        assert list(op.coeffs) == consts(0, Q(-1, 2), Q(-1, 12), 0)

    def test_ratio_regular_branch(self):
        op = build_ratio_operator(KernelSpec(1, 1, 1), 3)
        assert list(op.coeffs) == consts(1, Q(-1, 2), Q(-1, 4), 0)

    def test_tan(self):
        op = build_trig_operator("tan", 6)
        assert list(op.coeffs) == [R.zero, R.zero, z ** 2, R.zero, z ** 4 * Q(1, 3), R.zero, z ** 6 * Q(2, 15)]

    def test_cot(self):
        op = build_trig_operator("cot", 4)
        assert list(op.coeffs) == [R.const(1), R.zero, z ** 2 * Q(-1, 3), R.zero, z ** 4 * Q(-1, 45)]

    def test_unknown_trig(self):
        with pytest.raises(ValueError):
            build_trig_operator("sec", 3)

    def test_apply_refuses_truncation(self):
        op = DOperatorSeries.from_coeffs(consts(1, 1, 1))
        assert dseries_apply(op, x ** 2) == x ** 2 + 2 * x + 2
        with pytest.raises(InsufficientOrderError):
            dseries_apply(op, x ** 3)

    def test_rejects_x_coefficients(self):
        with pytest.raises(ValueError):
            DOperatorSeries.from_coeffs([x, 1])

    def test_times_d(self):
        op = DOperatorSeries.from_coeffs(consts(1, 0, 0)).times_d(1)
        assert op.apply(x ** 2) == 2 * x


GRID = [
    fam(1, 1, -1, None, "cos"),
    fam(2, 2, -1, u_factory("gh", 2), "sin"),
    fam(1, 1, 1, u_factory("ha", appell="genocchi"), "cos"),
    fam(2, 3, 2, u_factory("ml", 1), "sin"),
    fam(1, Q(1, 2), Q(1, 3), u_factory("te", 2), "cos"),
    fam(0, 1, 1, u_factory("ml", 2, reciprocal=True), "none"),
]


@pytest.mark.parametrize("spec", GRID, ids=lambda s: f"{s.u.label}-{s.trig}-v{s.kernel.v}")
class TestMonomiality:
    def test_ode(self, spec):
        assert verify_ode(spec, 8).passed

    def test_raising(self, spec):
        assert verify_raising_gf(spec, 8).passed

    def test_lowering(self, spec):
        assert verify_lowering(spec, 8).passed

    def test_raising_route_members(self, spec):
        assert raising_route_members(spec, 6) == [family_poly(spec, n) for n in range(1, 7)]


class TestFaults:
    spec = fam(2, 3, 2, u_factory("gh", 2), "cos")

    def test_ode_localizes(self):
        rep = verify_ode(self.spec, 8, CorruptedSource(self.spec, 4, z))
        assert not rep.passed and rep.first_failure.index == (4,)

    def test_lowering_localizes(self):
        rep = verify_lowering(self.spec, 8, CorruptedSource(self.spec, 4, x))
        assert not rep.passed and rep.first_failure.index == (4,)

    def test_lowering_constant_fault_shows_one_step_later(self):
        # d/dx kills a constant error in P_4; it surfaces in 5 P_4
        rep = verify_lowering(self.spec, 8, CorruptedSource(self.spec, 4, 1))
        assert rep.first_failure.index == (5,)

    def test_raising_localizes(self):
        rep = verify_raising_gf(self.spec, 8, CorruptedSource(self.spec, 4, x))
        assert not rep.passed and rep.first_failure.index == (4,)

    def test_wrong_trig_sign_fails(self):
        # the sine-kind operator does not annihilate the cosine kind
        op = ode_operator_terms(self.spec.replace(trig="sin"), 6)
        p = family_poly(self.spec, 4)
        assert not (x * p.diff("x") + op.apply(p) - p * 4).is_zero()

    def test_small_order(self):
        with pytest.raises(InsufficientOrderError):
            verify_ode(self.spec, 5, J=3)
        with pytest.raises(ValueError):
            verify_raising_gf(self.spec, 1)
