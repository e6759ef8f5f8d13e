"""Constant-coefficient operator series in ``D_x`` acting on polynomials.

An operator ``sum_j c_j(y, z) D_x^j`` is the reinterpretation of a power
series in ``t``: multiplying a family's generating function by ``g(t)``
acts on its members as ``g(D_x)``, because ``D_x e^(x t) = t e^(x t)``.
``D_x`` is nilpotent on polynomials, so a series of order ``J`` acts
exactly on every polynomial of ``x``-degree at most ``J``.
"""

from __future__ import annotations

import math

from gmpy2 import mpq

from .errors import InsufficientOrderError, NotAUnitError
from .exactq import DEFAULT_RING, GaussRational, MultiPoly, VarSet
from .families import DEFAULT_SOURCE, FamilySource, FamilySpec
from .fps import KernelSpec, TruncSeries, cos_sin_zt, series_invert, sinc_zt
from .report import Sweep, VerdictReport

__all__ = [
    "DOperatorSeries",
    "dseries_apply",
    "build_ratio_operator",
    "build_trig_operator",
    "build_log_derivative_operator",
    "verify_ode",
    "verify_raising_gf",
    "verify_lowering",
]


class DOperatorSeries:
    """``sum_{j<=J} c_j D_x^j`` with coefficients free of ``x``."""

    __slots__ = ("series", "xvar")

    def __init__(self, series: TruncSeries, xvar: str = "x"):
        for c in series.coeffs:
            if xvar in c.variables():
                raise ValueError(f"operator coefficient {c} involves {xvar}")
        self.series = series
        self.xvar = xvar

    @classmethod
    def from_coeffs(cls, coeffs, ring: VarSet = DEFAULT_RING, xvar: str = "x"):
        return cls(TruncSeries(coeffs, ring=ring), xvar)

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def coeffs(self) -> tuple:
        return self.series.coeffs

    def apply(self, p: MultiPoly) -> MultiPoly:
        return dseries_apply(self, p)

    def __add__(self, other: "DOperatorSeries") -> "DOperatorSeries":
        return DOperatorSeries(self.series + other.series, self.xvar)

    def __neg__(self):
        return DOperatorSeries(-self.series, self.xvar)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DOperatorSeries):
            return DOperatorSeries(self.series * other.series, self.xvar)
        return DOperatorSeries(self.series * other, self.xvar)

    __rmul__ = __mul__

    def times_d(self, k: int = 1) -> "DOperatorSeries":
        """Compose with ``D_x^k`` (keeps the order ``J``)."""
        return DOperatorSeries(self.series.shift_up(k), self.xvar)

    def __repr__(self):
        return f"DOperatorSeries({[c.to_text() for c in self.coeffs]})"


def dseries_apply(op: DOperatorSeries, p: MultiPoly) -> MultiPoly:
    """``sum_j c_j * d^j p / dx^j``; refuses to truncate silently."""
    d = p.degree(op.xvar)
    if d > op.order:
        raise InsufficientOrderError(
            f"operator of order {op.order} cannot act exactly on x-degree {d}")
    out = p.ring.zero
    current = p
    for j in range(d + 1):
        c = op.coeffs[j]
        if c:
            out = out + c * current
        current = current.diff(op.xvar)
    return out


def _ratio_parts(lam: GaussRational, mu: GaussRational, order: int, ring: VarSet):
    # numerator lam e^t (1-t) + mu, denominator lam e^t + mu
    num = [MultiPoly.const(ring, lam * GaussRational(mpq(1 - n, math.factorial(n))))
           for n in range(order + 1)]
    den = [MultiPoly.const(ring, lam * GaussRational(mpq(1, math.factorial(n))))
           for n in range(order + 1)]
    num[0] = num[0] + mu
    den[0] = den[0] + mu
    return TruncSeries(num, order, ring), TruncSeries(den, order, ring)


def build_ratio_operator(kernel: KernelSpec, J: int, ring: VarSet = DEFAULT_RING) -> DOperatorSeries:
    """``v (lam e^D (1-D) + mu) / (lam e^D + mu)`` to order ``J``.

    On the ``lam + mu = 0`` branch both numerator and denominator vanish at
    ``t = 0`` and are divided by ``t`` before inverting.
    """
    if kernel.v == 0:
        return DOperatorSeries(TruncSeries.zero(J, ring))
    if kernel.degenerate:
        num, den = _ratio_parts(kernel.lam, kernel.mu, J + 1, ring)
        num, den = num.shift_down(1), den.shift_down(1)
    else:
        num, den = _ratio_parts(kernel.lam, kernel.mu, J, ring)
    return DOperatorSeries((num * series_invert(den)) * kernel.v)


def build_trig_operator(kind: str, J: int, ring: VarSet = DEFAULT_RING, zvar: str = "z") -> DOperatorSeries:
    """``z tan(z D) D`` (``"tan"``) or ``z cot(z D) D`` (``"cot"``) to order ``J``."""
    cos_s, sin_s = cos_sin_zt(J, zvar, ring)
    if kind == "tan":
        s = (sin_s * series_invert(cos_s)).shift_up(1) * ring.var(zvar)
    elif kind == "cot":
        # z t cos(z t) / sin(z t) = cos(z t) / (sin(z t) / (z t))
        s = cos_s * series_invert(sinc_zt(J, zvar, ring))
    else:
        raise ValueError(f"unknown trig operator {kind!r}; expected 'tan' or 'cot'")
    return DOperatorSeries(s)


def build_log_derivative_operator(spec: FamilySpec, J: int, ring: VarSet = DEFAULT_RING) -> DOperatorSeries:
    """``(U'/U)(D) D``, plus ``k D`` when the family carries a shift ``e^(k t)``."""
    s = spec.u.log_derivative(J, ring).shift_up(1)
    if spec.shift:
        s = s + TruncSeries([0, ring.var(spec.shift)], J, ring)
    return DOperatorSeries(s)


def _trig_operator(spec: FamilySpec, J: int, ring: VarSet) -> DOperatorSeries | None:
    if spec.trig == "cos":
        return -build_trig_operator("tan", J, ring)
    if spec.trig == "sin":
        return build_trig_operator("cot", J, ring)
    return None


def ode_operator_terms(spec: FamilySpec, J: int, ring: VarSet = DEFAULT_RING) -> DOperatorSeries:
    """The ``x``-free part ``(U'/U)(D) D + ratio - z tan(zD) D`` (or ``+ z cot(zD) D``)."""
    op = build_log_derivative_operator(spec, J, ring) + build_ratio_operator(spec.kernel, J, ring)
    trig = _trig_operator(spec, J, ring)
    return op if trig is None else op + trig


def _params(spec: FamilySpec) -> dict:
    return spec.describe()


def verify_ode(spec: FamilySpec, n: int, source: FamilySource = DEFAULT_SOURCE,
               J: int | None = None) -> VerdictReport:
    """Check the differential equation for every member of index ``<= n``.

    ``[x D + (U'/U)(D) D + v ratio(D) -/+ trig(D) D - k] P_k = 0``.
    """
    ring = source.ring
    J = n if J is None else J
    if J < n:
        raise InsufficientOrderError(f"operator order {J} < index {n}")
    op = ode_operator_terms(spec, J, ring)
    x = ring.var("x")
    sweep = Sweep("ode", _params(spec))
    for k in range(n + 1):
        p = source.member(spec, k)
        lhs = x * p.diff("x") + op.apply(p) - p * k
        sweep.check(k, lhs, ring.zero)
    return sweep.report(n)


def verify_raising_gf(spec: FamilySpec, N: int, source: FamilySource = DEFAULT_SOURCE) -> VerdictReport:
    """Check ``sum P_{n+1} t^n/n! = multiplier * sum P_n t^n/n!``.

    The multiplier ``x + U'/U + (v/t) ratio(t) - z tan(zt)`` has a simple
    pole at ``t = 0`` in general, so ``t * multiplier`` (a regular series)
    is applied and the product is divided by ``t`` afterwards.
    """
    if N < 2:
        raise ValueError("raising check needs N >= 2")
    ring = source.ring
    members = source.members(spec, N + 1)
    F = TruncSeries.from_egf(members, ring)
    t_mult = ode_operator_terms(spec, N, ring).series
    G = (F * ring.var("x")).shift_up(1) + t_mult * F
    sweep = Sweep("raising", _params(spec))
    try:
        H = G.shift_down(1)
    except NotAUnitError:
        sweep.fail((0,), G.coeffs[0].to_text(), "0 (t * multiplier * series must vanish at t = 0)")
        return sweep.report(N)
    for n in range(N):
        sweep.check(n + 1, H.extract(n), members[n + 1])
    return sweep.report(N)


def raising_route_members(spec: FamilySpec, N: int, source: FamilySource = DEFAULT_SOURCE) -> list:
    """``P_1 .. P_N`` produced by the multiplier route from ``P_0 .. P_N``."""
    ring = source.ring
    F = TruncSeries.from_egf(source.members(spec, N + 1), ring)
    G = (F * ring.var("x")).shift_up(1) + ode_operator_terms(spec, N, ring).series * F
    H = G.shift_down(1)
    return [H.extract(n) for n in range(N)]


def verify_lowering(spec: FamilySpec, n: int, source: FamilySource = DEFAULT_SOURCE) -> VerdictReport:
    """``d P_k / dx = k P_{k-1}`` for ``1 <= k <= n``."""
    sweep = Sweep("lowering", _params(spec))
    prev = source.member(spec, 0)
    for k in range(1, n + 1):
        p = source.member(spec, k)
        sweep.check(k, p.diff("x"), prev * k)
        prev = p
    return sweep.report(n)
