"""Named polynomial families built from their generating functions.

Every family here is a coefficient sequence of

    (t / (lam*e^t + mu))^v * e^(x t) * U(y, t) * trig(z t) * e^(k t)

for a :class:`KernelSpec`, a :class:`UFactory` choosing ``U`` and a trig
factor that is 1, ``cos(zt)`` or ``sin(zt)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from threading import Lock

from gmpy2 import mpq

from .errors import ApostolError, PoleError
from .exactq import DEFAULT_RING, GaussRational, MultiPoly, VarSet, parse_poly
from .fps import (
    KernelSpec,
    TruncSeries,
    apostol_kernel,
    cos_sin_zt,
    exp_poly,
    extract_family,
    series_exp,
    series_invert,
)

__all__ = [
    "UFactory",
    "FamilySpec",
    "u_factory",
    "U_NAMES",
    "TRIG_KINDS",
    "family_series",
    "family_poly",
    "bernoulli_number",
    "bernoulli_polynomial",
    "apostol_bernoulli_number",
    "apostol_bernoulli_number_closed",
    "closed_form_numerator",
    "closed_form_latex",
    "cs_closed_form",
    "apostol_genocchi",
    "general_t_poly",
    "BERNOULLI_NUMBERS",
    "BERNOULLI_POLYNOMIALS",
]

U_NAMES = ("one", "gould-hopper", "hermite-appell", "miller-lee", "trunc-exp")
APPELL_CHOICES = ("one", "genocchi")
TRIG_KINDS = ("none", "cos", "sin")

_ALIASES = {
    "one": "one",
    "1": "one",
    "gould-hopper": "gould-hopper",
    "gouldhopper": "gould-hopper",
    "gh": "gould-hopper",
    "hermite-appell": "hermite-appell",
    "hermiteappell": "hermite-appell",
    "ha": "hermite-appell",
    "miller-lee": "miller-lee",
    "millerlee": "miller-lee",
    "ml": "miller-lee",
    "trunc-exp": "trunc-exp",
    "truncexp": "trunc-exp",
    "te": "trunc-exp",
}


def _frac(p: int, q: int = 1) -> GaussRational:
    return GaussRational(mpq(p, q))


@dataclass(frozen=True)
class UFactory:
    """Choice of the factor ``U(y, t)`` of a 2-variable general family."""

    name: str = "one"
    m: int | None = None
    appell: str = "one"
    reciprocal: bool = False

    def __post_init__(self):
        if self.name not in U_NAMES:
            raise ApostolError(f"unknown U factory {self.name!r}; expected one of {U_NAMES}")
        if self.name in ("gould-hopper", "trunc-exp"):
            if not isinstance(self.m, int) or self.m < 1:
                raise ApostolError(f"{self.name} needs an integer m >= 1, got {self.m!r}")
        elif self.name == "miller-lee":
            if not isinstance(self.m, int) or self.m < 0:
                raise ApostolError(f"miller-lee needs an integer m >= 0, got {self.m!r}")
        elif self.m is not None:
            raise ApostolError(f"{self.name} takes no m parameter")
        if self.appell not in APPELL_CHOICES:
            raise ApostolError(f"unknown Appell factor {self.appell!r}; expected {APPELL_CHOICES}")
        if self.appell != "one" and self.name != "hermite-appell":
            raise ApostolError("an Appell factor only applies to hermite-appell")
        if self.reciprocal and self.name != "miller-lee":
            raise ApostolError("the reciprocal flag only applies to miller-lee")

    @property
    def label(self) -> str:
        if self.name == "one":
            return "one"
        if self.name == "hermite-appell":
            return f"hermite-appell(A={self.appell})"
        extra = ",reciprocal" if self.reciprocal else ""
        return f"{self.name}(m={self.m}{extra})"

    @property
    def uses_y(self) -> bool:
        return self.name in ("gould-hopper", "hermite-appell", "trunc-exp")

    def series(self, order: int, ring: VarSet = DEFAULT_RING, var: str = "y") -> TruncSeries:
        """``U(y, t)`` truncated at ``order``."""
        return _u_series(self, order, ring, var)

    def log_derivative(self, order: int, ring: VarSet = DEFAULT_RING, var: str = "y") -> TruncSeries:
        """``U'(y, t) / U(y, t)`` from its closed form."""
        return _u_log_derivative(self, order, ring, var)

    def coefficient(self, r: int, ring: VarSet = DEFAULT_RING, var: str = "y") -> MultiPoly:
        """``U_r(y) = r! [t^r] U``."""
        return extract_family(self.series(r, ring, var), r)


def canonical_u_name(name: str) -> str:
    """Resolve aliases such as ``gh`` or ``ml``."""
    key = _ALIASES.get(name.strip().lower())
    if key is None:
        raise ApostolError(f"unknown U factory {name!r}; expected one of {U_NAMES}")
    return key


def u_factory(name: str, m: int | None = None, appell: str | None = None,
              reciprocal: bool = False) -> UFactory:
    """Build a :class:`UFactory` from a user-facing name."""
    key = canonical_u_name(name)
    if key == "hermite-appell":
        return UFactory(key, None, appell or "one", False)
    if appell not in (None, "one"):
        raise ApostolError("an Appell factor only applies to hermite-appell")
    return UFactory(key, m, "one", reciprocal)


def _appell_genocchi(order: int, ring: VarSet) -> tuple[TruncSeries, TruncSeries]:
    # A(t) = 2/(e^t + 1) and A'/A = -e^t/(e^t + 1)
    et = exp_poly(1, order, ring)
    inv = series_invert(et + 1)
    return inv * 2, -(et * inv)


@lru_cache(maxsize=None)
def _u_series(u: UFactory, order: int, ring: VarSet, var: str) -> TruncSeries:
    y = ring.var(var) if u.uses_y else None
    if u.name == "one":
        return TruncSeries.one(order, ring)
    if u.name == "gould-hopper":
        exponent = [ring.zero] * (order + 1)
        if u.m <= order:
            exponent[u.m] = y
        return series_exp(TruncSeries(exponent, order, ring))
    if u.name == "hermite-appell":
        exponent = [ring.zero] * (order + 1)
        if order >= 2:
            exponent[2] = y
        base = series_exp(TruncSeries(exponent, order, ring))
        if u.appell == "one":
            return base
        return base * _appell_genocchi(order, ring)[0]
    if u.name == "miller-lee":
        e = u.m + 1
        poly = TruncSeries([_frac((-1) ** j * math.comb(e, j)) for j in range(min(e, order) + 1)],
                           order, ring)
        return series_invert(poly) if u.reciprocal else poly
    # trunc-exp: 1/(1 - y t^m) = sum y^j t^(m j)
    cs = [ring.zero] * (order + 1)
    for j in range(order // u.m + 1):
        cs[j * u.m] = y ** j
    return TruncSeries(cs, order, ring)


@lru_cache(maxsize=None)
def _u_log_derivative(u: UFactory, order: int, ring: VarSet, var: str) -> TruncSeries:
    y = ring.var(var) if u.uses_y else None
    cs = [ring.zero] * (order + 1)
    if u.name == "one":
        pass
    elif u.name == "gould-hopper":
        if u.m - 1 <= order:
            cs[u.m - 1] = y * u.m
    elif u.name == "hermite-appell":
        if order >= 1:
            cs[1] = y * 2
        if u.appell == "genocchi":
            return TruncSeries(cs, order, ring) + _appell_genocchi(order, ring)[1]
    elif u.name == "miller-lee":
        sign = 1 if u.reciprocal else -1
        cs = [MultiPoly.const(ring, sign * (u.m + 1))] * (order + 1)
    else:
        # m y t^(m-1) / (1 - y t^m)
        for j in range(order // u.m + 1):
            n = u.m - 1 + j * u.m
            if n <= order:
                cs[n] = (y ** (j + 1)) * u.m
    return TruncSeries(cs, order, ring)


ONE = UFactory()


@dataclass(frozen=True)
class FamilySpec:
    """Complete description of one generating function.

    ``shift`` names an auxiliary symbol ``k`` contributing ``e^(k t)``.
    """

    kernel: KernelSpec
    u: UFactory = ONE
    trig: str = "none"
    shift: str | None = None

    def __post_init__(self):
        if self.trig not in TRIG_KINDS:
            raise ApostolError(f"unknown trig kind {self.trig!r}; expected {TRIG_KINDS}")

    def variables(self) -> set:
        out = {"x"}
        if self.u.uses_y:
            out.add("y")
        if self.trig != "none":
            out.add("z")
        if self.shift:
            out.add(self.shift)
        return out

    def replace(self, **changes) -> "FamilySpec":
        return replace(self, **changes)

    def with_order(self, v: int) -> "FamilySpec":
        return replace(self, kernel=self.kernel.with_order(v))

    def describe(self) -> dict:
        return {
            "v": str(self.kernel.v),
            "lambda": str(self.kernel.lam),
            "mu": str(self.kernel.mu),
            "U": self.u.label,
            "trig": self.trig,
        }


_SERIES_CACHE: dict = {}
_CACHE_LOCK = Lock()
_MIN_ORDER = 10


def _build_family_series(spec: FamilySpec, order: int, ring: VarSet) -> TruncSeries:
    s = apostol_kernel(spec.kernel, order, ring) * exp_poly(ring.var("x"), order, ring)
    if spec.trig != "none":
        cos_s, sin_s = cos_sin_zt(order, "z", ring)
        s = s * (cos_s if spec.trig == "cos" else sin_s)
    if spec.u.name != "one":
        s = s * spec.u.series(order, ring)
    if spec.shift:
        s = s * exp_poly(ring.var(spec.shift), order, ring)
    return s


def family_series(spec: FamilySpec, order: int, ring: VarSet = DEFAULT_RING) -> TruncSeries:
    """Generating series of ``spec`` truncated at ``order`` (cached, grows on demand)."""
    key = (spec, ring)
    cached = _SERIES_CACHE.get(key)
    if cached is not None and cached.order >= order:
        return cached if cached.order == order else cached.truncate(order)
    build_order = max(order, _MIN_ORDER, 2 * cached.order if cached is not None else 0)
    s = _build_family_series(spec, build_order, ring)
    with _CACHE_LOCK:
        _SERIES_CACHE[key] = s
    return s if build_order == order else s.truncate(order)


def family_poly(spec: FamilySpec, n: int, ring: VarSet = DEFAULT_RING) -> MultiPoly:
    """The ``n``-th member of the family described by ``spec``."""
    if n < 0:
        raise ApostolError("family index must be non-negative")
    return extract_family(family_series(spec, n + 2, ring), n)


def clear_cache() -> None:
    with _CACHE_LOCK:
        _SERIES_CACHE.clear()


class FamilySource:
    """Where identity checks obtain family members.

    The default reads the series engine; tests substitute a source with a
    deliberately corrupted member to exercise failure reporting.
    """

    ring: VarSet = DEFAULT_RING

    def member(self, spec: FamilySpec, n: int) -> MultiPoly:
        return family_poly(spec, n, self.ring)

    def members(self, spec: FamilySpec, count: int) -> list:
        return [self.member(spec, n) for n in range(count)]


class CorruptedSource(FamilySource):
    """Adds ``delta`` to member ``n`` of one family; everything else is exact."""

    def __init__(self, spec: FamilySpec, n: int, delta=1):
        self.spec = spec
        self.n = n
        self.delta = delta

    def member(self, spec: FamilySpec, n: int) -> MultiPoly:
        p = super().member(spec, n)
        if spec == self.spec and n == self.n:
            return p + self.delta
        return p


DEFAULT_SOURCE = FamilySource()


# -- classical specialisations ------------------------------------------

BERNOULLI_KERNEL = KernelSpec(1, 1, -1)


def bernoulli_number(n: int) -> GaussRational:
    """``B_n`` from the kernel ``t/(e^t - 1)``."""
    if n < 0:
        raise ApostolError("index must be non-negative")
    return extract_family(apostol_kernel(BERNOULLI_KERNEL, n), n).scalar()


def bernoulli_polynomial(n: int, ring: VarSet = DEFAULT_RING) -> MultiPoly:
    return family_poly(FamilySpec(BERNOULLI_KERNEL), n, ring)


def apostol_bernoulli_number(n: int, lam, v: int = 1, mu=-1) -> GaussRational:
    """``B^(v)_{n,mu}(lam)``: the ``x = 0`` member of the plain family."""
    return extract_family(apostol_kernel(KernelSpec(v, lam, mu), n), n).scalar()


# Numerators (coefficients of lam^0, lam^1, ...) over (lam - 1)^n.
_CLOSED_NUMERATORS = {
    0: (0,),
    1: (1,),
    2: (0, -2),
    3: (0, 3, 3),
    4: (0, -4, -16, -4),
    5: (0, 5, 55, 55, 5),
}

# The n = 4 entry is commonly stated as +4 lam (lam^2 + 4 lam + 1)/(lam - 1)^4;
# the series expansion of t/(lam e^t - 1) has the opposite sign.
CLOSED_FORM_NOTES = {
    4: "sign corrected: t/(lam*e^t-1) gives -4 lam (lam^2+4 lam+1)/(lam-1)^4",
}

_LAM_RING = VarSet(("lam",))


def closed_form_numerator(n: int) -> MultiPoly:
    """Numerator polynomial in ``lam`` of the closed form (denominator ``(lam-1)^n``)."""
    if n not in _CLOSED_NUMERATORS:
        raise ApostolError(f"closed forms exist for n in 0..5, got {n}")
    lam = _LAM_RING.var("lam")
    return sum((lam ** j * c for j, c in enumerate(_CLOSED_NUMERATORS[n])), _LAM_RING.zero)


def apostol_bernoulli_number_closed(n: int, lam) -> GaussRational:
    """Closed rational form of ``B_n(lam)`` for ``n <= 5``; pole at ``lam = 1``."""
    lam = GaussRational(lam)
    if n not in _CLOSED_NUMERATORS:
        raise ApostolError(f"closed forms exist for n in 0..5, got {n}")
    if lam == 1:
        raise PoleError("closed forms have a pole at lambda = 1; use the Bernoulli branch")
    num = closed_form_numerator(n).eval({"lam": lam})
    return num / (lam - 1) ** n


def closed_form_latex(n: int) -> str:
    num = closed_form_numerator(n)
    if num.is_zero():
        return "0"
    den = r"\lambda-1" if n == 1 else rf"(\lambda-1)^{{{n}}}"
    top = num.to_latex({"lam": r"\lambda"})
    return rf"\frac{{{top}}}{{{den}}}"


# Values as listed with the classical definitions (B_0..B_18, odd ones past 1 vanish).
BERNOULLI_NUMBERS = {
    0: mpq(1), 1: mpq(-1, 2), 2: mpq(1, 6), 4: mpq(-1, 30), 6: mpq(1, 42),
    8: mpq(-1, 30), 10: mpq(5, 66), 12: mpq(-691, 2730), 14: mpq(7, 6),
    16: mpq(-3617, 510), 18: mpq(43867, 798),
    **{n: mpq(0) for n in range(3, 19, 2)},
}

BERNOULLI_POLYNOMIALS = (
    "1",
    "x - 1/2",
    "x^2 - x + 1/6",
    "x^3 - 3/2*x^2 + 1/2*x",
    "x^4 - 2*x^3 + x^2 - 1/30",
)


def golden_bernoulli_polynomials(ring: VarSet = DEFAULT_RING) -> list:
    return [parse_poly(t, ring) for t in BERNOULLI_POLYNOMIALS]


# -- other families ------------------------------------------------------


def cs_closed_form(n: int, xvar: str = "x", yvar: str = "y",
                   ring: VarSet = DEFAULT_RING) -> tuple[MultiPoly, MultiPoly]:
    """``(C_n, S_n)`` from their binomial sums (no series involved)."""
    if n < 0:
        raise ApostolError("index must be non-negative")
    c, s = ring.zero, ring.zero
    for r in range(n // 2 + 1):
        c = c + MultiPoly.monomial(ring, {xvar: n - 2 * r, yvar: 2 * r}, (-1) ** r * math.comb(n, 2 * r))
    for r in range((n - 1) // 2 + 1):
        s = s + MultiPoly.monomial(ring, {xvar: n - 2 * r - 1, yvar: 2 * r + 1},
                                   (-1) ** r * math.comb(n, 2 * r + 1))
    return c, s


def apostol_genocchi(n: int, v: int, lam, mu, ring: VarSet = DEFAULT_RING) -> MultiPoly:
    """Member ``n`` of ``(2t/(lam e^t + mu))^v e^(x t)``."""
    spec = FamilySpec(KernelSpec(v, lam, mu))
    return family_poly(spec, n, ring).scale(GaussRational(2 ** v))


def general_t_poly(u: UFactory, n: int, ring: VarSet = DEFAULT_RING) -> MultiPoly:
    """``T_n(x, y)``, the members of ``e^(x t) U(y, t)``."""
    return family_poly(FamilySpec(KernelSpec(0, 1, -1), u), n, ring)
