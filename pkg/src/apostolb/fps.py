"""Truncated formal power series in ``t`` with polynomial coefficients.

Series store ordinary coefficients ``a_n``; the member of an exponential
generating function is recovered as ``n! * a_n`` by :func:`extract_family`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from gmpy2 import mpq

from .errors import InvalidKernelError, NotAUnitError, RingMismatchError, TruncationError
from .exactq import DEFAULT_RING, GaussRational, MultiPoly, VarSet, _add_into, _mul_terms_into, _prune

__all__ = [
    "TruncSeries",
    "KernelSpec",
    "series_mul",
    "series_invert",
    "series_exp",
    "exp_poly",
    "cos_sin_zt",
    "sinc_zt",
    "apostol_kernel",
    "extract_family",
]


def _as_poly(ring: VarSet, c) -> MultiPoly:
    if isinstance(c, MultiPoly):
        if c.ring != ring:
            raise RingMismatchError(f"coefficient ring {c.ring.names} vs {ring.names}")
        return c
    return MultiPoly.const(ring, c)


class TruncSeries:
    """Power series ``sum a_n t^n`` known exactly for ``n <= order``."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None, ring: VarSet = DEFAULT_RING):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise TruncationError("order must be non-negative")
        cs = [_as_poly(ring, c) for c in list(coeffs)[: order + 1]]
        cs += [ring.zero] * (order + 1 - len(cs))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, ring: VarSet, coeffs: tuple) -> "TruncSeries":
        s = object.__new__(cls)
        s.ring = ring
        s.order = len(coeffs) - 1
        s.coeffs = coeffs
        return s

    @classmethod
    def one(cls, order: int, ring: VarSet = DEFAULT_RING) -> "TruncSeries":
        return cls._raw(ring, (ring.one,) + (ring.zero,) * order)

    @classmethod
    def zero(cls, order: int, ring: VarSet = DEFAULT_RING) -> "TruncSeries":
        return cls._raw(ring, (ring.zero,) * (order + 1))

    @classmethod
    def t(cls, order: int, ring: VarSet = DEFAULT_RING) -> "TruncSeries":
        return cls([0, 1], order, ring)

    @classmethod
    def from_egf(cls, members: Sequence[MultiPoly], ring: VarSet = DEFAULT_RING) -> "TruncSeries":
        """Series whose ``t^n`` coefficient is ``members[n] / n!``."""
        return cls._raw(
            ring,
            tuple(_as_poly(ring, p).scale(GaussRational(mpq(1, math.factorial(n))))
                  for n, p in enumerate(members)),
        )

    def __getitem__(self, n: int) -> MultiPoly:
        if n < 0:
            return self.ring.zero
        if n > self.order:
            raise TruncationError(f"coefficient t^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def _check(self, other: "TruncSeries"):
        if other.order != self.order:
            raise TruncationError(f"series orders differ: {self.order} vs {other.order}")
        if other.ring != self.ring:
            raise RingMismatchError(f"series rings differ: {self.ring.names} vs {other.ring.names}")

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            return TruncSeries._raw(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        c = _as_poly(self.ring, other)
        return TruncSeries._raw(self.ring, (self.coeffs[0] + c,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        try:
            c = _as_poly(self.ring, other)
        except TypeError:
            return NotImplemented
        return TruncSeries._raw(self.ring, tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = TruncSeries.one(self.order, self.ring)
        base = self
        while e:
            if e & 1:
                result = series_mul(result, base)
            e >>= 1
            if e:
                base = series_mul(base, base)
        return result

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return TruncSeries._raw(self.ring, self.coeffs[: order + 1])

    def map(self, func: Callable[[MultiPoly], MultiPoly]) -> "TruncSeries":
        return TruncSeries._raw(self.ring, tuple(func(a) for a in self.coeffs))

    def subs(self, mapping) -> "TruncSeries":
        return self.map(lambda a: a.subs(mapping))

    def derivative(self) -> "TruncSeries":
        """d/dt; the result has order one less."""
        if self.order == 0:
            raise TruncationError("derivative of an order-0 series is unknown")
        return TruncSeries._raw(
            self.ring, tuple(self.coeffs[n] * n for n in range(1, self.order + 1))
        )

    def shift_up(self, k: int) -> "TruncSeries":
        """Multiply by ``t^k`` keeping the same order."""
        if k < 0:
            raise ValueError("negative shift")
        return TruncSeries._raw(
            self.ring, ((self.ring.zero,) * k + self.coeffs)[: self.order + 1]
        )

    def shift_down(self, k: int) -> "TruncSeries":
        """Divide by ``t^k``; the low ``k`` coefficients must vanish.

        The result has order ``order - k``.
        """
        if k < 0:
            raise ValueError("negative shift")
        if k > self.order:
            raise TruncationError(f"cannot divide order-{self.order} series by t^{k}")
        for j in range(k):
            if self.coeffs[j]:
                raise NotAUnitError(f"coefficient of t^{j} is {self.coeffs[j]}, cannot divide by t^{k}")
        return TruncSeries._raw(self.ring, self.coeffs[k:])

    def rescale(self, c) -> "TruncSeries":
        """Coefficients ``a_n -> c^n a_n``, i.e. ``t -> c t``."""
        g = c if isinstance(c, GaussRational) else GaussRational(c)
        out, f = [], GaussRational(1)
        for a in self.coeffs:
            out.append(a.scale(f))
            f = f * g
        return TruncSeries._raw(self.ring, tuple(out))

    def invert(self) -> "TruncSeries":
        return series_invert(self)

    def exp(self) -> "TruncSeries":
        return series_exp(self)

    def extract(self, n: int) -> MultiPoly:
        return extract_family(self, n)

    def members(self) -> list:
        return [extract_family(self, n) for n in range(self.order + 1)]

    def __repr__(self):
        body = ", ".join(a.to_text() for a in self.coeffs)
        return f"TruncSeries([{body}], order={self.order})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    ring = a.ring
    A = [p._terms for p in a.coeffs]
    B = [p._terms for p in b.coeffs]
    out = []
    for n in range(a.order + 1):
        acc: dict = {}
        for k in range(n + 1):
            ta, tb = A[k], B[n - k]
            if not ta or not tb:
                continue
            if len(tb) == 1 and 0 in tb:
                _add_into(acc, ta, tb[0])
            elif len(ta) == 1 and 0 in ta:
                _add_into(acc, tb, ta[0])
            else:
                _mul_terms_into(acc, ta, tb)
        out.append(MultiPoly._raw(ring, _prune(acc)))
    return TruncSeries._raw(ring, tuple(out))


def _unit_constant(a: TruncSeries) -> GaussRational:
    c0 = a.coeffs[0]
    if not c0 or not c0.is_constant():
        raise NotAUnitError(f"constant term {c0} is not a nonzero scalar")
    return c0.constant_term()


def series_invert(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be a nonzero scalar."""
    inv0 = _unit_constant(a).inverse()
    ring = a.ring
    out = [MultiPoly.const(ring, inv0)]
    A = [p._terms for p in a.coeffs]
    neg_inv0 = -inv0
    for n in range(1, a.order + 1):
        acc: dict = {}
        for k in range(1, n + 1):
            ta, tb = A[k], out[n - k]._terms
            if ta and tb:
                _mul_terms_into(acc, ta, tb)
        out.append(MultiPoly._raw(ring, _prune(acc)).scale(neg_inv0))
    return TruncSeries._raw(ring, tuple(out))


def series_exp(a: TruncSeries) -> TruncSeries:
    """``exp(a)`` for a series with zero constant term.

    Uses ``n b_n = sum_{k=1..n} k a_k b_{n-k}``, i.e. ``(exp a)' = a' exp a``.
    """
    if a.coeffs[0]:
        raise NotAUnitError("exp needs a zero constant term (result would be transcendental)")
    ring = a.ring
    out = [ring.one]
    A = [p._terms for p in a.coeffs]
    for n in range(1, a.order + 1):
        acc: dict = {}
        for k in range(1, n + 1):
            ta, tb = A[k], out[n - k]._terms
            if ta and tb:
                part: dict = {}
                _mul_terms_into(part, ta, tb)
                _add_into(acc, part, GaussRational(k))
        out.append(MultiPoly._raw(ring, _prune(acc)).scale(GaussRational(mpq(1, n))))
    return TruncSeries._raw(ring, tuple(out))


def exp_poly(p: MultiPoly | int, order: int, ring: VarSet = DEFAULT_RING) -> TruncSeries:
    """``exp(p*t)`` for a polynomial (or scalar) ``p``: coefficients ``p^n / n!``."""
    p = _as_poly(ring, p)
    out, power = [], ring.one
    for n in range(order + 1):
        out.append(power.scale(GaussRational(mpq(1, math.factorial(n)))))
        power = power * p
    return TruncSeries._raw(ring, tuple(out))


@lru_cache(maxsize=None)
def cos_sin_zt(order: int, var: str = "z", ring: VarSet = DEFAULT_RING) -> tuple:
    """``(cos(var*t), sin(var*t))`` truncated at ``order``."""
    if order < 0:
        raise TruncationError("order must be non-negative")
    cos_c, sin_c = [], []
    for n in range(order + 1):
        term = MultiPoly.monomial(ring, {var: n}, GaussRational(mpq((-1) ** (n // 2), math.factorial(n))))
        if n % 2 == 0:
            cos_c.append(term)
            sin_c.append(ring.zero)
        else:
            cos_c.append(ring.zero)
            sin_c.append(term)
    return TruncSeries._raw(ring, tuple(cos_c)), TruncSeries._raw(ring, tuple(sin_c))


@lru_cache(maxsize=None)
def sinc_zt(order: int, var: str = "z", ring: VarSet = DEFAULT_RING) -> TruncSeries:
    """``sin(var*t) / (var*t)`` (constant term 1)."""
    out = []
    for n in range(order + 1):
        if n % 2:
            out.append(ring.zero)
        else:
            out.append(MultiPoly.monomial(
                ring, {var: n}, GaussRational(mpq((-1) ** (n // 2), math.factorial(n + 1)))))
    return TruncSeries._raw(ring, tuple(out))


@dataclass(frozen=True)
class KernelSpec:
    """Order ``v`` and parameters of ``(t / (lam*e^t + mu))^v``."""

    v: int
    lam: GaussRational
    mu: GaussRational

    def __post_init__(self):
        object.__setattr__(self, "lam", GaussRational(self.lam))
        object.__setattr__(self, "mu", GaussRational(self.mu))
        if not isinstance(self.v, int) or self.v < 0:
            raise InvalidKernelError(f"kernel order must be a non-negative integer, got {self.v!r}")
        if not self.lam and not self.mu:
            raise InvalidKernelError("(lambda, mu) = (0, 0) is not a valid kernel")

    @property
    def degenerate(self) -> bool:
        """True on the classical branch ``lam + mu = 0``."""
        return not (self.lam + self.mu)

    def with_order(self, v: int) -> "KernelSpec":
        return KernelSpec(v, self.lam, self.mu)


def _exp_minus_one_over_t(lam: GaussRational, order: int, ring: VarSet) -> TruncSeries:
    # lam*(e^t - 1)/t = sum lam t^n/(n+1)!
    return TruncSeries._raw(ring, tuple(
        MultiPoly.const(ring, lam * GaussRational(mpq(1, math.factorial(n + 1))))
        for n in range(order + 1)))


def _lam_exp_plus_mu(lam: GaussRational, mu: GaussRational, order: int, ring: VarSet) -> TruncSeries:
    cs = [MultiPoly.const(ring, lam * GaussRational(mpq(1, math.factorial(n)))) for n in range(order + 1)]
    cs[0] = MultiPoly.const(ring, lam + mu)
    return TruncSeries._raw(ring, tuple(cs))


@lru_cache(maxsize=None)
def apostol_kernel(spec: KernelSpec, order: int, ring: VarSet = DEFAULT_RING) -> TruncSeries:
    """``(t / (lam*e^t + mu))^v`` truncated at ``order``.

    When ``lam + mu = 0`` the denominator is ``t * lam*(e^t-1)/t`` and the
    unit factor is inverted; otherwise the denominator itself is a unit and
    the result carries a ``t^v`` prefactor.
    """
    if order < 0:
        raise TruncationError("order must be non-negative")
    if spec.v == 0:
        return TruncSeries.one(order, ring)
    if spec.degenerate:
        base = series_invert(_exp_minus_one_over_t(spec.lam, order, ring))
        return base ** spec.v
    base = series_invert(_lam_exp_plus_mu(spec.lam, spec.mu, order, ring))
    return (base ** spec.v).shift_up(spec.v)


def extract_family(s: TruncSeries, n: int) -> MultiPoly:
    """The ``n``-th member ``n! * a_n`` of an exponential generating series."""
    if n < 0:
        raise TruncationError("negative index")
    if n > s.order:
        raise TruncationError(f"index {n} exceeds truncation order {s.order}")
    return s.coeffs[n].scale(GaussRational(math.factorial(n)))
