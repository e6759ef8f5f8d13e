"""Exact scalars and sparse multivariate polynomials.

Scalars are Gaussian rationals ``re + im*i`` whose parts are reduced
big-integer fractions (``gmpy2.mpq``).  Polynomials are sparse maps from
exponent vectors to scalars over a fixed, ordered set of variables.

Internally an exponent vector is packed into a single Python integer with
16 bits per variable, so multiplying monomials is one integer addition.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from gmpy2 import mpq

from .errors import RingMismatchError, UnboundVariableError, UnknownVariableError

__all__ = [
    "GaussRational",
    "VarSet",
    "MultiPoly",
    "DEFAULT_RING",
    "I",
    "parse_rational",
    "parse_gauss",
    "parse_poly",
    "poly_mul",
    "poly_eval",
    "poly_diff",
]

_MPQ = type(mpq(0))
_ZERO = mpq(0)
_ONE = mpq(1)
_BITS = 16
_MASK = (1 << _BITS) - 1


def _q(value) -> "mpq":
    if type(value) is _MPQ:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _MPQ):
        return value
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _new(re, im) -> "GaussRational":
    g = object.__new__(GaussRational)
    g.re = re
    g.im = im
    return g


def _coerce(value):
    if type(value) is GaussRational:
        return value
    if isinstance(value, (int, Fraction, _MPQ)) and not isinstance(value, bool):
        return _new(mpq(value), _ZERO)
    return None


class GaussRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if type(re) is GaussRational:
            if im:
                raise TypeError("pass either a GaussRational or two rational parts")
            self.re, self.im = re.re, re.im
            return
        self.re = _q(re)
        self.im = _q(im)

    @classmethod
    def from_parts(cls, re_num: int, re_den: int, im_num: int = 0, im_den: int = 1):
        if re_den == 0 or im_den == 0:
            raise ZeroDivisionError("zero denominator")
        return _new(mpq(re_num, re_den), mpq(im_num, im_den))

    def as_parts(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Numerator/denominator pairs in lowest terms, denominators positive."""
        return (
            (int(self.re.numerator), int(self.re.denominator)),
            (int(self.im.numerator), int(self.im.denominator)),
        )

    def is_real(self) -> bool:
        return not self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def real(self) -> "GaussRational":
        return _new(self.re, _ZERO)

    def imag(self) -> "GaussRational":
        return _new(self.im, _ZERO)

    def conjugate(self) -> "GaussRational":
        return _new(self.re, -self.im)

    def to_fraction(self) -> Fraction:
        if self.im:
            raise ValueError(f"{self} is not real")
        return Fraction(int(self.re.numerator), int(self.re.denominator))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        o = other if type(other) is GaussRational else _coerce(other)
        if o is None:
            return NotImplemented
        return _new(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if type(other) is GaussRational else _coerce(other)
        if o is None:
            return NotImplemented
        return _new(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _new(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = other if type(other) is GaussRational else _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return _new(a * c, _ZERO)
        return _new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("GaussRational division by zero")
            return _new(1 / a, _ZERO)
        n = a * a + b * b
        return _new(a / n, -b / n)

    def __truediv__(self, other):
        o = other if type(other) is GaussRational else _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = _new(_ONE, _ZERO)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = other if type(other) is GaussRational else _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational('{self}')"

    def __str__(self):
        return _scalar_text(self)


I = _new(_ZERO, _ONE)

Scalar = Union[GaussRational, int, Fraction]


def _q_text(q) -> str:
    return str(q)  # mpq prints as "p/q" or "p"


def _scalar_text(c: GaussRational) -> str:
    if not c.im:
        return _q_text(c.re)
    im_mag = abs(c.im)
    im_body = "i" if im_mag == 1 else f"{_q_text(im_mag)}*i"
    if not c.re:
        return im_body if c.im > 0 else f"-{im_body}"
    sign = "+" if c.im > 0 else "-"
    return f"{_q_text(c.re)} {sign} {im_body}"


_RATIONAL_RE = _re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_rational(text: str):
    """Parse ``p`` or ``p/q`` into an exact rational; rejects ``q = 0``."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return mpq(num, den)


def parse_gauss(text: str) -> GaussRational:
    """Parse canonical scalar text such as ``1/2``, ``-i`` or ``1/3 - 2*i``."""
    value = parse_poly(text, VarSet(()))
    return value.constant_term()


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names of a polynomial ring."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not isinstance(n, str) or not n.isidentifier() or n == "i":
                raise ValueError(f"invalid variable name {n!r}")
        object.__setattr__(self, "_index", {n: j for j, n in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"variable {name!r} not in ring {self.names}") from None

    def __contains__(self, name):
        return name in self._index

    def var(self, name: str) -> "MultiPoly":
        return MultiPoly._raw(self, {1 << (_BITS * self.index(name)): _new(_ONE, _ZERO)})

    def const(self, c) -> "MultiPoly":
        return MultiPoly.const(self, c)

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly._raw(self, {})

    @property
    def one(self) -> "MultiPoly":
        return MultiPoly._raw(self, {0: _new(_ONE, _ZERO)})

    def pack(self, exps: Iterable[int]) -> int:
        exps = tuple(exps)
        if len(exps) != len(self.names):
            raise ValueError(f"exponent vector {exps} does not match ring {self.names}")
        key = 0
        for j, e in enumerate(exps):
            if e < 0 or e > _MASK:
                raise ValueError(f"exponent {e} out of range")
            key |= e << (_BITS * j)
        return key

    def unpack(self, key: int) -> tuple:
        return tuple((key >> (_BITS * j)) & _MASK for j in range(len(self.names)))


DEFAULT_RING = VarSet(("x", "y", "z", "k", "w", "h", "a", "b"))


def _add_into(acc: dict, terms: Mapping, factor=None) -> None:
    get = acc.get
    for k, c in terms.items():
        if factor is not None:
            c = c * factor
        s = get(k)
        acc[k] = c if s is None else s + c


def _prune(acc: dict) -> dict:
    return {k: c for k, c in acc.items() if c}


def _mul_terms_into(acc: dict, a: Mapping, b: Mapping) -> None:
    get = acc.get
    if len(a) < len(b):
        a, b = b, a
    b_items = list(b.items())
    for ka, ca in a.items():
        for kb, cb in b_items:
            k = ka + kb
            p = ca * cb
            s = get(k)
            acc[k] = p if s is None else s + p


class MultiPoly:
    """Immutable sparse polynomial with GaussRational coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: VarSet, terms: Mapping | None = None):
        self.ring = ring
        d = {}
        for exps, c in (terms or {}).items():
            g = c if type(c) is GaussRational else GaussRational(c)
            if g:
                k = ring.pack(exps)
                s = d.get(k)
                d[k] = g if s is None else s + g
        self._terms = _prune(d)
        self._hash = None

    @classmethod
    def _raw(cls, ring: VarSet, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, ring: VarSet, c) -> "MultiPoly":
        g = c if type(c) is GaussRational else GaussRational(c)
        return cls._raw(ring, {0: g} if g else {})

    @classmethod
    def monomial(cls, ring: VarSet, powers: Mapping[str, int], coeff=1) -> "MultiPoly":
        g = coeff if type(coeff) is GaussRational else GaussRational(coeff)
        key = 0
        for name, e in powers.items():
            if e < 0:
                raise ValueError("negative exponent")
            key += e << (_BITS * ring.index(name))
        return cls._raw(ring, {key: g} if g else {})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Exponent-tuple -> coefficient map in canonical (graded lex) order."""
        return {self.ring.unpack(k): self._terms[k] for k in self._sorted_keys()}

    def _sorted_keys(self) -> list:
        unpack = self.ring.unpack

        def order(k):
            e = unpack(k)
            return (sum(e), e)

        return sorted(self._terms, key=order, reverse=True)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self) -> GaussRational:
        return self._terms.get(0, _new(_ZERO, _ZERO))

    def scalar(self) -> GaussRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    def coefficient(self, powers: Mapping[str, int]) -> GaussRational:
        key = 0
        for name, e in powers.items():
            key += e << (_BITS * self.ring.index(name))
        return self._terms.get(key, _new(_ZERO, _ZERO))

    def variables(self) -> set:
        """Names of the variables that actually occur."""
        seen = 0
        for k in self._terms:
            seen |= k
        return {n for j, n in enumerate(self.ring.names) if (seen >> (_BITS * j)) & _MASK}

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree when ``var`` is None); -1 for zero."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(self.ring.unpack(k)) for k in self._terms)
        shift = _BITS * self.ring.index(var)
        return max((k >> shift) & _MASK for k in self._terms)

    def is_real(self) -> bool:
        return all(not c.im for c in self._terms.values())

    def real_part(self) -> "MultiPoly":
        return MultiPoly._raw(
            self.ring, {k: _new(c.re, _ZERO) for k, c in self._terms.items() if c.re}
        )

    def imag_part(self) -> "MultiPoly":
        return MultiPoly._raw(
            self.ring, {k: _new(c.im, _ZERO) for k, c in self._terms.items() if c.im}
        )

    # -- arithmetic ------------------------------------------------------

    def _other(self, other):
        if type(other) is MultiPoly:
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"ring {self.ring.names} vs {other.ring.names}")
            return other
        g = _coerce(other)
        if g is None:
            return None
        return MultiPoly._raw(self.ring, {0: g} if g else {})

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        acc = dict(self._terms)
        _add_into(acc, o._terms)
        return MultiPoly._raw(self.ring, _prune(acc))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "MultiPoly":
        g = c if type(c) is GaussRational else GaussRational(c)
        if not g:
            return MultiPoly._raw(self.ring, {})
        return MultiPoly._raw(self.ring, {k: v * g for k, v in self._terms.items()})

    def __mul__(self, other):
        if type(other) is not MultiPoly:
            g = _coerce(other)
            if g is None:
                return NotImplemented
            return self.scale(g)
        o = self._other(other)
        a, b = self._terms, o._terms
        if not a or not b:
            return MultiPoly._raw(self.ring, {})
        if len(b) == 1 and 0 in b:
            return self.scale(b[0])
        if len(a) == 1 and 0 in a:
            return o.scale(a[0])
        acc = {}
        _mul_terms_into(acc, a, b)
        return MultiPoly._raw(self.ring, _prune(acc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = _coerce(other)
        if g is None:
            return NotImplemented
        return self.scale(g.inverse())

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._other(other) if not isinstance(other, MultiPoly) else other
        if o is None:
            return NotImplemented
        return o.ring == self.ring and self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution --------------------------------------

    def diff(self, var: str, times: int = 1) -> "MultiPoly":
        """Exact partial derivative, applied ``times`` times."""
        shift = _BITS * self.ring.index(var)
        unit = 1 << shift
        d = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            if e < times:
                continue
            f = 1
            for j in range(times):
                f *= e - j
            d[k - times * unit] = c * f
        return MultiPoly._raw(self.ring, d)

    def antiderivative(self, var: str) -> "MultiPoly":
        """The antiderivative in ``var`` with zero constant of integration."""
        shift = _BITS * self.ring.index(var)
        unit = 1 << shift
        d = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            d[k + unit] = c * GaussRational(mpq(1, e + 1))
        return MultiPoly._raw(self.ring, d)

    def eval(self, assignment: Mapping[str, Scalar]) -> GaussRational:
        """Substitute scalars for every occurring variable."""
        missing = self.variables() - set(assignment)
        if missing:
            raise UnboundVariableError(f"no value for {sorted(missing)}")
        p = self.subs(assignment)
        return p.constant_term()

    def subs(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials or scalars."""
        ring = self.ring
        targets = []
        for name, value in mapping.items():
            j = ring.index(name)
            if not isinstance(value, MultiPoly):
                value = MultiPoly.const(ring, value)
            elif value.ring != ring:
                raise RingMismatchError(f"substitution for {name} lives in another ring")
            targets.append((j, value))
        if not targets:
            return self
        powers: dict = {}

        def power(j, value, e):
            key = (j, e)
            if key not in powers:
                powers[key] = value ** e
            return powers[key]

        acc: dict = {}
        for k, c in self._terms.items():
            rest = k
            factor = None
            for j, value in targets:
                shift = _BITS * j
                e = (k >> shift) & _MASK
                if e:
                    rest -= e << shift
                    pe = power(j, value, e)
                    factor = pe if factor is None else factor * pe
            if factor is None:
                s = acc.get(k)
                acc[k] = c if s is None else s + c
                continue
            for kf, cf in factor._terms.items():
                kk = kf + rest
                v = cf * c
                s = acc.get(kk)
                acc[kk] = v if s is None else s + v
        return MultiPoly._raw(ring, _prune(acc))

    def map_coefficients(self, func) -> "MultiPoly":
        d = {}
        for k, c in self._terms.items():
            v = func(c)
            if v:
                d[k] = v if type(v) is GaussRational else GaussRational(v)
        return MultiPoly._raw(self.ring, d)

    # -- rendering -------------------------------------------------------

    def _monomial_text(self, key: int, sep: str = "*") -> str:
        parts = []
        for name, e in zip(self.ring.names, self.ring.unpack(key)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return sep.join(parts)

    def to_text(self) -> str:
        """Canonical text: graded-lex order, ``p/q`` fractions, ``i`` unit."""
        if not self._terms:
            return "0"
        pieces = []
        for key in self._sorted_keys():
            c = self._terms[key]
            mono = self._monomial_text(key)
            if not c.im or not c.re:
                negative = (c.re < 0) if not c.im else (c.im < 0)
                mag = _new(abs(c.re), abs(c.im))
                body = _scalar_text(mag)
                if mono:
                    if mag == 1:
                        body = mono
                    elif mag.im and mag.im == 1:
                        body = f"i*{mono}"
                    else:
                        body = f"{body}*{mono}"
            else:
                negative = False
                body = f"({_scalar_text(c)})"
                if mono:
                    body = f"{body}*{mono}"
            pieces.append((negative, body))
        first_neg, first = pieces[0]
        out = ("-" if first_neg else "") + first
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_latex(self, symbols: Mapping[str, str] | None = None) -> str:
        symbols = dict(LATEX_SYMBOLS, **(symbols or {}))
        if not self._terms:
            return "0"
        out = []
        for idx, key in enumerate(self._sorted_keys()):
            c = self._terms[key]
            mono = ""
            for name, e in zip(self.ring.names, self.ring.unpack(key)):
                sym = symbols.get(name, name)
                if e == 1:
                    mono += sym if not mono else " " + sym
                elif e > 1:
                    mono += f"{sym}^{{{e}}}" if not mono else f" {sym}^{{{e}}}"
            if not c.im or not c.re:
                negative = (c.re < 0) if not c.im else (c.im < 0)
                mag = abs(c.re) if not c.im else abs(c.im)
                coef = "" if (mag == 1 and mono) else _latex_q(mag)
                if c.im:
                    coef = ("" if mag == 1 else coef) + r"\mathrm{i}"
                body = coef + (" " + mono if coef and mono else mono)
            else:
                negative = False
                sign = "+" if c.im > 0 else "-"
                body = (
                    rf"\left({_latex_signed(c.re)} {sign} {_latex_q(abs(c.im))}\mathrm{{i}}\right)"
                    + (" " + mono if mono else "")
                )
            if idx == 0:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


LATEX_SYMBOLS = {"w": r"\omega", "a": r"\alpha", "b": r"\beta", "lam": r"\lambda"}


def _latex_q(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _latex_signed(q) -> str:
    return ("-" if q < 0 else "") + _latex_q(abs(q))


# -- parsing -------------------------------------------------------------

_TOKEN_RE = _re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def parse_poly(text: str, ring: VarSet = DEFAULT_RING) -> MultiPoly:
    """Parse polynomial text (the canonical rendering, or any sum of products)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        pos = m.end()
        if m.group(1):
            tokens.append(("num", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def expect(op):
        t = take()
        if t != ("op", op):
            raise ValueError(f"expected {op!r} in {text!r}")

    def expression():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        value = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            value = value + t if op == "+" else value - t
        return value

    def term():
        value = factor()
        while peek() == ("op", "*"):
            take()
            value = value * factor()
        return value

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise ValueError(f"bad exponent in {text!r}")
            base = base ** e
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            if peek() == ("op", "/"):
                take()
                k2, den = take()
                if k2 != "num" or den == 0:
                    raise ValueError(f"bad fraction in {text!r}")
                return MultiPoly.const(ring, mpq(val, den))
            return MultiPoly.const(ring, val)
        if kind == "name":
            if val == "i":
                return MultiPoly.const(ring, I)
            return ring.var(val)
        if (kind, val) == ("op", "("):
            v = expression()
            expect(")")
            return v
        if (kind, val) == ("op", "-"):
            return -factor()
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expression()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


# -- functional aliases --------------------------------------------------


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring {a.ring.names} vs {b.ring.names}")
    return a * b


def poly_eval(p: MultiPoly, assignment: Mapping[str, Scalar]) -> GaussRational:
    return p.eval(assignment)


def poly_diff(p: MultiPoly, var: str) -> MultiPoly:
    return p.diff(var)
