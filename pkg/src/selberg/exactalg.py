"""Exact polynomials and rational functions in the indeterminates a, b, r.

``r`` stands for rho.  Polynomials are sparse maps from exponent triples
``(i, j, k)`` (powers of a, b, r) to rational coefficients; the storage
is sympy's sparse polynomial ring over QQ so that rational functions can
be reduced by a true multivariate gcd after every operation.

Canonical text form: terms in decreasing lexicographic order on
``(i, j, k)``, written ``coeff*a^i*b^j*r^k`` with unit coefficients and
zero exponents omitted.  A rational function is ``num / den``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

import mpmath
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

_RING, _A, _B, _R = ring("a,b,r", QQ)

VARS = ("a", "b", "r")
Monomial = tuple[int, int, int]
Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """A denominator vanished at an evaluation point (or division by zero)."""


def _qq(x: Scalar):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class Poly:
    """Sparse polynomial in a, b, r with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Scalar | None = None):
        if terms is None:
            self._p = _RING.zero
        elif isinstance(terms, Mapping):
            self._p = _RING.from_dict({tuple(m): _qq(c) for m, c in terms.items() if c})
        else:
            self._p = _RING(_qq(terms))

    @classmethod
    def _wrap(cls, p) -> "Poly":
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._wrap({"a": _A, "b": _B, "r": _R, "rho": _R}[name])

    def terms(self) -> dict[Monomial, Fraction]:
        return {m: _frac(c) for m, c in self._p.items()}

    def is_zero(self) -> bool:
        return not self._p

    def is_constant(self) -> bool:
        return self._p.is_ground

    def constant(self) -> Fraction:
        return _frac(self._p.get(_RING.zero_monom, QQ.zero))

    def degree(self) -> int:
        return max((sum(m) for m in self._p.keys()), default=0)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self._p + other._p)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self._p - other._p)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(other._p - self._p)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self._p * other._p)

    __rmul__ = __mul__

    def __neg__(self) -> "Poly":
        return Poly._wrap(-self._p)

    def __pow__(self, n: int) -> "Poly":
        return Poly._wrap(self._p**n)

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms().items())))

    def __call__(self, a, b, r):
        return self.eval((a, b, r))

    def eval(self, point):
        """Substitute numbers for (a, b, r).

        Rational inputs give an exact Fraction; anything else is evaluated
        in mpmath at the current working precision.
        """
        exact = all(isinstance(x, (int, Rational)) for x in point)
        if exact:
            pa, pb, pr = (Fraction(x) for x in point)
            total = Fraction(0)
        else:
            pa, pb, pr = (mpmath.mpf(x) if not isinstance(x, mpmath.mpf) else x for x in point)
            total = mpmath.mpf(0)
        for (i, j, k), c in self._p.items():
            c = _frac(c) if exact else mpmath.mpf(int(c.numerator)) / int(c.denominator)
            total += c * pa**i * pb**j * pr**k
        return total

    def shift_a(self, m: int) -> "Poly":
        if m == 0 or not self._p:
            return self
        return Poly._wrap(self._p.compose(_A, _A + m))

    def subs(self, name: str, value) -> "Poly":
        """Substitute a constant or another Poly for one indeterminate."""
        gen = {"a": _A, "b": _B, "r": _R, "rho": _R}[name]
        value = _as_poly(value)
        return Poly._wrap(self._p.compose(gen, value._p))

    def __str__(self) -> str:
        return format_poly(self.terms())

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly(x)
    return NotImplemented


def _content(p) -> tuple[int, int]:
    """(gcd of numerators, lcm of denominators) over the coefficients of p."""
    g, l = 0, 1
    for c in p.values():
        g = math.gcd(g, int(c.numerator))
        l = l * int(c.denominator) // math.gcd(l, int(c.denominator))
    return g, l


class RF:
    """A rational function ``num / den`` kept in lowest terms.

    Canonical form: gcd(num, den) = 1, both have integer coefficients with
    joint content 1, and the lex-leading coefficient of den is positive.
    Equal functions therefore have identical representations.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num=0, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RF expects Poly, int or Fraction arguments")
        self._n, self._d = _canonical(num._p, den._p)

    @classmethod
    def _raw(cls, n, d) -> "RF":
        obj = cls.__new__(cls)
        obj._n, obj._d = _canonical(n, d)
        return obj

    @classmethod
    def var(cls, name: str) -> "RF":
        return cls(Poly.var(name))

    @property
    def num(self) -> Poly:
        return Poly._wrap(self._n)

    @property
    def den(self) -> Poly:
        return Poly._wrap(self._d)

    def is_zero(self) -> bool:
        return not self._n

    def is_constant(self) -> bool:
        return self._n.is_ground and self._d.is_ground

    def as_fraction(self) -> Fraction | None:
        """The value as a Fraction if constant, else None."""
        if not self.is_constant():
            return None
        return self.num.constant() / self.den.constant()

    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if self._d == other._d:
            return RF._raw(self._n + other._n, self._d)
        if other._d.is_ground and other._d == 1:
            return RF._raw(self._n + other._n * self._d, self._d)
        g, d1, d2 = self._d.cofactors(other._d)
        return RF._raw(self._n * d2 + other._n * d1, d1 * other._d)

    __radd__ = __add__

    def __neg__(self) -> "RF":
        obj = RF.__new__(RF)
        obj._n, obj._d = -self._n, self._d
        return obj

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if not self._n or not other._n:
            return RF()
        # cross-cancel first so the products stay small
        _, n1, d2 = self._n.cofactors(other._d)
        _, n2, d1 = other._n.cofactors(self._d)
        return RF._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if not other._n:
            raise PoleError("division by the zero rational function")
        inv = RF.__new__(RF)
        inv._n, inv._d = other._d, other._n
        return self * inv

    def __rtruediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int) -> "RF":
        if n < 0:
            return RF(1) / self**(-n)
        return RF._raw(self._n**n, self._d**n)

    def __eq__(self, other) -> bool:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return rf_eq(self, other)

    def __hash__(self) -> int:
        return hash(str(self))

    def eval(self, point):
        """Evaluate at numeric (a, b, r); raises PoleError on a zero denominator."""
        d = Poly._wrap(self._d).eval(point)
        if d == 0:
            raise PoleError(f"denominator {Poly._wrap(self._d)} vanishes at {tuple(point)}")
        return Poly._wrap(self._n).eval(point) / d

    def shift_a(self, m: int) -> "RF":
        if m == 0:
            return self
        return RF._raw(self._n.compose(_A, _A + m), self._d.compose(_A, _A + m))

    def subs(self, name: str, value) -> "RF":
        """Substitute a constant or Poly for one indeterminate."""
        num = self.num.subs(name, value)
        den = self.den.subs(name, value)
        if den.is_zero():
            raise PoleError(f"denominator vanishes under {name} -> {value}")
        return RF(num, den)

    def __str__(self) -> str:
        return format_rf(self)

    def __repr__(self) -> str:
        return f"RF({str(self)!r})"


def _as_rf(x):
    if isinstance(x, RF):
        return x
    if isinstance(x, Poly):
        return RF(x)
    if isinstance(x, (int, Fraction)):
        return RF(x)
    return NotImplemented


def _canonical(n, d):
    if not d:
        raise PoleError("zero denominator")
    if not n:
        return _RING.zero, _RING.one
    if not d.is_ground:
        _, n, d = n.cofactors(d)
    g_n, l_n = _content(n)
    g_d, l_d = _content(d)
    g = math.gcd(g_n, g_d)
    l = l_n * l_d // math.gcd(l_n, l_d)
    scale = Fraction(l, g)
    if d.LC < 0:
        scale = -scale
    if scale != 1:
        s = _qq(scale)
        n = n.mul_ground(s)
        d = d.mul_ground(s)
    return n, d


# -- operations named in the module contract ---------------------------------


def rf_eq(f: RF, g: RF) -> bool:
    """Exact equality by cross-multiplication."""
    return f._n * g._d == g._n * f._d


def rf_eval(f: RF, params) -> Fraction | mpmath.mpf:
    """Evaluate at an object with ``a, b, rho`` attributes or an (a, b, rho) triple."""
    if hasattr(params, "rho"):
        point = (params.a, params.b, params.rho)
    else:
        point = tuple(params)
    return f.eval(point)


def rf_shift_a(f: RF, m: int) -> RF:
    if m < 0:
        raise ValueError("shift must be non-negative")
    return f.shift_a(m)


def pochhammer_rf(x, n: int) -> RF:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    x = _as_rf(x)
    out = RF(1)
    for t in range(n):
        out = out * (x + t)
    return out


A = RF.var("a")
B = RF.var("b")
RHO = RF.var("r")
ONE = RF(1)
ZERO = RF(0)


# -- serialization ------------------------------------------------------------


def _format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(terms: Mapping[Monomial, Fraction]) -> str:
    items = sorted(((m, c) for m, c in terms.items() if c), reverse=True)
    if not items:
        return "0"
    out = []
    for idx, (m, c) in enumerate(items):
        mono = _format_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _format_factored(p: Poly, parens: bool) -> str:
    terms = p.terms()
    if len(terms) <= 1:
        return format_poly(terms)
    g = 0
    for c in terms.values():
        g = math.gcd(g, c.numerator)
    lead = max(terms)
    if terms[lead] < 0:
        g = -g
    body = format_poly({m: c / g for m, c in terms.items()})
    if g == 1:
        return f"({body})" if parens else body
    if g == -1:
        return f"-({body})"
    return f"{g}*({body})"


def format_rf(f: RF) -> str:
    """Human-readable canonical form, e.g. ``3*(a + 2*r) / (a + b + 4*r)``."""
    if f.is_constant():
        return str(f.as_fraction())
    den = f.den
    if den.is_constant() and den.constant() == 1:
        return _format_factored(f.num, parens=False)
    den_s = _format_factored(den, parens=True)
    if "*" in den_s and not (den_s.startswith("(") and den_s.endswith(")") and "*(" not in den_s):
        den_s = f"({den_s})"
    return f"{_format_factored(f.num, parens=True)} / {den_s}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(rho|[abr])|(\^)|([-+*/()]))")


class _Parser:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            pos = m.end()
            num, name, caret, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", caret or op))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> RF:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        value = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RF:
        value = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.power()
            value = value * rhs if op == "*" else value / rhs
        return value

    def power(self) -> RF:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            base = base**e
        return base

    def atom(self) -> RF:
        kind, val = self.take()
        if kind == "num":
            return RF(val)
        if kind == "var":
            return RF.var(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.atom()
        raise ValueError(f"unexpected token {val!r}")


def parse_rf(text: str) -> RF:
    """Parse any rational expression in a, b, r (or rho) with ``+ - * / ^``."""
    p = _Parser(text)
    value = p.expr()
    if p.i != len(p.tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value


def parse_poly(text: str) -> Poly:
    f = parse_rf(text)
    if not f.den.is_constant():
        raise ValueError(f"{text!r} is not a polynomial")
    return Poly._wrap(f._n.mul_ground(QQ(1) / f._d.LC))
