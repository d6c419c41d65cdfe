"""Sparse multivariate polynomials with exact coefficients.

Terms are kept in a dict mapping exponent tuples to nonzero coefficients.
Python's tuple comparison *is* the lexicographic order on exponent vectors
(``x1 > x2 > ... > xn``), so leading monomials are plain ``max`` calls.

The coefficient domain is tagged by ``order``: 1 means rationals
(``Fraction`` coefficients), ``m >= 2`` means Q(zeta_m).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .exact import Cyclotomic, coerce, root_of_unity

__all__ = [
    "Poly",
    "lex_compare",
    "monomials_of_degree",
    "diff_pairing",
    "apply_differential",
    "parse_poly",
    "format_monomial",
]

Exponent = tuple[int, ...]


def lex_compare(nu: Iterable[int], mu: Iterable[int]) -> int:
    """Return 1, 0 or -1 as ``nu`` is lex-greater, equal or smaller than ``mu``.

    ``nu > mu`` iff the first nonzero entry of ``nu - mu`` is positive.
    """
    nu, mu = tuple(nu), tuple(mu)
    if len(nu) != len(mu):
        raise ValueError(f"length mismatch: {len(nu)} vs {len(mu)}")
    for a, b in zip(nu, mu):
        if a != b:
            return 1 if a > b else -1
    return 0


@lru_cache(maxsize=None)
def _monomials(n: int, k: int) -> tuple[Exponent, ...]:
    if n == 0:
        return ((),) if k == 0 else ()
    if n == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in _monomials(n - 1, k - first):
            out.append((first,) + rest)
    return tuple(out)


def monomials_of_degree(n: int, k: int) -> list[Exponent]:
    """All exponent vectors of length n and total degree k, lex-descending."""
    if k < 0:
        return []
    return list(_monomials(n, k))


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables.

    >>> x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    >>> str((x1 + x2) * (x1 - x2))
    'x1^2 - x2^2'
    """

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, terms=None, order: int = 1):
        self.nvars = nvars
        self.order = order
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = coerce(c, order)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, nvars: int, terms: dict, order: int) -> "Poly":
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.order = order
        obj.terms = terms
        return obj

    # constructors
    @classmethod
    def zero(cls, nvars: int, order: int = 1) -> "Poly":
        return cls._raw(nvars, {}, order)

    @classmethod
    def constant(cls, nvars: int, value=1, order: int = 1) -> "Poly":
        return cls(nvars, {(0,) * nvars: value}, order)

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff=1, order: int = 1) -> "Poly":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coeff}, order)

    @classmethod
    def variable(cls, nvars: int, index: int, order: int = 1) -> "Poly":
        """The variable x_{index+1} (0-based ``index``)."""
        exp = [0] * nvars
        exp[index] = 1
        return cls.monomial(exp, 1, order)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exponent: Iterable[int]):
        return self.terms.get(tuple(exponent), coerce(0, self.order))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def monomials(self) -> list[Exponent]:
        """Exponent vectors present, lex-descending."""
        return sorted(self.terms, reverse=True)

    def items(self) -> Iterator[tuple[Exponent, object]]:
        for e in self.monomials():
            yield e, self.terms[e]

    def leading_monomial(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_term(self) -> tuple[Exponent, object]:
        lm = self.leading_monomial()
        return lm, self.terms[lm]

    def leading_coefficient(self):
        return self.leading_term()[1]

    # arithmetic
    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.order != other.order:
            raise ValueError(
                f"coefficient domain mismatch: order {self.order} vs {other.order}"
            )

    def _as_poly(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.nvars, other, self.order)

    def __add__(self, other):
        other = self._as_poly(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(self.nvars, terms, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-self._as_poly(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar) -> "Poly":
        s = coerce(scalar, self.order)
        if not s:
            return Poly.zero(self.nvars, self.order)
        return Poly._raw(self.nvars, {e: c * s for e, c in self.terms.items()}, self.order)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in terms.items() if c}, self.order)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, scalar):
        if isinstance(scalar, Poly):
            return NotImplemented
        return self.scale(1 / Fraction(scalar))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.nvars, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exponent: Exponent, coeff=1) -> "Poly":
        c0 = coerce(coeff, self.order)
        return Poly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exponent)): c * c0 for e, c in self.terms.items()},
            self.order,
        )

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.nvars == other.nvars
                and self.order == other.order
                and self.terms == other.terms
            )
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self == Poly.constant(self.nvars, other, self.order)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.order, frozenset(self.terms.items())))

    # transformations
    def substitute_power(self, m: int) -> "Poly":
        """P(x1^m, ..., xn^m)."""
        if m < 1:
            raise ValueError("m must be positive")
        return Poly._raw(
            self.nvars,
            {tuple(m * a for a in e): c for e, c in self.terms.items()},
            self.order,
        )

    def with_order(self, order: int) -> "Poly":
        """Re-tag into another coefficient domain (coefficients must fit)."""
        return Poly(self.nvars, {e: c for e, c in self.terms.items()}, order)

    def monic(self) -> "Poly":
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        if isinstance(lc, Cyclotomic):
            inv = lc.inverse()
            return Poly._raw(self.nvars, {e: c * inv for e, c in self.terms.items()}, self.order)
        return Poly._raw(self.nvars, {e: c / lc for e, c in self.terms.items()}, self.order)

    # text
    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = format_monomial(e)
            neg, body = _format_coeff(c)
            if mono == "1":
                term = body if body else "1"
            elif body:
                term = f"{body}*{mono}"
            else:
                term = mono
            if not out:
                out.append("-" + term if neg else term)
            else:
                out.append(("- " if neg else "+ ") + term)
        return " ".join(out)

    def __repr__(self):
        return f"Poly({self.nvars}, '{self}', order={self.order})"


def format_monomial(exponent: Iterable[int]) -> str:
    parts = []
    for i, a in enumerate(exponent):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts) if parts else "1"


def _format_coeff(c) -> tuple[bool, str]:
    """(is_negative, magnitude text); empty text means a unit coefficient."""
    if isinstance(c, Cyclotomic) and not c.is_rational():
        pz = c.power_of_zeta()
        if pz is not None:
            sign, k = pz
            return sign < 0, ("(z)" if k == 1 else f"(z^{k})")
        return False, f"({c})"
    q = c.coeffs[0] if isinstance(c, Cyclotomic) else c
    neg = q < 0
    q = abs(q)
    if q == 1:
        return neg, ""
    if q.denominator == 1:
        return neg, str(q.numerator)
    return neg, f"({q})"


def diff_pairing(p: Poly, q: Poly):
    """<P, Q> = P(d/dX) Q(X) evaluated at X = 0.

    On monomials <X^nu, X^mu> = delta(nu, mu) * prod(nu_i!), extended bilinearly.
    """
    p._check(q)
    total = coerce(0, p.order)
    small, big = (p, q) if len(p) <= len(q) else (q, p)
    for e, c in small.terms.items():
        d = big.terms.get(e)
        if d is not None:
            w = 1
            for a in e:
                w *= math.factorial(a)
            total = total + c * d * w
    return total


def apply_differential(q: Poly, p: Poly) -> Poly:
    """Q(d/dX) applied to P, as a polynomial."""
    q._check(p)
    terms: dict = {}
    for eq, cq in q.terms.items():
        for ep, cp in p.terms.items():
            if all(a <= b for a, b in zip(eq, ep)):
                w = 1
                for a, b in zip(eq, ep):
                    w *= math.perm(b, a)
                e = tuple(b - a for a, b in zip(eq, ep))
                v = cq * cp * w
                s = terms.get(e)
                terms[e] = v if s is None else s + v
    return Poly._raw(p.nvars, {e: c for e, c in terms.items() if c}, p.order)


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(z)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, nvars: int, order: int):
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if not mt or mt.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            pos = mt.end()
            num, var, zed, op = mt.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif var is not None:
                idx = int(var)
                if not 1 <= idx <= nvars:
                    raise ValueError(f"variable x{idx} outside x1..x{nvars}")
                self.toks.append(("var", idx - 1))
            elif zed is not None:
                self.toks.append(("z", None))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
        self.i = 0
        self.nvars = nvars
        self.order = order

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ValueError(f"expected {op!r}")

    def parse(self) -> Poly:
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input at token {self.peek()}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.degree() > 0:
                    raise ValueError("division by a non-constant")
                c = q.coefficient((0,) * self.nvars)
                if isinstance(c, Cyclotomic):
                    p = p * Poly.constant(self.nvars, c.inverse(), self.order)
                else:
                    p = p / c
        return p

    def unary(self) -> Poly:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            return base ** val
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.constant(self.nvars, val, self.order)
        if kind == "var":
            return Poly.variable(self.nvars, val, self.order)
        if kind == "z":
            if self.order == 1:
                return Poly.constant(self.nvars, 1, 1)
            return Poly.constant(self.nvars, root_of_unity(self.order, 1), self.order)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text: str, nvars: int | None = None, order: int = 1) -> Poly:
    """Parse the text form produced by ``str(Poly)``.

    ``z`` denotes the primitive root of unity of the given order.  When
    ``nvars`` is omitted it is the largest variable index that occurs.
    """
    if nvars is None:
        idx = [int(v) for v in re.findall(r"x(\d+)", text)]
        nvars = max(idx, default=1)
    return _Parser(text, nvars, order).parse()
