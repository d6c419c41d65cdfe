"""Exact scalars: rationals (``fractions.Fraction``) and the cyclotomic field Q(zeta_m).

A cyclotomic number is stored as its residue modulo the m-th cyclotomic
polynomial, as a tuple of ``deg(Phi_m)`` rational coefficients in the power
basis ``1, z, ..., z^(d-1)``.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "Fraction",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "root_of_unity",
    "coerce",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_neg",
    "cyclo_eq",
]

Scalar = Union[int, Fraction, "Cyclotomic"]


def _divmod_int_poly(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # ascending coefficient lists; den must be monic
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    quot = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            quot[k - dq] = c
            for j, d in enumerate(den):
                num[k - dq + j] -= c * d
    rem = num[:dq] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    target = [-1] + [0] * (m - 1) + [1]  # z^m - 1
    for d in range(1, m):
        if m % d == 0:
            target, rem = _divmod_int_poly(target, list(_cyclotomic(d)))
            assert not any(rem), "inexact cyclotomic division"
    return tuple(target)


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of Phi_m, lowest degree first (``[1, -1, 1]`` is z^2 - z + 1)."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {m!r}")
    return list(_cyclotomic(m))


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    # residues of z^k mod Phi_m for 0 <= k < 2*deg - 1
    phi = _cyclotomic(m)
    d = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for _ in range(max(2 * d - 1, 1)):
        rows.append(tuple(cur))
        # multiply by z and reduce: z^d = -sum_{j<d} phi_j z^j
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [c - top * phi[j] for j, c in enumerate(cur)]
    return tuple(rows)


class Cyclotomic:
    """Element of Q(zeta_m), kept reduced modulo Phi_m."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 1:
            raise ValueError("order must be >= 1")
        d = len(_cyclotomic(order)) - 1
        vals = [Fraction(c) for c in (coeffs or ())]
        if len(vals) > d:
            vals = _reduce(order, vals)
        vals += [Fraction(0)] * (d - len(vals))
        self.order = order
        self.coeffs = tuple(vals)

    @classmethod
    def _make(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, order: int, value) -> "Cyclotomic":
        d = len(_cyclotomic(order)) - 1
        return cls._make(order, (Fraction(value),) + (Fraction(0),) * (d - 1))

    def _lift(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._make(
            self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._make(
            self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._make(self.order, tuple(a * other for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        d = len(self.coeffs)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic._make(self.order, tuple(_reduce(self.order, prod)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.from_rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse, by solving the linear system of multiplication-by-self."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        d = len(self.coeffs)
        # columns: self * z^j
        cols = []
        for j in range(d):
            zj = [Fraction(0)] * d
            zj[j] = Fraction(1)
            cols.append((self * Cyclotomic._make(self.order, tuple(zj))).coeffs)
        aug = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            p = next(r for r in range(c, d) if aug[r][c] != 0)
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [v / piv for v in aug[c]]
            for r in range(d):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
        return Cyclotomic._make(self.order, tuple(row[-1] for row in aug))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def power_of_zeta(self) -> tuple[int, int] | None:
        """Return ``(sign, k)`` with ``self == sign * zeta^k`` if such a pair exists."""
        for k in range(self.order):
            z = root_of_unity(self.order, k)
            if z.coeffs == self.coeffs:
                return 1, k
            if tuple(-c for c in z.coeffs) == self.coeffs:
                return -1, k
        return None

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        pz = self.power_of_zeta()
        if pz is not None:
            sign, k = pz
            body = "z" if k == 1 else f"z^{k}"
            return body if sign > 0 else "-" + body
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(c)
            if mono and mag == 1:
                s = mono
            elif mono:
                s = f"{mag}*{mono}"
            else:
                s = str(mag)
            if not parts:
                parts.append(s if c > 0 else "-" + s)
            else:
                parts.append(("+ " if c > 0 else "- ") + s)
        return " ".join(parts)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"


def _reduce(m: int, coeffs: list) -> list:
    table = _power_table(m)
    d = len(table[0])
    if len(coeffs) > len(table):
        # long product; fold with repeated reduction
        phi = _cyclotomic(m)
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                coeffs[k] = 0
                for j in range(d):
                    coeffs[k - d + j] -= c * phi[j]
        return [Fraction(c) for c in coeffs[:d]]
    out = [Fraction(0)] * d
    for k, c in enumerate(coeffs):
        if c:
            row = table[k]
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
    return out


def root_of_unity(m: int, k: int) -> Cyclotomic:
    """zeta_m ** (k mod m) as an exact residue."""
    if m < 1:
        raise ValueError("m must be >= 1")
    k %= m
    d = len(_cyclotomic(m)) - 1
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    if k < d:
        return Cyclotomic(m, coeffs)
    return Cyclotomic._make(m, tuple(_reduce(m, [Fraction(c) for c in coeffs])))


def coerce(value, order: int):
    """Bring a scalar into the coefficient domain of the given order.

    Order 1 is the rational field and yields a ``Fraction``; any other
    order yields a ``Cyclotomic``.
    """
    if order == 1:
        if isinstance(value, Cyclotomic):
            if value.order != 1 and not value.is_rational():
                raise ValueError(f"{value} does not lie in Q")
            return value.coeffs[0]
        return Fraction(value)
    if isinstance(value, Cyclotomic):
        if value.order != order:
            if value.is_rational():
                return Cyclotomic.from_rational(order, value.coeffs[0])
            raise ValueError(f"mixed cyclotomic orders {value.order} and {order}")
        return value
    return Cyclotomic.from_rational(order, value)


def cyclo_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyclo_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyclo_neg(a: Cyclotomic) -> Cyclotomic:
    return -a


def cyclo_eq(a: Cyclotomic, b: Cyclotomic) -> bool:
    if a.order != b.order:
        raise ValueError(f"mixed cyclotomic orders {a.order} and {b.order}")
    return a == b
