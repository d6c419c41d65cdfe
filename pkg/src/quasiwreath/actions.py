"""Classical and quasi-symmetrizing actions of G(n, m) on polynomials.

Both actions are substitutions ``x_i -> (stuff involving x_sigma(i))`` and
therefore compose contravariantly in the matrix product::

    g . (h . P) == (h @ g) . P

i.e. they are right actions written on the left.  Invariants, averages and
orbits are unaffected.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .exact import coerce, root_of_unity
from .group import (
    ColoredPermutation,
    enumerate_group,
    group_generators,
    group_order,
)
from .poly import Poly

__all__ = [
    "ActionKind",
    "c_of_K",
    "quasi_act",
    "classical_act",
    "act",
    "average",
    "is_invariant",
]


class ActionKind(enum.Enum):
    CLASSICAL = "classical"
    QUASI = "quasi"


def c_of_K(K, m: int) -> int:
    """0 when every exponent is a multiple of m (vacuously for K = ()), else 1."""
    return 0 if all(k % m == 0 for k in K) else 1


def _check_domain(g: ColoredPermutation, p: Poly):
    if p.nvars != g.n:
        raise ValueError(f"polynomial has {p.nvars} variables, group element acts on {g.n}")
    if p.order != g.m and not (g.m == 1 and p.order == 1):
        raise ValueError(
            f"coefficients of order {p.order} do not match G({g.n},{g.m}); "
            f"use Poly.with_order({g.m})"
        )


def quasi_act(g: ColoredPermutation, p: Poly) -> Poly:
    """g * A^K = w(g)^c(K) * ((A . |g|^T) sorted)^K, extended linearly.

    The support of each monomial is moved by |g|, re-sorted into increasing
    variable order, and the exponent list K is reattached positionally.
    """
    _check_domain(g, p)
    n, sigma = g.n, g.sigma
    w = g.weight()
    terms: dict = {}
    for e, c in p.terms.items():
        support = [i for i in range(n) if e[i]]
        K = [e[i] for i in support]
        image = sorted(sigma[i] for i in support)
        new = [0] * n
        for j, k in zip(image, K):
            new[j] = k
        new = tuple(new)
        coeff = c * w if c_of_K(K, g.m) else c
        s = terms.get(new)
        terms[new] = coeff if s is None else s + coeff
    return Poly._raw(n, {e: c for e, c in terms.items() if c}, p.order)


def classical_act(g: ColoredPermutation, p: Poly) -> Poly:
    """g . P(X) = P(X . g^T): substitute zeta^colors[i] * x_sigma(i) for x_i."""
    _check_domain(g, p)
    n, sigma, colors = g.n, g.sigma, g.colors
    terms: dict = {}
    for e, c in p.terms.items():
        new = [0] * n
        twist = 0
        for i in range(n):
            new[sigma[i]] = e[i]
            twist += colors[i] * e[i]
        new = tuple(new)
        twist %= g.m
        coeff = c * coerce(root_of_unity(g.m, twist), p.order) if twist else c
        s = terms.get(new)
        terms[new] = coeff if s is None else s + coeff
    return Poly._raw(n, {e: c for e, c in terms.items() if c}, p.order)


def act(kind: ActionKind | str, g: ColoredPermutation, p: Poly) -> Poly:
    kind = ActionKind(kind)
    if kind is ActionKind.QUASI:
        return quasi_act(g, p)
    return classical_act(g, p)


def average(n: int, m: int, kind: ActionKind | str, p: Poly, cap: int | None = None) -> Poly:
    """Reynolds operator: (1/|G|) * sum over g of g acting on P."""
    kind = ActionKind(kind)
    total = Poly.zero(n, p.order)
    for g in enumerate_group(n, m, cap):
        total = total + act(kind, g, p)
    return total / Fraction(group_order(n, m))


def is_invariant(
    n: int,
    m: int,
    kind: ActionKind | str,
    p: Poly,
    *,
    full: bool = False,
    cap: int | None = None,
) -> bool:
    """True iff g acting on P gives P for every g in G(n, m).

    By default only the generators (adjacent transpositions plus one color
    twist) are tested; ``full=True`` walks the whole group.
    """
    kind = ActionKind(kind)
    elements = enumerate_group(n, m, cap) if full else group_generators(n, m)
    return all(act(kind, g, p) == p for g in elements)
