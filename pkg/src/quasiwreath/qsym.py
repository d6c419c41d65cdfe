"""Compositions, monomial quasi-symmetric polynomials and quasi-invariance."""

from __future__ import annotations

import itertools
import math
from collections import defaultdict

from .poly import Poly

__all__ = [
    "composition_of",
    "compositions",
    "monomial_qsym",
    "is_quasi_symmetric",
    "is_quasi_invariant",
    "desubstitute",
    "qinv_generators",
    "elementary_symmetric",
    "parse_composition",
]

Composition = tuple[int, ...]


def composition_of(nu) -> Composition:
    """Drop the zero entries of an exponent vector, keeping order."""
    return tuple(a for a in nu if a)


def _compositions_exact(d: int, k: int):
    # compositions of d into exactly k positive parts, lex ascending
    if k == 0:
        if d == 0:
            yield ()
        return
    for first in range(1, d - k + 2):
        for rest in _compositions_exact(d - first, k - 1):
            yield (first,) + rest


def compositions(d: int, max_parts: int | None = None) -> list[Composition]:
    """All compositions of d with at most ``max_parts`` parts.

    Ordered by number of parts, then lexicographically:
    ``compositions(3, 2) == [(3,), (1, 2), (2, 1)]``.
    """
    if d == 0:
        return [()]
    top = d if max_parts is None else min(d, max_parts)
    return [c for k in range(1, top + 1) for c in _compositions_exact(d, k)]


def monomial_qsym(alpha, n: int, order: int = 1) -> Poly:
    """M_alpha in n variables: sum of x_{i1}^a1 ... x_{ik}^ak over i1 < ... < ik."""
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    if len(alpha) > n:
        raise ValueError(f"composition {alpha} has more parts than {n} variables")
    terms = {}
    for idx in itertools.combinations(range(n), len(alpha)):
        e = [0] * n
        for i, a in zip(idx, alpha):
            e[i] = a
        terms[tuple(e)] = 1
    return Poly(n, terms, order)


def is_quasi_symmetric(p: Poly) -> bool:
    """Coefficients constant on composition classes (absent members count as 0)."""
    classes = defaultdict(list)
    for e, c in p.terms.items():
        classes[composition_of(e)].append(c)
    for alpha, coeffs in classes.items():
        if len(coeffs) != math.comb(p.nvars, len(alpha)):
            return False
        if any(c != coeffs[0] for c in coeffs):
            return False
    return True


def desubstitute(p: Poly, m: int) -> Poly | None:
    """Q with Q(X^m) = P, or None when some exponent is not a multiple of m."""
    terms = {}
    for e, c in p.terms.items():
        if any(a % m for a in e):
            return None
        terms[tuple(a // m for a in e)] = c
    return Poly._raw(p.nvars, terms, p.order)


def is_quasi_invariant(p: Poly, m: int) -> bool:
    """P = Q(x1^m, ..., xn^m) for some quasi-symmetric Q."""
    q = desubstitute(p, m)
    return q is not None and is_quasi_symmetric(q)


def qinv_generators(n: int, m: int, max_deg: int, order: int = 1) -> list[Poly]:
    """M_alpha(X^m) for every composition alpha with 1 <= m|alpha| <= max_deg.

    Sorted by degree.  These span the positive-degree quasi-invariants
    degree by degree, hence generate the ideal they span.
    """
    gens = []
    for d in range(1, max_deg // m + 1):
        for alpha in compositions(d, n):
            gens.append(monomial_qsym(alpha, n, order).substitute_power(m))
    return gens


def elementary_symmetric(k: int, n: int, order: int = 1) -> Poly:
    if not 0 <= k <= n:
        raise ValueError(f"e_{k} undefined in {n} variables")
    terms = {}
    for idx in itertools.combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return Poly(n, terms, order)


def parse_composition(text: str) -> Composition:
    body = text.strip().strip("()[]")
    if not body:
        return ()
    return tuple(int(v) for v in body.split(",") if v.strip())
