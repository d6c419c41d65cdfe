"""Lexicographic Groebner bases of homogeneous ideals over Q, truncated by degree.

For homogeneous input, everything the ideal contains in degree <= D is
decided by S-pairs whose lcm has degree <= D, so the computation stops
there.  Pairs beyond the horizon are counted in ``skipped_pairs``.
"""

from __future__ import annotations

import heapq
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Echelon
from .paths import HilbertSeries
from .poly import Poly, monomials_of_degree

__all__ = [
    "GroebnerBasis",
    "divides",
    "reduce",
    "s_polynomial",
    "buchberger_truncated",
    "reduce_basis",
    "standard_monomials",
    "substitute_basis",
    "quotient_hilbert_linear",
]

Exponent = tuple[int, ...]


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _check_rational(p: Poly):
    if p.order != 1:
        raise ValueError("Groebner computations are over the rationals (order 1)")


def _normal_form(terms: dict, basis: list[tuple[Exponent, dict]]) -> dict:
    """Full reduction of ``terms`` by monic ``basis`` entries ``(lm, terms)``."""
    p = dict(terms)
    rem = {}
    while p:
        lm = max(p)
        c = p.pop(lm)
        for glm, g in basis:
            if divides(glm, lm):
                shift = tuple(x - y for x, y in zip(lm, glm))
                for e, v in g.items():
                    if e == glm:
                        continue
                    e2 = tuple(x + y for x, y in zip(e, shift))
                    s = p.get(e2, 0) - c * v
                    if s:
                        p[e2] = s
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[lm] = c
    return rem


def _monic_terms(terms: dict) -> dict:
    lc = terms[max(terms)]
    if lc == 1:
        return terms
    return {e: v / lc for e, v in terms.items()}


@dataclass
class GroebnerBasis:
    nvars: int
    generators: tuple[Poly, ...]
    truncation_degree: int
    reduced: bool = False
    skipped_pairs: int = 0
    claimed: bool = False  # True when asserted by substitution rather than computed

    def __post_init__(self):
        self.generators = tuple(self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_monomials(self) -> list[Exponent]:
        return sorted((g.leading_monomial() for g in self.generators), reverse=True)

    def _pairs(self):
        return [(g.leading_monomial(), g.terms) for g in self.generators]

    def normal_form(self, p: Poly) -> Poly:
        return reduce(p, list(self.generators))

    def hilbert_series(self, max_deg: int | None = None) -> HilbertSeries:
        per_degree = standard_monomials(self, max_deg)
        return HilbertSeries(tuple(len(level) for level in per_degree))

    def to_text(self) -> str:
        gens = sorted(self.generators, key=lambda g: g.leading_monomial(), reverse=True)
        return "\n".join(str(g) for g in gens)

    def to_dict(self) -> dict:
        gens = sorted(self.generators, key=lambda g: g.leading_monomial(), reverse=True)
        return {
            "n": self.nvars,
            "truncation_degree": self.truncation_degree,
            "reduced": self.reduced,
            "skipped_pairs": self.skipped_pairs,
            "generators": [
                {
                    "leading_monomial": list(g.leading_monomial()),
                    "terms": [[list(e), str(c)] for e, c in g.items()],
                }
                for g in gens
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "GroebnerBasis":
        n = data["n"]
        gens = [
            Poly(n, {tuple(e): Fraction(c) for e, c in g["terms"]}) for g in data["generators"]
        ]
        return cls(
            n,
            gens,
            data["truncation_degree"],
            reduced=data.get("reduced", False),
            skipped_pairs=data.get("skipped_pairs", 0),
        )


def reduce(p: Poly, basis) -> Poly:
    """Normal form of P modulo the list of polynomials ``basis``.

    No monomial of the result is divisible by a leading monomial of
    ``basis`` and P minus the result lies in the ideal they generate.
    """
    _check_rational(p)
    pairs = []
    for g in basis:
        if not g.is_zero():
            _check_rational(g)
            m = g.monic()
            pairs.append((m.leading_monomial(), m.terms))
    return Poly._raw(p.nvars, _normal_form(p.terms, pairs), 1)


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """lcm/LT(f) * f - lcm/LT(g) * g, both sides normalized to be monic."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    fm, gm = f.monic(), g.monic()
    lf, lg = fm.leading_monomial(), gm.leading_monomial()
    lcm = _lcm(lf, lg)
    a = fm.mul_monomial(tuple(x - y for x, y in zip(lcm, lf)))
    b = gm.mul_monomial(tuple(x - y for x, y in zip(lcm, lg)))
    return a - b


STRATEGIES = ("normal", "fifo")


def buchberger_truncated(
    gens,
    max_deg: int,
    *,
    nvars: int | None = None,
    strategy: str = "normal",
    reduced: bool = True,
) -> GroebnerBasis:
    """Groebner basis of the ideal generated by homogeneous ``gens``, valid up to ``max_deg``.

    ``strategy="normal"`` handles pairs by lcm degree, then lcm in lex order;
    ``"fifo"`` handles them in creation order.  Pairs with coprime leading
    monomials are dropped (first Buchberger criterion).
    """
    gens = [g for g in gens if not g.is_zero()]
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required when there are no generators")
        nvars = gens[0].nvars
    for g in gens:
        _check_rational(g)
        if not g.is_homogeneous():
            raise ValueError(f"generator is not homogeneous: {g}")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")

    counter = itertools.count()
    queue: list = []

    def push(deg, lex, item):
        if strategy == "normal":
            key = (deg, lex)
        else:
            key = ()
        heapq.heappush(queue, (key, next(counter), item))

    for g in gens:
        d = g.degree()
        if d <= max_deg:
            push(d, g.leading_monomial(), ("gen", g.terms))

    basis: list[tuple[Exponent, dict]] = []
    skipped = 0
    while queue:
        _, _, item = heapq.heappop(queue)
        if item[0] == "gen":
            h = item[1]
        else:
            _, i, j = item
            (li, fi), (lj, fj) = basis[i], basis[j]
            lcm = _lcm(li, lj)
            si = tuple(x - y for x, y in zip(lcm, li))
            sj = tuple(x - y for x, y in zip(lcm, lj))
            h = {}
            for e, v in fi.items():
                h[tuple(x + y for x, y in zip(e, si))] = v
            for e, v in fj.items():
                e2 = tuple(x + y for x, y in zip(e, sj))
                s = h.get(e2, 0) - v
                if s:
                    h[e2] = s
                else:
                    h.pop(e2, None)
        h = _normal_form(h, basis)
        if not h:
            continue
        h = _monic_terms(h)
        lm = max(h)
        k = len(basis)
        for i, (li, _) in enumerate(basis):
            if _coprime(li, lm):
                continue
            lcm = _lcm(li, lm)
            d = sum(lcm)
            if d > max_deg:
                skipped += 1
                continue
            push(d, lcm, ("pair", i, k))
        basis.append((lm, h))

    result = GroebnerBasis(
        nvars,
        [Poly._raw(nvars, t, 1) for _, t in basis],
        max_deg,
        reduced=False,
        skipped_pairs=skipped,
    )
    return reduce_basis(result) if reduced else result


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The reduced (monic, inter-reduced) basis with the same truncation degree."""
    items = sorted(
        ((g.leading_monomial(), g.monic().terms) for g in gb.generators if not g.is_zero()),
        key=lambda t: (sum(t[0]), t[0]),
    )
    minimal: list[tuple[Exponent, dict]] = []
    for lm, t in items:
        if any(divides(l2, lm) for l2, _ in minimal):
            continue
        minimal.append((lm, t))
    out = []
    for idx, (lm, t) in enumerate(minimal):
        others = [p for j, p in enumerate(minimal) if j != idx]
        tail = {e: v for e, v in t.items() if e != lm}
        red = _normal_form(tail, others)
        red[lm] = Fraction(1)
        out.append(Poly._raw(gb.nvars, red, 1))
    out.sort(key=lambda g: g.leading_monomial(), reverse=True)
    return GroebnerBasis(
        gb.nvars,
        out,
        gb.truncation_degree,
        reduced=True,
        skipped_pairs=gb.skipped_pairs,
        claimed=gb.claimed,
    )


def standard_monomials(gb: GroebnerBasis, max_deg: int | None = None) -> list[list[Exponent]]:
    """Per degree 0..max_deg, the monomials divisible by no leading monomial."""
    if max_deg is None:
        max_deg = gb.truncation_degree
    if max_deg > gb.truncation_degree:
        raise ValueError(
            f"degree {max_deg} is past the truncation degree {gb.truncation_degree}"
        )
    lms = gb.leading_monomials()
    return [
        [nu for nu in monomials_of_degree(gb.nvars, k) if not any(divides(l, nu) for l in lms)]
        for k in range(max_deg + 1)
    ]


def substitute_basis(gb: GroebnerBasis, m: int) -> GroebnerBasis:
    """Apply X -> X^m to every generator; the result is only *claimed* to be a basis."""
    return GroebnerBasis(
        gb.nvars,
        [g.substitute_power(m) for g in gb.generators],
        m * gb.truncation_degree,
        reduced=gb.reduced,
        claimed=True,
    )


def quotient_hilbert_linear(gens, max_deg: int, nvars: int | None = None) -> HilbertSeries:
    """dim of (Q[X]/I)_k for k <= max_deg by exact row reduction.

    The degree-k part of I is spanned by the products (monomial) * g over
    generators g of degree <= k; its rank is subtracted from the number of
    degree-k monomials.  No Groebner code is involved.
    """
    gens = [g for g in gens if not g.is_zero()]
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required when there are no generators")
        nvars = gens[0].nvars
    for g in gens:
        _check_rational(g)
        if not g.is_homogeneous():
            raise ValueError(f"generator is not homogeneous: {g}")
    counts = []
    for k in range(max_deg + 1):
        ncols = len(monomials_of_degree(nvars, k))
        ech = Echelon(ncols)
        for g in gens:
            d = g.degree()
            if d > k:
                continue
            for u in monomials_of_degree(nvars, k - d):
                if ech.full():
                    break
                ech.add(g.mul_monomial(u).terms)
            if ech.full():
                break
        counts.append(ncols - ech.rank)
    return HilbertSeries(tuple(counts))
