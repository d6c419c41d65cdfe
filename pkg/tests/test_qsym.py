import itertools
import math
import random

import pytest

from quasiwreath.actions import average, is_invariant
from quasiwreath.exact import root_of_unity
from quasiwreath.linalg import exact_rank
from quasiwreath.poly import Poly, parse_poly
from quasiwreath.qsym import (
    composition_of,
    compositions,
    desubstitute,
    elementary_symmetric,
    is_quasi_invariant,
    is_quasi_symmetric,
    monomial_qsym,
    parse_composition,
    qinv_generators,
)


def test_composition_of():
    assert composition_of((2, 1, 0, 3, 0, 1)) == (2, 1, 3, 1)
    assert composition_of((0, 0, 0)) == ()
    assert composition_of((5,)) == (5,)


def test_compositions_examples():
    assert compositions(3, 2) == [(3,), (1, 2), (2, 1)]
    assert compositions(0, 3) == [()]
    assert len(compositions(4, 4)) == 8


def _brute_compositions(d, k):
    # every tuple of positive parts with sum d and length <= k
    out = set()
    for length in range(1, k + 1):
        for parts in itertools.product(range(1, d + 1), repeat=length):
            if sum(parts) == d:
                out.add(parts)
    return out


@pytest.mark.parametrize("d,k", [(d, k) for d in range(1, 7) for k in range(1, 5)])
def test_compositions_brute_force(d, k):
    got = compositions(d, k)
    assert len(got) == len(set(got))
    assert set(got) == _brute_compositions(d, k)


def test_monomial_qsym():
    assert monomial_qsym((2, 1), 3) == parse_poly("x1^2*x2 + x1^2*x3 + x2^2*x3", 3)
    assert monomial_qsym((1,), 2) == parse_poly("x1 + x2", 2)
    assert monomial_qsym((), 4) == Poly.constant(4, 1)
    assert len(monomial_qsym((1, 2), 5)) == math.comb(5, 2)
    with pytest.raises(ValueError):
        monomial_qsym((1, 1, 1), 2)


def test_is_quasi_symmetric():
    assert is_quasi_symmetric(monomial_qsym((1, 3), 4))
    assert not is_quasi_symmetric(parse_poly("x1^2*x2 + x2^2*x3", 3))
    sym = parse_poly("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2", 3)
    assert is_quasi_symmetric(sym)
    assert is_quasi_symmetric(Poly.zero(2))


def test_is_quasi_invariant():
    assert is_quasi_invariant(parse_poly("x1^2 + x2^2", 2), 2)
    assert not is_quasi_invariant(parse_poly("x1 + x2", 2), 2)
    assert is_quasi_invariant(Poly.constant(3, 7), 3)
    assert desubstitute(parse_poly("x1^3", 1), 2) is None


def test_qinv_generators_examples():
    g = qinv_generators(2, 1, 2)
    assert set(g) == {monomial_qsym((1,), 2), monomial_qsym((2,), 2), monomial_qsym((1, 1), 2)}
    assert qinv_generators(1, 2, 4) == [parse_poly("x1^2", 1), parse_poly("x1^4", 1)]
    assert qinv_generators(2, 3, 2) == []


def test_elementary_symmetric():
    assert elementary_symmetric(2, 2) == parse_poly("x1*x2", 2)
    assert elementary_symmetric(0, 3) == Poly.constant(3, 1)
    assert len(elementary_symmetric(2, 4)) == 6
    with pytest.raises(ValueError):
        elementary_symmetric(3, 2)


def test_parse_composition():
    assert parse_composition("(2,1,3)") == (2, 1, 3)
    assert parse_composition("()") == ()


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(0, 6))
def test_qsym_slice_dimension(n, d):
    rows = [monomial_qsym(a, n).terms for a in compositions(d, n)]
    assert exact_rank(rows) == len(compositions(d, n))


def test_generators_are_quasi_invariant():
    for n, m in [(2, 2), (3, 2), (2, 3), (3, 3)]:
        for g in qinv_generators(n, m, 3 * m, order=m):
            assert is_invariant(n, m, "quasi", g)
            assert is_quasi_invariant(g, m)


def test_m1_generators_span_qsym():
    for n in range(1, 4):
        gens = qinv_generators(n, 1, 4)
        for d in range(1, 5):
            in_degree = [g.terms for g in gens if g.degree() == d]
            full = [monomial_qsym(a, n).terms for a in compositions(d, n)]
            assert exact_rank(in_degree) == exact_rank(full) == exact_rank(in_degree + full)


def test_quasi_invariance_equivalence_small(rng):
    for n, m in [(2, 2), (2, 3), (3, 2)]:
        for _ in range(10):
            terms = {
                tuple(rng.randint(0, 2) * (m if rng.random() < 0.7 else 1) for _ in range(n)): rng.choice(
                    [1, -2, root_of_unity(m, 1)]
                )
                for _ in range(3)
            }
            p = Poly(n, terms, m)
            if rng.random() < 0.5:
                p = average(n, m, "quasi", p)
            assert is_quasi_invariant(p, m) == is_invariant(n, m, "quasi", p, full=True)
