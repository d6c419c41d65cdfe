"""Quasi-symmetrizing action of G(n, m) and its super-coinvariant space.

Exact arithmetic throughout: rationals via ``fractions.Fraction`` and
cyclotomic fields via residues modulo cyclotomic polynomials.
"""

from .actions import ActionKind, act, average, c_of_K, classical_act, is_invariant, quasi_act
from .exact import Cyclotomic, cyclotomic_polynomial, root_of_unity
from .group import ColoredPermutation, ResourceCapError, enumerate_group, group_order
from .groebner import (
    GroebnerBasis,
    buchberger_truncated,
    quotient_hilbert_linear,
    reduce,
    reduce_basis,
    s_polynomial,
    standard_monomials,
    substitute_basis,
)
from .harness import orthogonal_dimension, run_verification
from .paths import (
    HilbertSeries,
    basis_monomials,
    closed_form_F,
    enumerate_dyck,
    hilbert_from_basis,
    is_dyck,
    minimal_transdiagonal,
    path_of,
)
from .poly import Poly, diff_pairing, lex_compare, parse_poly
from .qsym import (
    compositions,
    elementary_symmetric,
    is_quasi_invariant,
    is_quasi_symmetric,
    monomial_qsym,
    qinv_generators,
)

__version__ = "0.1.0"
