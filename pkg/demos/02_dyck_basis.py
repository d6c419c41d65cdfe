"""
Dyck paths and the monomial basis
=================================
"""

# %%
from quasiwreath.paths import (
    basis_monomials,
    catalan,
    closed_form_F,
    enumerate_dyck,
    minimal_transdiagonal,
    path_of,
    product_form_series,
    render_path,
)

# every exponent vector is a lattice path; Dyck vectors stay weakly above the diagonal
for eta in enumerate_dyck(3):
    print(eta, path_of(eta))

print(render_path((0, 1, 1)))

# %%
# the vectors that cross the diagonal for the first time
print(minimal_transdiagonal(3))

# %%
n, m = 3, 2
B = basis_monomials(n, m)
print(len(B), "=", m**n, "*", catalan(n))
print("F_3(t)        =", closed_form_F(3))
print("graded series =", product_form_series(n, m))
