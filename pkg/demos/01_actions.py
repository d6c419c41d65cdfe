"""
Two actions of G(n, m) on polynomials
=====================================

The classical action substitutes zeta^c_i * x_sigma(i) for x_i.  The
quasi action keeps the shape of each monomial and only slides its support.
"""

# %%
from quasiwreath import ColoredPermutation, act, parse_poly
from quasiwreath.actions import average, is_invariant
from quasiwreath.qsym import is_quasi_invariant

g = ColoredPermutation.parse("sigma=[3,1,2] colors=[1,0,1] m=3")
p = parse_poly("x1^2*x2", 3, 3)

print("g           :", g)
print("quasi  g.P  :", act("quasi", g, p))
print("classic g.P :", act("classical", g, p))

# %%
# Averaging over the whole group gives an invariant.  For the quasi action
# that invariant is quasi-symmetric in the m-th powers.
q = average(3, 2, "quasi", parse_poly("x1^2*x2^2 + x3", 3, 2))
print(q)
print("invariant:", is_invariant(3, 2, "quasi", q, full=True))
print("quasi-symmetric in x^2:", is_quasi_invariant(q, 2))

# %%
# A near miss: quasi-symmetric shape, but an exponent not divisible by m.
r = parse_poly("x1*x2 + x1*x3 + x2*x3", 3, 2)
print(is_invariant(3, 2, "quasi", r, full=True), is_quasi_invariant(r, 2))
