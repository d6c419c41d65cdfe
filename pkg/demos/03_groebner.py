"""
Truncated Groebner bases and the substitution X -> X^m
======================================================
"""

# %%
from quasiwreath.groebner import buchberger_truncated, substitute_basis
from quasiwreath.harness import groebner_basis_for
from quasiwreath.poly import parse_poly

gb = groebner_basis_for(3, 1)
print(gb.to_text())
print("leading monomials:", gb.leading_monomials())

# %%
gb2 = groebner_basis_for(3, 2)
print("m=2 leading monomials:", gb2.leading_monomials())
print("series:", gb2.hilbert_series().format())

# %%
# computing after the substitution or substituting the result: same basis
S = [parse_poly("x1^2 - x1*x2", 2), parse_poly("x1*x2^2 + x2^3", 2)]
base = buchberger_truncated(S, 6, nvars=2)
direct = buchberger_truncated([s.substitute_power(3) for s in S], 18, nvars=2)
claimed = substitute_basis(base, 3)
print(direct.generators == claimed.generators)
for g in claimed:
    print(" ", g)
