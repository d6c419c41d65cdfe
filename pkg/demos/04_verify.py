"""
Cross-checking dim = m^n * C_n
==============================

Same report the ``quasiwreath verify`` command prints.
"""

# %%
from quasiwreath.harness import chevalley_series, default_matrix, run_verification

print(run_verification(2, 2).to_text())

# %%
for n, m in default_matrix():
    rep = run_verification(n, m, routes=["basis", "groebner", "formula"])
    print(f"G({n},{m})", rep.status, rep.series("basis") and sum(rep.series("basis")))

# %%
# classical coinvariants for comparison: m^n * n!
series, horizon = chevalley_series(3, 3)
print(series.total(), series.format())
