"""The dotted-block bijection psi on a weight-469 symbol, step by step."""
# %%
from singular_lab import (
    DottedRun,
    DottedSymbol,
    FrobeniusSymbol,
    ModulusPair,
    StartRule,
    gamma_trace,
    psi_forward,
    psi_inverse,
)
from singular_lab.bijections import weight_drop

mod = ModulusPair(5, 2)
sym = FrobeniusSymbol(
    (31, 28, 27, 25, 23, 18, 16, 14, 13, 9, 8, 7, 6, 4, 1, 0),
    (30, 28, 25, 24, 20, 19, 16, 15, 12, 10, 8, 7, 4, 3, 2, 0),
)
lam = DottedSymbol(mod, sym, DottedRun(StartRule.SECOND, 4))
print(lam.pattern(), "weight", lam.weight, "m", lam.m)

# %% [markdown]
# The symbol is cut into pieces D_1..D_{m+1}.  Each step glues the next
# piece (shifted or shifted-conjugated) onto a Dyson image of the previous
# result, and every lemma condition is asserted as it goes.

# %%
trace = gamma_trace(lam)
for v, g in enumerate(trace.gammas, start=1):
    print(f"Gamma_{v}: {g.top} / {g.bottom}")
print(trace.checks, "inline checks passed")

# %%
mu = psi_forward(lam)
print("weight", mu.weight, "=", lam.weight, "-", weight_drop(mod, 3))
print("inverse recovers the symbol:", psi_inverse(mod, 3, mu) == lam)
