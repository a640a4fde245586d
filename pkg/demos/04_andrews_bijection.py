"""Singular overpartitions to overpartitions with no part divisible by k."""
# %%
from singular_lab import (
    DottedRun,
    DottedSymbol,
    FrobeniusSymbol,
    ModulusPair,
    Partition,
    StartRule,
    andrews_forward,
    andrews_inverse,
    dotted_configurations,
    to_frobenius,
)

mod = ModulusPair(5, 2)
sym = FrobeniusSymbol(
    (31, 28, 27, 25, 23, 18, 16, 14, 13, 9, 8, 7, 6, 4, 1, 0),
    (30, 28, 25, 24, 20, 19, 16, 15, 12, 10, 8, 7, 4, 3, 2, 0),
)
lam = DottedSymbol(mod, sym, DottedRun(StartRule.SECOND, 4))

# %% [markdown]
# psi first, then the multiples of k are pulled out and unpacked by the
# inverse Wright map into overlined parts congruent to +-i.

# %%
pi = andrews_forward(lam)
print("plain:", pi.plain.parts)
print("overlined = 2 mod 5:", pi.over_i.parts)
print("overlined = 3 mod 5:", pi.over_minus_i.parts)
print("weight", pi.weight, "statistic", pi.m)
print("inverse:", andrews_inverse(pi) == lam)

# %% [markdown]
# Small case: every dotted symbol of weight 6 and its image.

# %%
for p in [Partition((3, 2, 1)), Partition((4, 2))]:
    for d in dotted_configurations(mod, to_frobenius(p)):
        r = andrews_forward(d)
        marks = " ".join(f"{x}'" if over else str(x) for x, over in r.parts())
        print(f"{str(p.parts):10} {d.pattern():4} -> {marks}")
