"""Dyson map, shifts and the modified Wright map."""
# %%
from singular_lab import (
    FrobeniusSymbol,
    ModulusPair,
    Partition,
    WrightInput,
    dyson,
    dyson_frobenius,
    dyson_inverse,
    shift,
    shifted_conjugate,
    to_frobenius,
    wright_forward,
    wright_inverse,
)

# %% [markdown]
# d_r removes the first column of the diagram and adds a row of length
# r - 1 + (number of parts).  Weight goes up by r - 1.

# %%
p = Partition((2, 2, 1))
q = dyson(-1, p)
print(p.parts, "->", q.parts, "| inverse:", dyson_inverse(-1, q).parts)
print("symbol-level casework agrees:", dyson_frobenius(-1, to_frobenius(p)) == to_frobenius(q))

# %% [markdown]
# s_u moves u cells from the top row to the bottom row of every column;
# c_u swaps the rows first.  Both keep the weight.

# %%
d3 = FrobeniusSymbol((18, 16, 14, 13, 9, 8, 7), (19, 16, 15, 12, 10, 8, 7))
print(shift(5, d3))
print(shifted_conjugate(2, FrobeniusSymbol((6, 4), (4, 3))))

# %% [markdown]
# The Wright map packs two sets of distinct parts, one per residue class,
# into a partition into multiples of k plus the length difference m.

# %%
mod = ModulusPair(5, 2)
out = wright_forward(WrightInput(Partition((37, 27, 22, 7)), Partition((18, 13)), mod))
print(out.kappa.parts, "m =", out.m)
w = wright_inverse(mod, Partition((5,) * 6), 3)
print(w.mu1.parts, w.mu2.parts)
