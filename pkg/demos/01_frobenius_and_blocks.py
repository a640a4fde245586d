"""Partitions, Frobenius symbols and (k,i)-parity blocks."""
# %%
from singular_lab import (
    FrobeniusSymbol,
    ModulusPair,
    OverlinedFrobenius,
    Partition,
    conjugate,
    decompose_blocks,
    dotted_configurations,
    dotted_from_overlined,
    from_frobenius,
    is_singular,
    to_frobenius,
)

# %% [markdown]
# A partition and its Frobenius symbol: arm and leg lengths along the diagonal.

# %%
p = Partition((7, 5, 5, 3, 2, 2, 1))
f = to_frobenius(p)
print(p, "->", f.top, "/", f.bottom)
print("back:", from_frobenius(f).parts)
print("conjugate swaps the rows:", to_frobenius(conjugate(p)) == f.swap_rows())

# %% [markdown]
# Columns are positive, negative or neutral relative to (k,i).  Leading
# neutral columns form the E block; after that, blocks start at an anchor
# and alternate P/N.

# %%
sym = FrobeniusSymbol(
    (31, 28, 27, 25, 23, 18, 16, 14, 13, 9, 8, 7, 6, 4, 1, 0),
    (30, 28, 25, 24, 20, 19, 16, 15, 12, 10, 8, 7, 4, 3, 2, 0),
)
for mod in (ModulusPair(5, 2), ModulusPair(3, 1)):
    dec = decompose_blocks(mod, sym)
    print((mod.k, mod.i), [(b.start, b.end, b.kind) for b in dec.blocks])

# %% [markdown]
# Overlining anchors under the singularity rules is the same thing as
# choosing a run of dotted blocks.  Four signed blocks give eight runs.

# %%
mod = ModulusPair(5, 2)
for d in dotted_configurations(mod, sym):
    print(f"{d.pattern():6} m={d.m:+d}")

o = OverlinedFrobenius(sym, top_overline=13, bottom_overline=15)
print("singular:", is_singular(mod, o), "->", dotted_from_overlined(mod, o).pattern())
