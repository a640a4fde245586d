"""Counting by enumeration and checking the product generating function."""
# %%
from singular_lab import (
    ModulusPair,
    count_restricted,
    count_singular,
    partition_count,
    theorem1_series,
    verify_identities,
)
from singular_lab.bijections import weight_drop
from singular_lab.census import singular_statistics

mod = ModulusPair(3, 1)

# %% [markdown]
# Refined by the signed dot count m, the count is a single partition number.

# %%
for n in range(8):
    stats = singular_statistics(mod, n)
    row = {m: (c, partition_count(n - weight_drop(mod, m))) for m, c in sorted(stats.items())}
    print(n, row)

# %% [markdown]
# Totals against the product side and the restricted overpartitions.

# %%
s = theorem1_series(mod, 15)
print([s[n] for n in range(16)])
print([count_singular(mod, n) for n in range(16)])
print([count_restricted(mod, n) for n in range(16)])

# %%
report = verify_identities(ModulusPair(5, 2), 10)
print(report.to_table().splitlines()[-4:])
