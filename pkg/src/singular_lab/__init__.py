"""Exact combinatorics of (k,i)-singular overpartitions.

Partitions and Frobenius symbols, parity blocks, Dyson/shift/Wright maps,
the dotted-block bijection psi and its composition with the Wright map, and
exhaustive counting against the product generating function.
"""
from .bijections import (
    PsiTrace,
    RestrictedOverpartition,
    andrews_forward,
    andrews_inverse,
    gamma_trace,
    psi_forward,
    psi_inverse,
)
from .blocks import (
    BlockDecomposition,
    DottedRun,
    DottedSymbol,
    ModulusPair,
    OverlinedFrobenius,
    Parity,
    StartRule,
    column_parity,
    decompose_blocks,
    dotted_configurations,
    dotted_from_overlined,
    from_dotted,
    is_singular,
)
from .census import (
    count_restricted,
    count_singular,
    enumerate_restricted,
    enumerate_singular,
    theorem1_series,
    verify_identities,
)
from .errors import DomainError, InvariantError, ValidationError
from .maps import (
    WrightInput,
    WrightOutput,
    dyson,
    dyson_frobenius,
    dyson_inverse,
    shift,
    shifted_conjugate,
    wright_forward,
    wright_inverse,
)
from .partitions import (
    FrobeniusSymbol,
    Partition,
    conjugate,
    enumerate_partitions,
    from_frobenius,
    partition_count,
    scale,
    to_frobenius,
    union,
)

__version__ = "0.1.0"
