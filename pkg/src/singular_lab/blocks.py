"""(k,i)-parity of columns, parity blocks, and singular overlinings.

Block indices used by the dotted representation count non-E blocks only,
starting at 1.  Column indices are 1-based throughout this module, matching
the way Frobenius columns are usually numbered.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import DomainError, ValidationError
from .partitions import FrobeniusSymbol

__all__ = [
    "ModulusPair",
    "Parity",
    "Block",
    "BlockDecomposition",
    "OverlinedFrobenius",
    "StartRule",
    "DottedRun",
    "DottedSymbol",
    "column_parity",
    "decompose_blocks",
    "is_singular",
    "dotted_from_overlined",
    "from_dotted",
    "dotted_configurations",
    "configuration_statistics",
    "dotted_with_statistic",
]


@dataclass(frozen=True)
class ModulusPair:
    k: int
    i: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValidationError(f"k must be at least 3, got {self.k}")
        if not 1 <= self.i <= self.k - 1:
            raise ValidationError(f"i must lie in [1, k-1], got i={self.i}, k={self.k}")

    def flipped(self) -> ModulusPair:
        """The pair ``(k, k - i)``; row swapping exchanges the two parities."""
        return ModulusPair(self.k, self.k - self.i)

    @property
    def self_dual(self) -> bool:
        """True when ``i`` and ``-i`` fall in the same residue class."""
        return 2 * self.i == self.k


class Parity(enum.Enum):
    POSITIVE = "P"
    NEGATIVE = "N"
    NEUTRAL = "0"


def column_parity(mod: ModulusPair, a: int, b: int) -> Parity:
    d = a - b
    if d >= mod.k - mod.i - 1:
        return Parity.POSITIVE
    if d <= 1 - mod.i:
        return Parity.NEGATIVE
    return Parity.NEUTRAL


@dataclass(frozen=True)
class Block:
    """Columns ``start..end`` (1-based, inclusive).

    ``kind`` is ``"E"`` for the leading neutral block and ``"P"``/``"N"``
    otherwise; ``anchor`` is the first column of a P/N block.
    """

    start: int
    end: int
    kind: str
    anchor: Optional[int] = None

    @property
    def width(self) -> int:
        return self.end - self.start + 1

    def __contains__(self, column: int) -> bool:
        return self.start <= column <= self.end


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]

    @property
    def e_block(self) -> Optional[Block]:
        if self.blocks and self.blocks[0].kind == "E":
            return self.blocks[0]
        return None

    @cached_property
    def signed(self) -> tuple[Block, ...]:
        """The P and N blocks, in order."""
        return tuple(b for b in self.blocks if b.kind != "E")

    def block_of(self, column: int) -> int:
        """Non-E index (1-based) of the block holding ``column``; 0 for E."""
        for j, b in enumerate(self.signed, start=1):
            if column in b:
                return j
        return 0

    def kinds(self) -> str:
        return "".join(b.kind for b in self.blocks)


def decompose_blocks(mod: ModulusPair, f: FrobeniusSymbol) -> BlockDecomposition:
    parities = [column_parity(mod, a, b) for a, b in zip(f.top, f.bottom)]
    blocks: list[Block] = []
    first = next((t for t, p in enumerate(parities) if p is not Parity.NEUTRAL), None)
    if first is None:
        if parities:
            blocks.append(Block(1, len(parities), "E"))
        return BlockDecomposition(tuple(blocks))
    if first > 0:
        blocks.append(Block(1, first, "E"))
    start = first
    current = parities[first]
    for t in range(first + 1, len(parities)):
        p = parities[t]
        if p is not Parity.NEUTRAL and p is not current:
            blocks.append(Block(start + 1, t, current.value, start + 1))
            start, current = t, p
    blocks.append(Block(start + 1, len(parities), current.value, start + 1))
    return BlockDecomposition(tuple(blocks))


@dataclass(frozen=True)
class OverlinedFrobenius:
    """A Frobenius symbol with at most one overlined entry per row.

    Overlines are recorded as 1-based column indices.
    """

    symbol: FrobeniusSymbol
    top_overline: Optional[int] = None
    bottom_overline: Optional[int] = None

    def __post_init__(self) -> None:
        for c in (self.top_overline, self.bottom_overline):
            if c is not None and not 1 <= c <= len(self.symbol):
                raise ValidationError(f"overline column {c} outside 1..{len(self.symbol)}")

    @property
    def overline_count(self) -> int:
        return (self.top_overline is not None) + (self.bottom_overline is not None)


def is_singular(mod: ModulusPair, o: OverlinedFrobenius) -> bool:
    top, bottom = o.top_overline, o.bottom_overline
    if top is None and bottom is None:
        return True
    dec = decompose_blocks(mod, o.symbol)
    anchors = {b.anchor: (j, b.kind) for j, b in enumerate(dec.signed, start=1)}
    if bottom is None:
        return anchors.get(top, (0, ""))[1] == "P"
    if top is None:
        return anchors.get(bottom, (0, ""))[1] == "N"
    if top not in anchors or bottom not in anchors:
        return False
    (jt, kt), (jb, kb) = anchors[top], anchors[bottom]
    return kt == "P" and kb == "N" and abs(jt - jb) == 1


class StartRule(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class DottedRun:
    """Dots on consecutive non-E blocks from the first or second one through ``end_block``."""

    start: StartRule
    end_block: int

    @property
    def first_block(self) -> int:
        return 1 if self.start is StartRule.FIRST else 2

    @property
    def size(self) -> int:
        return self.end_block - self.first_block + 1


@dataclass(frozen=True)
class DottedSymbol:
    """A singular overpartition in dotted-block form."""

    modulus: ModulusPair
    symbol: FrobeniusSymbol
    run: Optional[DottedRun] = None
    decomposition: BlockDecomposition = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        dec = decompose_blocks(self.modulus, self.symbol)
        object.__setattr__(self, "decomposition", dec)
        run = self.run
        if run is not None:
            nblocks = len(dec.signed)
            if not run.first_block <= run.end_block <= nblocks:
                raise DomainError(
                    f"dotted run {run.start.value}..{run.end_block} does not fit "
                    f"{nblocks} non-neutral blocks"
                )

    @property
    def weight(self) -> int:
        return self.symbol.weight

    @property
    def dotted_blocks(self) -> tuple[Block, ...]:
        if self.run is None:
            return ()
        return self.decomposition.signed[self.run.first_block - 1:self.run.end_block]

    @property
    def m(self) -> int:
        """Signed dot count: positive when the last dotted block is N."""
        if self.run is None:
            return 0
        last = self.decomposition.signed[self.run.end_block - 1]
        return self.run.size if last.kind == "N" else -self.run.size

    def pattern(self) -> str:
        """Block sequence with dotted blocks in lower case, e.g. ``'EPnpn'``."""
        dotted = set(id(b) for b in self.dotted_blocks)
        return "".join(b.kind.lower() if id(b) in dotted else b.kind
                       for b in self.decomposition.blocks)


def dotted_from_overlined(mod: ModulusPair, o: OverlinedFrobenius) -> DottedSymbol:
    if not is_singular(mod, o):
        raise DomainError("overlined symbol is not singular for this modulus")
    if o.overline_count == 0:
        return DottedSymbol(mod, o.symbol, None)
    dec = decompose_blocks(mod, o.symbol)
    cols = [c for c in (o.top_overline, o.bottom_overline) if c is not None]
    end = dec.block_of(max(cols))
    start = StartRule.FIRST if len(cols) == 1 else StartRule.SECOND
    return DottedSymbol(mod, o.symbol, DottedRun(start, end))


def from_dotted(d: DottedSymbol) -> OverlinedFrobenius:
    if d.run is None:
        return OverlinedFrobenius(d.symbol)
    signed = d.decomposition.signed
    marks: dict[str, int] = {}
    last = d.run.end_block
    owners = [last] if d.run.start is StartRule.FIRST else [last - 1, last]
    for j in owners:
        b = signed[j - 1]
        marks["top" if b.kind == "P" else "bottom"] = b.anchor
    if d.run.start is StartRule.SECOND and len(marks) != 2:
        raise DomainError("adjacent blocks of a two-overline run share a parity")
    return OverlinedFrobenius(d.symbol, marks.get("top"), marks.get("bottom"))


def _runs(nblocks: int) -> list[Optional[DottedRun]]:
    runs: list[Optional[DottedRun]] = [None]
    runs += [DottedRun(StartRule.FIRST, e) for e in range(1, nblocks + 1)]
    runs += [DottedRun(StartRule.SECOND, e) for e in range(2, nblocks + 1)]
    return runs


def dotted_configurations(mod: ModulusPair, f: FrobeniusSymbol) -> list[DottedSymbol]:
    """Every valid dotted run on ``f``: 1 if there are no P/N blocks, else 2B."""
    nblocks = len(decompose_blocks(mod, f).signed)
    return [DottedSymbol(mod, f, run) for run in _runs(nblocks)]


def configuration_statistics(dec: BlockDecomposition) -> list[int]:
    """Signed dot counts of all configurations, in :func:`dotted_configurations` order.

    Avoids building :class:`DottedSymbol` objects; used by the counting code.
    """
    kinds = [b.kind for b in dec.signed]
    stats = [0]
    for e in range(1, len(kinds) + 1):
        stats.append(e if kinds[e - 1] == "N" else -e)
    for e in range(2, len(kinds) + 1):
        stats.append(e - 1 if kinds[e - 1] == "N" else 1 - e)
    return stats


def dotted_with_statistic(mod: ModulusPair, f: FrobeniusSymbol, m: int) -> DottedSymbol:
    """The unique configuration on ``f`` whose signed dot count is ``m``.

    Runs of equal length ending at adjacent blocks have opposite parities, so
    the signed count picks out at most one run.
    """
    dec = decompose_blocks(mod, f)
    matches = [run for run, s in zip(_runs(len(dec.signed)), configuration_statistics(dec))
               if s == m]
    if not matches:
        raise DomainError(f"no dotted configuration with statistic {m}")
    return DottedSymbol(mod, f, matches[0])
