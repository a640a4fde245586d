"""Partitions, Frobenius symbols and the partition function.

A :class:`Partition` is a weakly decreasing tuple of positive integers and a
:class:`FrobeniusSymbol` is a pair of strictly decreasing rows of
nonnegative integers.  Both are immutable and validated on construction;
use :meth:`Partition.from_parts` when you have an unsorted multiset.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ValidationError

__all__ = [
    "Partition",
    "FrobeniusSymbol",
    "to_frobenius",
    "from_frobenius",
    "conjugate",
    "scale",
    "union",
    "partition_count",
    "enumerate_partitions",
    "concat",
]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        for j, x in enumerate(parts):
            if x < 1:
                raise ValidationError(f"parts must be positive, got {x}")
            if j and parts[j - 1] < x:
                raise ValidationError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from an arbitrary multiset of positive parts."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def rank(self) -> int:
        """Largest part minus number of parts; 0 for the empty partition."""
        if not self.parts:
            return 0
        return self.parts[0] - len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, j: int) -> int:
        return self.parts[j]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two strictly decreasing rows of nonnegative integers of equal length."""

    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        top = tuple(int(x) for x in self.top)
        bottom = tuple(int(x) for x in self.bottom)
        if len(top) != len(bottom):
            raise ValidationError(f"rows have unequal lengths: {top} / {bottom}")
        for row in (top, bottom):
            if row and row[-1] < 0:
                raise ValidationError(f"entries must be nonnegative: {row}")
            for j in range(1, len(row)):
                if row[j - 1] <= row[j]:
                    raise ValidationError(f"row is not strictly decreasing: {row}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def weight(self) -> int:
        return sum(self.top) + sum(self.bottom) + len(self.top)

    @property
    def rank(self) -> int:
        """Rank of the first column (``top[0] - bottom[0]``), 0 when empty."""
        if not self.top:
            return 0
        return self.top[0] - self.bottom[0]

    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))

    def swap_rows(self) -> FrobeniusSymbol:
        return FrobeniusSymbol(self.bottom, self.top)

    def split(self, t: int) -> tuple[FrobeniusSymbol, FrobeniusSymbol]:
        """Split into the first ``t`` columns and the rest."""
        return (
            FrobeniusSymbol(self.top[:t], self.bottom[:t]),
            FrobeniusSymbol(self.top[t:], self.bottom[t:]),
        )

    def columns_between(self, start: int, end: int) -> FrobeniusSymbol:
        """Columns ``start..end`` inclusive, 1-based."""
        return FrobeniusSymbol(self.top[start - 1:end], self.bottom[start - 1:end])

    def __len__(self) -> int:
        return len(self.top)

    def __bool__(self) -> bool:
        return bool(self.top)

    def __repr__(self) -> str:
        return f"FrobeniusSymbol({list(self.top)} / {list(self.bottom)})"


def concat(*symbols: FrobeniusSymbol) -> FrobeniusSymbol:
    """Juxtapose symbols column-wise; the result must itself be a valid symbol."""
    top: list[int] = []
    bottom: list[int] = []
    for s in symbols:
        top.extend(s.top)
        bottom.extend(s.bottom)
    return FrobeniusSymbol(tuple(top), tuple(bottom))


def conjugate(p: Partition) -> Partition:
    if not p:
        return Partition()
    cols = [0] * p.parts[0]
    for x in p.parts:
        for j in range(x):
            cols[j] += 1
    return Partition(tuple(cols))


def to_frobenius(p: Partition) -> FrobeniusSymbol:
    parts = p.parts
    durfee = 0
    while durfee < len(parts) and parts[durfee] >= durfee + 1:
        durfee += 1
    conj = conjugate(p).parts
    top = tuple(parts[t] - t - 1 for t in range(durfee))
    bottom = tuple(conj[t] - t - 1 for t in range(durfee))
    return FrobeniusSymbol(top, bottom)


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    durfee = len(f)
    # column lengths inside the Durfee square's columns
    col_len = [b + t + 1 for t, b in enumerate(f.bottom)]
    parts = [a + t + 1 for t, a in enumerate(f.top)]
    row = durfee + 1
    while durfee and col_len[0] >= row:
        parts.append(sum(1 for c in col_len if c >= row))
        row += 1
    return Partition(tuple(parts))


def scale(c: int, p: Partition) -> Partition:
    """Multiply every part by ``c``."""
    if c < 1:
        raise ValueError(f"scale factor must be positive, got {c}")
    return Partition(tuple(c * x for x in p.parts))


def union(p: Partition, q: Partition) -> Partition:
    return Partition.from_parts(p.parts + q.parts)


_P_TABLE: list[int] = [1]
_P_LOCK = threading.Lock()


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` (0 for negative ``n``).

    Euler's pentagonal recurrence, memoised in a module-level table.
    """
    if n < 0:
        return 0
    table = _P_TABLE
    if n < len(table):
        return table[n]
    with _P_LOCK:
        _extend_table(table, n)
    return table[n]


def _extend_table(table: list[int], n: int) -> None:
    for m in range(len(table), n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * table[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            j += 1
        table.append(total)


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_descending(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    ``(n)`` comes first and ``(1, 1, ..., 1)`` last.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return [Partition(t) for t in _partition_tuples(n)]
