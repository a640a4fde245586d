"""Exhaustive enumeration and counting, the product series, and a batch verifier."""
from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .bijections import (
    RestrictedOverpartition,
    andrews_forward,
    andrews_inverse,
    psi_forward,
    psi_inverse,
    weight_drop,
)
from .blocks import (
    DottedSymbol,
    ModulusPair,
    configuration_statistics,
    decompose_blocks,
    dotted_configurations,
)
from .errors import DomainError
from .partitions import Partition, enumerate_partitions, partition_count, to_frobenius
from .partitions import _partition_tuples

__all__ = [
    "SeriesTruncation",
    "VerificationRecord",
    "VerificationReport",
    "enumerate_singular",
    "count_singular",
    "singular_statistics",
    "enumerate_restricted",
    "count_restricted",
    "restricted_statistics",
    "theorem1_series",
    "verify_identities",
]


def enumerate_singular(mod: ModulusPair, n: int) -> list[DottedSymbol]:
    """Every dotted symbol of weight ``n``, partitions in enumeration order."""
    out: list[DottedSymbol] = []
    for p in enumerate_partitions(n):
        out.extend(dotted_configurations(mod, to_frobenius(p)))
    return out


@lru_cache(maxsize=None)
def _singular_stats(mod: ModulusPair, n: int) -> tuple[tuple[int, int], ...]:
    counts: Counter[int] = Counter()
    for parts in _partition_tuples(n):
        dec = decompose_blocks(mod, to_frobenius(Partition(parts)))
        counts.update(configuration_statistics(dec))
    return tuple(sorted(counts.items()))


def singular_statistics(mod: ModulusPair, n: int) -> dict[int, int]:
    """``m -> count`` of singular overpartitions of ``n`` by signed dot count."""
    return dict(_singular_stats(mod, n))


def count_singular(mod: ModulusPair, n: int, m: Optional[int] = None) -> int:
    stats = singular_statistics(mod, n)
    if m is None:
        return sum(stats.values())
    return stats.get(m, 0)


def _restricted_parts(n: int, allowed: tuple[int, ...], distinct: bool) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into the ``allowed`` parts (given in decreasing order)."""
    if n == 0:
        yield ()
        return
    for j, x in enumerate(allowed):
        if x > n:
            continue
        rest = allowed[j + 1:] if distinct else allowed[j:]
        for tail in _restricted_parts(n - x, rest, distinct):
            yield (x,) + tail


@lru_cache(maxsize=None)
def _plain_parts(k: int, w: int) -> tuple[tuple[int, ...], ...]:
    allowed = tuple(x for x in range(w, 0, -1) if x % k)
    return tuple(_restricted_parts(w, allowed, False))


@lru_cache(maxsize=None)
def _distinct_parts(k: int, residue: int, w: int) -> tuple[tuple[int, ...], ...]:
    allowed = tuple(x for x in range(w, 0, -1) if x % k == residue)
    return tuple(_restricted_parts(w, allowed, True))


def _components(mod: ModulusPair, n: int):
    """Yield ``(over_i, over_minus_i, plain)`` candidate lists for each weight split of n."""
    k, i = mod.k, mod.i
    for w1 in range(n + 1):
        for w2 in range(n - w1 + 1):
            yield (_distinct_parts(k, i, w1), _distinct_parts(k, k - i, w2),
                   _plain_parts(k, n - w1 - w2))


def _require_supported(mod: ModulusPair) -> None:
    if mod.self_dual:
        raise DomainError(f"k = 2i (k={mod.k}, i={mod.i}) is not supported")


def enumerate_restricted(mod: ModulusPair, n: int) -> list[RestrictedOverpartition]:
    """All overpartitions of ``n`` with no part divisible by k and overlines
    only on parts congruent to +-i mod k."""
    _require_supported(mod)
    out = []
    for over_i, over_mi, plain in _components(mod, n):
        for a in over_i:
            for b in over_mi:
                for c in plain:
                    out.append(RestrictedOverpartition(mod, Partition(c), Partition(a), Partition(b)))
    return out


@lru_cache(maxsize=None)
def _restricted_stats(mod: ModulusPair, n: int) -> tuple[tuple[int, int], ...]:
    counts: Counter[int] = Counter()
    for over_i, over_mi, plain in _components(mod, n):
        if not plain:
            continue
        for a in over_i:
            for b in over_mi:
                counts[len(a) - len(b)] += len(plain)
    return tuple(sorted(counts.items()))


def restricted_statistics(mod: ModulusPair, n: int) -> dict[int, int]:
    """``m -> count`` of restricted overpartitions of ``n`` by overline statistic.

    Counts come from the enumerated component lists, not from the series.
    """
    _require_supported(mod)
    return dict(_restricted_stats(mod, n))


def count_restricted(mod: ModulusPair, n: int, m: Optional[int] = None) -> int:
    stats = restricted_statistics(mod, n)
    if m is None:
        return sum(stats.values())
    return stats.get(m, 0)


@dataclass(frozen=True)
class SeriesTruncation:
    coefficients: tuple[int, ...]

    @property
    def cutoff(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> int:
        return self.coefficients[j]


def theorem1_series(mod: ModulusPair, cutoff: int) -> SeriesTruncation:
    """Coefficients up to ``q**cutoff`` of

        prod_{n>=0} (1 + q^(nk+i)) (1 + q^((n+1)k-i)) / prod_{j=1}^{k-1} (1 - q^(nk+j)).
    """
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    k, i = mod.k, mod.i
    c = [0] * (cutoff + 1)
    c[0] = 1
    for e in range(1, cutoff + 1):
        r = e % k
        if r:
            # divide by (1 - q^e): prefix sums with stride e
            for j in range(e, cutoff + 1):
                c[j] += c[j - e]
    for e in range(1, cutoff + 1):
        r = e % k
        # (1 + q^(nk+i)) and (1 + q^((n+1)k-i)); when k = 2i both factors occur
        mult = (r == i) + (r == k - i)
        for _ in range(mult):
            for j in range(cutoff, e - 1, -1):
                c[j] += c[j - e]
    return SeriesTruncation(tuple(c))


def _feasible_m(mod: ModulusPair, n: int) -> range:
    """All m with ``k*C(m,2) + i*m <= n``; every other m has count zero."""
    lo = 0
    while weight_drop(mod, lo - 1) <= n:
        lo -= 1
    hi = 0
    while weight_drop(mod, hi + 1) <= n:
        hi += 1
    return range(lo, hi + 1)


@dataclass(frozen=True)
class VerificationRecord:
    n: int
    m: int
    q_bar: int
    c_bar: Optional[int]
    p_formula: int


@dataclass
class VerificationReport:
    k: int
    i: int
    n_max: int
    records: list[VerificationRecord] = field(default_factory=list)
    verdicts: dict[str, bool] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "n_max": self.n_max,
            "ok": self.ok,
            "verdicts": dict(self.verdicts),
            "skipped": list(self.skipped),
            "failures": list(self.failures),
            "records": [
                {"n": r.n, "m": r.m, "q_bar": r.q_bar, "c_bar": r.c_bar, "p_formula": r.p_formula}
                for r in self.records
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"(k,i) = ({self.k},{self.i}), n <= {self.n_max}"]
        header = f"{'n':>4} {'m':>4} {'Q(n,m)':>10} {'C(n,m)':>10} {'p(...)':>10}"
        lines.append(header)
        lines.append("-" * len(header))
        for r in self.records:
            c = "-" if r.c_bar is None else str(r.c_bar)
            lines.append(f"{r.n:>4} {r.m:>4} {r.q_bar:>10} {c:>10} {r.p_formula:>10}")
        lines.append("")
        for name, verdict in self.verdicts.items():
            lines.append(f"{name:<24} {'PASS' if verdict else 'FAIL'}")
        for note in self.skipped:
            lines.append(f"skipped: {note}")
        for note in self.failures:
            lines.append(f"failure: {note}")
        return "\n".join(lines)


def _check_weight(mod: ModulusPair, n: int, series_coeff: int) -> dict:
    """All checks for a single weight; returns plain data so it can cross processes."""
    supported = not mod.self_dual
    q_stats = singular_statistics(mod, n)
    c_stats = restricted_statistics(mod, n) if supported else {}
    failures: list[str] = []
    records = []
    for m in _feasible_m(mod, n):
        q = q_stats.get(m, 0)
        c = c_stats.get(m, 0) if supported else None
        p = partition_count(n - weight_drop(mod, m))
        records.append((n, m, q, c, p))
    stray = set(q_stats) - set(_feasible_m(mod, n))
    if supported:
        stray |= set(c_stats) - set(_feasible_m(mod, n))
    refined = all(q == p for _, _, q, _, p in records) and not stray
    if not refined:
        failures.append(f"n={n}: refined singular count disagrees with p(n - kC(m,2) - im)")
    total = sum(q_stats.values())
    series = total == series_coeff
    if not series:
        failures.append(f"n={n}: singular total {total} != series coefficient {series_coeff}")
    restricted = True
    if supported:
        restricted = all(q == c for _, _, q, c, _ in records) and set(q_stats) == set(c_stats)
        if not restricted:
            failures.append(f"n={n}: singular and restricted refined counts differ")
    roundtrip = True
    for d in enumerate_singular(mod, n):
        try:
            if d.m and psi_inverse(mod, d.m, psi_forward(d)) != d:
                roundtrip = False
            if supported and andrews_inverse(andrews_forward(d)) != d:
                roundtrip = False
        except (DomainError, AssertionError) as exc:
            roundtrip = False
            failures.append(f"n={n}: {type(exc).__name__}: {exc}")
        if not roundtrip:
            failures.append(f"n={n}: roundtrip failed on {d}")
            break
    if supported and roundtrip:
        for r in enumerate_restricted(mod, n):
            if andrews_forward(andrews_inverse(r)) != r:
                roundtrip = False
                failures.append(f"n={n}: inverse roundtrip failed on {r}")
                break
    return {
        "records": records,
        "refined": refined,
        "series": series,
        "restricted": restricted,
        "roundtrip": roundtrip,
        "failures": failures,
    }


def _check_weight_task(args: tuple[int, int, int, int]) -> dict:
    k, i, n, coeff = args
    return _check_weight(ModulusPair(k, i), n, coeff)


def verify_identities(mod: ModulusPair, n_max: int, workers: Optional[int] = None) -> VerificationReport:
    """Check the refined count formula, the series, the restricted counts and
    bijection roundtrips for every n <= n_max.

    ``workers`` > 1 spreads weights over processes; results are merged in
    order of n, so the report does not depend on scheduling.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    series = theorem1_series(mod, n_max)
    tasks = [(mod.k, mod.i, n, series[n]) for n in range(n_max + 1)]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_weight_task, tasks))
    else:
        results = [_check_weight_task(t) for t in tasks]

    report = VerificationReport(mod.k, mod.i, n_max)
    names = ("refined", "series", "restricted", "roundtrip")
    verdicts = {name: True for name in names}
    for res in results:
        report.records.extend(VerificationRecord(*r) for r in res["records"])
        report.failures.extend(res["failures"])
        for name in names:
            verdicts[name] = verdicts[name] and res[name]
    report.verdicts = {
        "refined_formula": verdicts["refined"],
        "series_total": verdicts["series"],
        "restricted_refined": verdicts["restricted"],
        "bijection_roundtrip": verdicts["roundtrip"],
    }
    if mod.self_dual:
        report.skipped.append("restricted_refined: k = 2i, restricted overpartitions are not defined")
    return report


def default_workers() -> Optional[int]:
    """Worker count from ``SINGULAR_LAB_THREADS``, if set."""
    value = os.environ.get("SINGULAR_LAB_THREADS")
    if not value:
        return None
    return max(1, int(value))
