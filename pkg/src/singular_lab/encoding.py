"""JSON encodings of the package's value types.

Partitions are arrays, Frobenius symbols are ``{"top": [...], "bottom": [...]}``
and the richer objects carry their modulus as ``"k"`` and ``"i"`` keys.
"""
from __future__ import annotations

from typing import Any

from .bijections import PsiTrace, RestrictedOverpartition
from .blocks import (
    BlockDecomposition,
    DottedRun,
    DottedSymbol,
    ModulusPair,
    OverlinedFrobenius,
    StartRule,
)
from .errors import ValidationError
from .partitions import FrobeniusSymbol, Partition


def partition_to_json(p: Partition) -> list[int]:
    return list(p.parts)


def partition_from_json(data: Any) -> Partition:
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ValidationError("a partition is encoded as an array of integers")
    return Partition(tuple(data))


def frobenius_to_json(f: FrobeniusSymbol) -> dict:
    return {"top": list(f.top), "bottom": list(f.bottom)}


def frobenius_from_json(data: Any) -> FrobeniusSymbol:
    try:
        return FrobeniusSymbol(tuple(data["top"]), tuple(data["bottom"]))
    except (KeyError, TypeError):
        raise ValidationError('a Frobenius symbol needs "top" and "bottom" arrays') from None


def decomposition_to_json(dec: BlockDecomposition) -> list[dict]:
    return [
        {"start": b.start, "end": b.end, "kind": b.kind, "anchor": b.anchor}
        for b in dec.blocks
    ]


def overlined_to_json(o: OverlinedFrobenius) -> dict:
    out = frobenius_to_json(o.symbol)
    out["top_overline"] = o.top_overline
    out["bottom_overline"] = o.bottom_overline
    return out


def overlined_from_json(data: Any) -> OverlinedFrobenius:
    return OverlinedFrobenius(frobenius_from_json(data), data.get("top_overline"),
                              data.get("bottom_overline"))


def modulus_from_json(data: Any) -> ModulusPair:
    try:
        return ModulusPair(int(data["k"]), int(data["i"]))
    except (KeyError, TypeError):
        raise ValidationError('missing "k" or "i"') from None


def dotted_to_json(d: DottedSymbol) -> dict:
    out = {"k": d.modulus.k, "i": d.modulus.i}
    out.update(frobenius_to_json(d.symbol))
    if d.run is None:
        out["dots"] = {"start": None, "end_block": 0}
    else:
        out["dots"] = {"start": d.run.start.value, "end_block": d.run.end_block}
    return out


def dotted_from_json(data: Any) -> DottedSymbol:
    mod = modulus_from_json(data)
    sym = frobenius_from_json(data)
    dots = data.get("dots") or {}
    start = dots.get("start")
    if start is None:
        return DottedSymbol(mod, sym, None)
    try:
        rule = StartRule(start)
    except ValueError:
        raise ValidationError(f'dots.start must be "first", "second" or null, got {start!r}') from None
    return DottedSymbol(mod, sym, DottedRun(rule, int(dots["end_block"])))


def restricted_to_json(r: RestrictedOverpartition) -> dict:
    return {
        "k": r.modulus.k,
        "i": r.modulus.i,
        "plain": list(r.plain.parts),
        "over_i": list(r.over_i.parts),
        "over_minus_i": list(r.over_minus_i.parts),
    }


def restricted_from_json(data: Any) -> RestrictedOverpartition:
    mod = modulus_from_json(data)
    return RestrictedOverpartition(
        mod,
        partition_from_json(data.get("plain", [])),
        partition_from_json(data.get("over_i", [])),
        partition_from_json(data.get("over_minus_i", [])),
    )


def trace_to_json(t: PsiTrace) -> dict:
    return {
        "k": t.modulus.k,
        "i": t.modulus.i,
        "m": t.m,
        "row_swapped": t.row_swapped,
        "blocks": [frobenius_to_json(f) for f in t.blocks],
        "gammas": [frobenius_to_json(f) for f in t.gammas],
    }
