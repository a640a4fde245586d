"""Command-line front end.

Every subcommand reads JSON (``--json`` inline or ``--input`` file, ``-`` for
stdin), calls one library function and writes JSON or a plain text table to
stdout.  Exit status is 0 on success, 1 when ``verify`` finds a failing
identity and 2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Optional

from . import bijections, blocks, census, encoding, maps
from .blocks import DottedSymbol, ModulusPair
from .partitions import (
    FrobeniusSymbol,
    Partition,
    conjugate,
    from_frobenius,
    to_frobenius,
)

MAP_NAMES = (
    "dyson",
    "dyson-inverse",
    "shift",
    "shifted-conjugate",
    "wright",
    "wright-inverse",
    "psi",
    "psi-inverse",
    "andrews",
    "andrews-inverse",
)


class UsageError(Exception):
    pass


def _read_input(args: argparse.Namespace) -> Any:
    if args.json is not None:
        text = args.json
    elif args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    else:
        raise UsageError("this command needs --json or --input")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _modulus(args: argparse.Namespace, data: Any = None) -> ModulusPair:
    """Modulus from flags, falling back to (and cross-checking) ``k``/``i`` in the input."""
    embedded = None
    if isinstance(data, dict) and "k" in data and "i" in data:
        embedded = encoding.modulus_from_json(data)
    if args.k is None or args.i is None:
        if embedded is None:
            raise UsageError("--k and --i are required")
        return embedded
    mod = ModulusPair(args.k, args.i)
    if embedded is not None and embedded != mod:
        raise UsageError(f"flags give (k,i)=({mod.k},{mod.i}) but the input says "
                         f"({embedded.k},{embedded.i})")
    return mod


def _symbol(data: Any) -> FrobeniusSymbol:
    """Accept either a partition array or a Frobenius symbol object."""
    if isinstance(data, list):
        return to_frobenius(encoding.partition_from_json(data))
    return encoding.frobenius_from_json(data)


def _partition(data: Any) -> Partition:
    if isinstance(data, dict):
        return from_frobenius(encoding.frobenius_from_json(data))
    return encoding.partition_from_json(data)


def _dotted(args: argparse.Namespace, data: Any) -> DottedSymbol:
    mod = _modulus(args, data)
    if isinstance(data, dict) and "dots" in data:
        d = encoding.dotted_from_json({**data, "k": mod.k, "i": mod.i})
        if args.m is not None and d.m != args.m:
            raise UsageError(f"--m {args.m} disagrees with the dotted run (m={d.m})")
        return d
    if args.m is None:
        raise UsageError("a symbol without a dotted run needs --m")
    if args.m == 0:
        return DottedSymbol(mod, _symbol(data), None)
    return blocks.dotted_with_statistic(mod, _symbol(data), args.m)


def _require(value: Optional[int], flag: str) -> int:
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def cmd_convert(args: argparse.Namespace) -> dict:
    data = _read_input(args)
    p = _partition(data)
    f = to_frobenius(p)
    return {
        "partition": encoding.partition_to_json(p),
        "frobenius": encoding.frobenius_to_json(f),
        "conjugate": encoding.partition_to_json(conjugate(p)),
        "weight": p.weight,
        "rank": p.rank,
    }


def cmd_blocks(args: argparse.Namespace) -> dict:
    data = _read_input(args)
    mod = _modulus(args, data)
    f = _symbol(data)
    dec = blocks.decompose_blocks(mod, f)
    out: dict = {
        "k": mod.k,
        "i": mod.i,
        "frobenius": encoding.frobenius_to_json(f),
        "pattern": dec.kinds(),
        "blocks": encoding.decomposition_to_json(dec),
    }
    if isinstance(data, dict) and ("top_overline" in data or "bottom_overline" in data):
        o = encoding.overlined_from_json(data)
        out["singular"] = blocks.is_singular(mod, o)
        if out["singular"]:
            d = blocks.dotted_from_overlined(mod, o)
            out["dotted"] = encoding.dotted_to_json(d)
            out["m"] = d.m
    if args.configurations:
        out["configurations"] = [
            {"m": d.m, "pattern": d.pattern(), **encoding.dotted_to_json(d)["dots"]}
            for d in blocks.dotted_configurations(mod, f)
        ]
    return out


def cmd_map(args: argparse.Namespace) -> Any:
    data = _read_input(args)
    name = args.name
    if name in ("dyson", "dyson-inverse"):
        r = _require(args.r, "--r")
        fn = maps.dyson if name == "dyson" else maps.dyson_inverse
        p = fn(r, _partition(data))
        return {"partition": encoding.partition_to_json(p),
                "frobenius": encoding.frobenius_to_json(to_frobenius(p))}
    if name in ("shift", "shifted-conjugate"):
        u = _require(args.u, "--u")
        fn = maps.shift if name == "shift" else maps.shifted_conjugate
        return encoding.frobenius_to_json(fn(u, _symbol(data)))
    if name == "wright":
        if not isinstance(data, dict):
            raise UsageError('wright expects {"mu1": [...], "mu2": [...]}')
        mod = _modulus(args, data)
        w = maps.WrightInput(encoding.partition_from_json(data.get("mu1", [])),
                             encoding.partition_from_json(data.get("mu2", [])), mod)
        out = maps.wright_forward(w)
        return {"kappa": encoding.partition_to_json(out.kappa), "m": out.m}
    if name == "wright-inverse":
        mod = _modulus(args, data)
        m = _require(args.m, "--m")
        w = maps.wright_inverse(mod, encoding.partition_from_json(data), m)
        return {"mu1": encoding.partition_to_json(w.mu1), "mu2": encoding.partition_to_json(w.mu2)}
    if name == "psi":
        p = bijections.psi_forward(_dotted(args, data))
        return {"partition": encoding.partition_to_json(p),
                "frobenius": encoding.frobenius_to_json(to_frobenius(p))}
    if name == "psi-inverse":
        mod = _modulus(args, data)
        m = _require(args.m, "--m")
        return encoding.dotted_to_json(bijections.psi_inverse(mod, m, _partition(data)))
    if name == "andrews":
        return encoding.restricted_to_json(bijections.andrews_forward(_dotted(args, data)))
    if name == "andrews-inverse":
        if not isinstance(data, dict):
            raise UsageError('andrews-inverse expects {"plain", "over_i", "over_minus_i"}')
        r = encoding.restricted_from_json({**data, **_modulus_dict(args, data)})
        return encoding.dotted_to_json(bijections.andrews_inverse(r))
    raise UsageError(f"unknown map {name!r}")


def _modulus_dict(args: argparse.Namespace, data: Any) -> dict:
    mod = _modulus(args, data)
    return {"k": mod.k, "i": mod.i}


def cmd_trace(args: argparse.Namespace) -> dict:
    data = _read_input(args)
    trace = bijections.gamma_trace(_dotted(args, data))
    out = encoding.trace_to_json(trace)
    out["result"] = encoding.partition_to_json(from_frobenius(trace.result))
    return out


def _ordered_m(stats: dict[int, int]) -> dict[str, int]:
    return {str(m): stats[m] for m in sorted(stats, key=lambda m: (abs(m), -m))}


def cmd_count(args: argparse.Namespace) -> dict:
    mod = _modulus(args)
    n = _require(args.n, "--n")
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if args.restricted:
        stats, kind = census.restricted_statistics(mod, n), "restricted"
    else:
        stats, kind = census.singular_statistics(mod, n), "singular"
    out: dict = {"k": mod.k, "i": mod.i, "n": n, "kind": kind, "total": sum(stats.values())}
    if args.by_m:
        out["by_m"] = _ordered_m(stats)
    return out


def cmd_series(args: argparse.Namespace) -> dict:
    mod = _modulus(args)
    cutoff = _require(args.cutoff, "--cutoff")
    s = census.theorem1_series(mod, cutoff)
    return {"k": mod.k, "i": mod.i, "cutoff": s.cutoff, "coefficients": list(s.coefficients)}


def cmd_verify(args: argparse.Namespace) -> census.VerificationReport:
    mod = _modulus(args)
    n_max = _require(args.max_n, "--max-n")
    workers = args.workers if args.workers is not None else census.default_workers()
    return census.verify_identities(mod, n_max, workers=workers)


def _table(obj: Any) -> str:
    if isinstance(obj, dict):
        width = max((len(str(key)) for key in obj), default=0)
        return "\n".join(f"{str(key):<{width}}  {_table_value(v)}" for key, v in obj.items())
    return _table_value(obj)


def _table_value(v: Any) -> str:
    if isinstance(v, list) and all(isinstance(x, int) for x in v):
        return " ".join(str(x) for x in v) or "-"
    if isinstance(v, dict) and set(v) == {"top", "bottom"}:
        return f"{' '.join(map(str, v['top']))} / {' '.join(map(str, v['bottom']))}"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singular-lab",
        description="Singular overpartitions, their bijections and counting identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--k", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--format", choices=("json", "table"), default="json")
        if needs_input:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--input", help="JSON file, or - for stdin")
            src.add_argument("--json", help="inline JSON")
        return p

    add("convert", cmd_convert, "partition <-> Frobenius symbol")
    p = add("blocks", cmd_blocks, "parity blocks, singularity and dotted configurations")
    p.add_argument("--configurations", action="store_true", help="list every dotted run")
    p = add("map", cmd_map, "apply one of the bijective maps")
    p.add_argument("name", choices=MAP_NAMES)
    p.add_argument("--r", type=int, help="Dyson parameter")
    p.add_argument("--u", type=int, help="shift parameter")
    p.add_argument("--m", type=int, help="signed dot count / Wright statistic")
    p = add("trace", cmd_trace, "every intermediate step of psi")
    p.add_argument("--m", type=int)
    p = add("count", cmd_count, "count singular or restricted overpartitions of n", needs_input=False)
    p.add_argument("--n", type=int)
    p.add_argument("--by-m", action="store_true")
    p.add_argument("--restricted", action="store_true")
    p = add("series", cmd_series, "coefficients of the product generating function", needs_input=False)
    p.add_argument("--cutoff", type=int)
    p = add("verify", cmd_verify, "check every identity for n <= max-n", needs_input=False)
    p.add_argument("--max-n", type=int)
    p.add_argument("--workers", type=int, help="process count (default: $SINGULAR_LAB_THREADS)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ValueError, OSError, KeyError, TypeError) as exc:
        # ValidationError and DomainError are ValueErrors; InvariantError is not caught
        print(f"singular-lab: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, census.VerificationReport):
        text = result.to_json() if args.format == "json" else result.to_table()
        print(text)
        return 0 if result.ok else 1
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        print(_table(result))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
