import itertools

import pytest

from singular_lab import (
    DomainError,
    DottedRun,
    DottedSymbol,
    FrobeniusSymbol,
    ModulusPair,
    OverlinedFrobenius,
    Parity,
    StartRule,
    ValidationError,
    column_parity,
    decompose_blocks,
    dotted_configurations,
    dotted_from_overlined,
    enumerate_partitions,
    from_dotted,
    is_singular,
    to_frobenius,
)
from singular_lab.blocks import configuration_statistics, dotted_with_statistic

MODS = [ModulusPair(3, 1), ModulusPair(5, 2)]


def all_symbols(max_weight):
    for n in range(max_weight + 1):
        for p in enumerate_partitions(n):
            yield to_frobenius(p)


def all_overlinings(f):
    cols = [None] + list(range(1, len(f) + 1))
    for top, bottom in itertools.product(cols, cols):
        yield OverlinedFrobenius(f, top, bottom)


def test_modulus_validation():
    with pytest.raises(ValidationError):
        ModulusPair(2, 1)
    with pytest.raises(ValidationError):
        ModulusPair(5, 5)
    with pytest.raises(ValidationError):
        ModulusPair(5, 0)
    assert ModulusPair(5, 2).flipped() == ModulusPair(5, 3)


@pytest.mark.parametrize("a,b,expected", [
    (27, 25, Parity.POSITIVE),
    (18, 19, Parity.NEGATIVE),
    (31, 30, Parity.NEUTRAL),
    (28, 28, Parity.NEUTRAL),
    (9, 11, Parity.NEGATIVE),
])
def test_column_parity_thresholds(mod52, a, b, expected):
    assert column_parity(mod52, a, b) is expected


def test_blocks_of_example_mod_5_2(example_symbol, mod52):
    dec = decompose_blocks(mod52, example_symbol)
    ranges = [(b.start, b.end, b.kind) for b in dec.blocks]
    assert ranges == [(1, 2, "E"), (3, 5, "P"), (6, 12, "N"), (13, 14, "P"), (15, 16, "N")]
    assert [b.anchor for b in dec.signed] == [3, 6, 13, 15]


def test_blocks_of_example_mod_3_1(example_symbol):
    dec = decompose_blocks(ModulusPair(3, 1), example_symbol)
    assert dec.e_block is None
    assert [b.end for b in dec.blocks] == [1, 2, 5, 8, 9, 12, 14, 16]
    assert dec.kinds() == "PNPNPNPN"


def test_all_neutral_symbol_is_one_e_block(mod52):
    f = FrobeniusSymbol((5, 3, 1), (5, 2, 0))
    dec = decompose_blocks(mod52, f)
    assert [(b.start, b.end, b.kind) for b in dec.blocks] == [(1, 3, "E")]
    assert len(dotted_configurations(mod52, f)) == 1


def test_decomposition_invariants_exhaustive():
    for mod in MODS + [ModulusPair(4, 1), ModulusPair(5, 3)]:
        for f in all_symbols(16):
            dec = decompose_blocks(mod, f)
            cols = [c for b in dec.blocks for c in range(b.start, b.end + 1)]
            assert cols == list(range(1, len(f) + 1))
            kinds = [b.kind for b in dec.signed]
            assert all(x != y for x, y in zip(kinds, kinds[1:]))
            assert "E" not in [b.kind for b in dec.blocks[1:]]
            for b in dec.blocks:
                pars = {column_parity(mod, f.top[c - 1], f.bottom[c - 1])
                        for c in range(b.start, b.end + 1)}
                if b.kind == "E":
                    assert pars == {Parity.NEUTRAL}
                else:
                    assert column_parity(mod, f.top[b.anchor - 1], f.bottom[b.anchor - 1]).value == b.kind
                    assert b.anchor == b.start
                    opposite = Parity.NEGATIVE if b.kind == "P" else Parity.POSITIVE
                    assert opposite not in pars


def test_row_swap_duality_exhaustive():
    for k, i in [(3, 1), (4, 1), (5, 2), (5, 3)]:
        mod = ModulusPair(k, i)
        for f in all_symbols(14):
            a = decompose_blocks(mod, f).blocks
            b = decompose_blocks(mod.flipped(), f.swap_rows()).blocks
            swap = {"P": "N", "N": "P", "E": "E"}
            assert [(x.start, x.end, swap[x.kind]) for x in a] == [(y.start, y.end, y.kind) for y in b]


def test_two_overline_displays_are_singular(example_symbol, mod52):
    displays = [(3, 6), (13, 6), (13, 15)]
    for top, bottom in displays:
        assert is_singular(mod52, OverlinedFrobenius(example_symbol, top, bottom))


def test_exactly_three_two_overline_singulars(example_symbol, mod52):
    found = [(o.top_overline, o.bottom_overline) for o in all_overlinings(example_symbol)
             if o.overline_count == 2 and is_singular(mod52, o)]
    assert sorted(found) == [(3, 6), (13, 6), (13, 15)]


def test_non_anchor_overline_is_not_singular(example_symbol, mod52):
    assert not is_singular(mod52, OverlinedFrobenius(example_symbol, 2, None))
    assert is_singular(mod52, OverlinedFrobenius(example_symbol))


def test_dotted_from_overlined_examples(example_symbol, mod52):
    d = dotted_from_overlined(mod52, OverlinedFrobenius(example_symbol, 3, 6))
    assert d.run == DottedRun(StartRule.SECOND, 2)
    assert d.pattern() == "EPnPN"
    d = dotted_from_overlined(mod52, OverlinedFrobenius(example_symbol, None, 6))
    assert d.run == DottedRun(StartRule.FIRST, 2)
    assert dotted_from_overlined(mod52, OverlinedFrobenius(example_symbol)).run is None
    with pytest.raises(DomainError):
        dotted_from_overlined(mod52, OverlinedFrobenius(example_symbol, 2, None))


def test_from_dotted_examples(example_symbol, mod52):
    o = from_dotted(DottedSymbol(mod52, example_symbol, DottedRun(StartRule.SECOND, 2)))
    assert (o.top_overline, o.bottom_overline) == (3, 6)
    assert example_symbol.top[2] == 27 and example_symbol.bottom[5] == 19
    o = from_dotted(DottedSymbol(mod52, example_symbol, DottedRun(StartRule.SECOND, 4)))
    assert (o.top_overline, o.bottom_overline) == (13, 15)
    assert example_symbol.top[12] == 6 and example_symbol.bottom[14] == 2
    assert from_dotted(DottedSymbol(mod52, example_symbol)).overline_count == 0


def test_configurations_of_epnpn(example_symbol, mod52):
    patterns = [d.pattern() for d in dotted_configurations(mod52, example_symbol)]
    assert sorted(patterns) == sorted([
        "EPNPN",
        "EpNPN", "EpnPN", "EpnpN", "Epnpn",
        "EPnPN", "EPnpN", "EPnpn",
    ])


def test_invalid_runs_rejected(mod52, example_symbol):
    with pytest.raises(DomainError):
        DottedSymbol(mod52, example_symbol, DottedRun(StartRule.FIRST, 5))
    with pytest.raises(DomainError):
        DottedSymbol(mod52, example_symbol, DottedRun(StartRule.SECOND, 1))


def test_single_block_has_two_configurations():
    f = FrobeniusSymbol((0,), (0,))
    confs = dotted_configurations(ModulusPair(3, 1), f)
    assert len(confs) == 2
    assert [d.m for d in confs] == [0, 1]


def test_overline_dot_roundtrip_exhaustive():
    for mod in MODS:
        for f in all_symbols(16):
            singular = [o for o in all_overlinings(f) if is_singular(mod, o)]
            configs = dotted_configurations(mod, f)
            nblocks = len(decompose_blocks(mod, f).signed)
            assert len(configs) == (2 * nblocks if nblocks else 1)
            assert len(singular) == len(configs)
            for o in singular:
                assert from_dotted(dotted_from_overlined(mod, o)) == o
            for d in configs:
                o = from_dotted(d)
                assert is_singular(mod, o)
                assert dotted_from_overlined(mod, o) == d


def test_statistics_match_configurations_and_are_unique():
    for mod in MODS:
        for f in all_symbols(14):
            configs = dotted_configurations(mod, f)
            stats = configuration_statistics(decompose_blocks(mod, f))
            assert stats == [d.m for d in configs]
            assert len(set(stats)) == len(stats)
            for d in configs:
                assert dotted_with_statistic(mod, f, d.m) == d
