"""The staged bijection psi_m and the singular <-> restricted overpartition map.

``psi_forward`` sends a dotted symbol of weight n with m dotted blocks, the
last one negative, to a partition of ``n - k*m*(m-1)/2 - i*m``.  It peels
the symbol into pieces ``D_1 .. D_{m+1}`` and glues them back one at a time,
each time applying a shifted conjugate or a shift to the left piece and a
Dyson map to the accumulated right piece.  Every gluing step checks the
hypotheses and conclusions of the two concatenation lemmas it relies on and
raises :class:`~singular_lab.errors.InvariantError` if one fails.

A positive last dotted block is handled by swapping rows, which turns the
modulus ``(k, i)`` into ``(k, k - i)`` and P blocks into N blocks.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import DottedRun, DottedSymbol, ModulusPair, StartRule
from .errors import DomainError, InvariantError, ValidationError
from .maps import (
    WrightInput,
    dyson_frobenius,
    dyson_inverse_frobenius,
    shift,
    shifted_conjugate,
    wright_forward,
    wright_inverse,
)
from .partitions import FrobeniusSymbol, Partition, concat, from_frobenius, to_frobenius, union

__all__ = [
    "PsiTrace",
    "RestrictedOverpartition",
    "gamma_trace",
    "psi_forward",
    "psi_inverse",
    "andrews_forward",
    "andrews_inverse",
    "weight_drop",
]


def weight_drop(mod: ModulusPair, m: int) -> int:
    """``k*C(m,2) + i*m`` with ``C(m,2) = m(m-1)/2`` for every integer m."""
    return mod.k * m * (m - 1) // 2 + mod.i * m


@dataclass(frozen=True)
class PsiTrace:
    """All intermediate pieces of one psi run.

    ``blocks[v-1]`` is ``D_v`` and ``gammas[v-1]`` is ``Gamma_v``.  When the
    input had a positive last dotted block, ``row_swapped`` is set and
    ``modulus`` is the flipped pair the pipeline actually ran with.
    """

    modulus: ModulusPair
    m: int
    blocks: tuple[FrobeniusSymbol, ...]
    gammas: tuple[FrobeniusSymbol, ...]
    row_swapped: bool = False
    checks: int = 0

    @property
    def result(self) -> FrobeniusSymbol:
        return self.gammas[-1]


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise InvariantError(what)


def _lemma_parameters(mod: ModulusPair, v: int) -> tuple[bool, int, int, int]:
    """``(conjugate_step, f, g, h)`` for the step building Gamma_{v+1}."""
    k, i = mod.k, mod.i
    if v % 2:
        w = (v - 1) // 2
        return True, 2 - i, w * k + 1, k - i - 1
    w = v // 2
    return False, k - i - 2, w * k - 1, 1 - i


def _glue(mod: ModulusPair, v: int, left: FrobeniusSymbol,
          right: FrobeniusSymbol) -> tuple[FrobeniusSymbol, int]:
    """Gamma_{v+1} from D_{v+1} and Gamma_v, with every lemma condition checked."""
    conj_step, f, g, h = _lemma_parameters(mod, v)
    r = f - 2 * g + 1
    checks = 0

    def check(cond: bool, what: str) -> None:
        nonlocal checks
        checks += 1
        _check(cond, f"step v={v}: {what}")

    check(r == 1 - mod.i - (v - 1) * mod.k, "Dyson parameter")
    check(g >= 1 and 2 * g >= f + 1, "lemma parameter bounds")
    check(bool(right), "right operand is nonempty")
    alpha1, beta1 = right.top[0], right.bottom[0]
    check(alpha1 - beta1 <= f - 2 * g + 1, "condition ii) rank of right operand")
    if left:
        diffs = [a - b for a, b in left.columns()]
        a_last, b_last = left.top[-1], left.bottom[-1]
        if conj_step:
            check(h >= f, "h >= f")
            check(all(d >= f for d in diffs), "condition i) left columns not negative")
            check(a_last > alpha1 + g - 1, "condition iii)")
            check(b_last > beta1 - g + 1 >= 0, "condition iv)")
        else:
            check(h <= f, "h <= f")
            check(all(d <= f for d in diffs), "condition i) left columns not positive")
            check(a_last > beta1 - g + f + 1, "condition iii)")
            check(b_last > alpha1 + g - f - 1 >= 0, "condition iv)")

    moved = shifted_conjugate(g - f + 1, left) if conj_step else shift(g + 1, left)
    try:
        glued = concat(moved, dyson_frobenius(r, right))
    except ValidationError as exc:
        raise InvariantError(f"step v={v}: glued array is not a Frobenius symbol: {exc}") from None

    t = len(left)
    cols = glued.columns()
    check(all(a - b <= f - 2 * g - 2 for a, b in cols[:t]), "conclusion on left columns")
    if t < len(cols):
        a, b = cols[t]
        check(a - b >= f - 2 * g - 1, "conclusion on the joint column")
    if left:
        if conj_step and left.rank >= h:
            check(glued.rank <= -h + 2 * f - 2 * g - 2, "rank conclusion")
        if not conj_step and left.rank <= h:
            check(glued.rank <= h - 2 * g - 2, "rank conclusion")
    check(left.weight + right.weight - glued.weight == 2 * g - f, "weight loss 2g - f")
    check(2 * g - f == mod.i + (v - 1) * mod.k, "weight loss i + (v-1)k")
    return glued, checks


def _negative_form(d: DottedSymbol) -> tuple[DottedSymbol, bool]:
    if d.run is None:
        raise DomainError("psi needs at least one dotted block")
    if d.m > 0:
        return d, False
    return DottedSymbol(d.modulus.flipped(), d.symbol.swap_rows(), d.run), True


def gamma_trace(d: DottedSymbol) -> PsiTrace:
    work, swapped = _negative_form(d)
    mod, m, sym = work.modulus, work.m, work.symbol
    dotted = work.dotted_blocks
    # D_1 is the last dotted block and everything after it,
    # D_2..D_m the other dotted blocks right to left, D_{m+1} the rest
    pieces = [sym.columns_between(dotted[-1].start, len(sym))]
    pieces += [sym.columns_between(b.start, b.end) for b in reversed(dotted[:-1])]
    pieces.append(sym.columns_between(1, dotted[0].start - 1))

    checks = 1
    _check(pieces[0].rank <= 1 - mod.i, "Gamma_1 rank bound")
    gammas = [pieces[0]]
    for v in range(1, m + 1):
        glued, n = _glue(mod, v, pieces[v], gammas[-1])
        checks += n
        if v < m:
            checks += 1
            _check(glued.rank <= 1 - mod.i - v * mod.k, f"Gamma_{v + 1} rank bound")
        gammas.append(glued)
    checks += 1
    _check(sym.weight - gammas[-1].weight == weight_drop(mod, m), "total weight ledger")
    return PsiTrace(mod, m, tuple(pieces), tuple(gammas), swapped, checks)


def psi_forward(d: DottedSymbol) -> Partition:
    return from_frobenius(gamma_trace(d).result)


def psi_inverse(mod: ModulusPair, m: int, p: Partition) -> DottedSymbol:
    """The dotted symbol with signed dot count ``m`` that psi sends to ``p``."""
    if m == 0:
        raise DomainError("psi_inverse needs a nonzero dot count")
    work_mod = mod if m > 0 else mod.flipped()
    k, i = work_mod.k, work_mod.i
    count = abs(m)
    gamma = to_frobenius(p)
    pieces: dict[int, FrobeniusSymbol] = {}
    for v in range(count, 0, -1):
        threshold = -(v - 1) * k - i - 1
        cols = gamma.columns()
        t = next((j for j, (a, b) in enumerate(cols) if a - b >= threshold), len(cols))
        left, right = gamma.split(t)
        if v % 2:
            pieces[v + 1] = shifted_conjugate(i + (v - 1) // 2 * k, left)
        else:
            pieces[v + 1] = shift(-(v // 2) * k, left)
        gamma = dyson_inverse_frobenius(1 - i - (v - 1) * k, right)
    pieces[1] = gamma

    ordered = [pieces[v] for v in range(count + 1, 0, -1)]
    try:
        sym = concat(*ordered)
    except ValidationError as exc:
        raise DomainError(f"{p} is not in the image of psi_{count}: {exc}") from None

    run = _recover_run(work_mod, sym, ordered, count)
    if m > 0:
        return DottedSymbol(mod, sym, run)
    return DottedSymbol(mod, sym.swap_rows(), run)


def _recover_run(mod: ModulusPair, sym: FrobeniusSymbol,
                 ordered: list[FrobeniusSymbol], count: int) -> DottedRun:
    # ordered = [D_{m+1}, D_m, ..., D_1]; the dotted blocks must be exactly
    # D_m, ..., D_2 and the first block of D_1
    probe = DottedSymbol(mod, sym, None).decomposition.signed
    starts = []
    col = 1
    for piece in ordered:
        starts.append(col)
        col += len(piece)
    last_start = starts[-1]
    e = next((j for j, b in enumerate(probe, start=1) if b.start == last_start), None)
    if e is None or probe[e - 1].kind != "N" or e - count + 1 not in (1, 2):
        raise DomainError("reconstructed symbol does not carry a valid dotted run")
    for v in range(2, count + 1):
        block = probe[e - v]
        piece_start = starts[count + 1 - v]
        if block.start != piece_start or block.width != len(ordered[count + 1 - v]):
            raise DomainError("reconstructed pieces do not align with parity blocks")
    start = StartRule.FIRST if e - count + 1 == 1 else StartRule.SECOND
    return DottedRun(start, e)


@dataclass(frozen=True)
class RestrictedOverpartition:
    """An overpartition with no part divisible by k, overlines only on parts = +-i mod k.

    ``plain`` holds the non-overlined parts, ``over_i`` the overlined parts
    congruent to i and ``over_minus_i`` those congruent to -i.
    """

    modulus: ModulusPair
    plain: Partition
    over_i: Partition
    over_minus_i: Partition

    def __post_init__(self) -> None:
        k, i = self.modulus.k, self.modulus.i
        if self.modulus.self_dual:
            raise DomainError(f"k = 2i (k={k}, i={i}) is not supported")
        if any(x % k == 0 for x in self.plain.parts):
            raise ValidationError("plain parts must not be multiples of k")
        for name, mu, res in (("over_i", self.over_i, i), ("over_minus_i", self.over_minus_i, k - i)):
            if any(x % k != res for x in mu.parts):
                raise ValidationError(f"{name} parts must be congruent to {res} mod {k}")
            if len(set(mu.parts)) != len(mu.parts):
                raise ValidationError(f"{name} parts must be distinct")

    @property
    def m(self) -> int:
        return len(self.over_i) - len(self.over_minus_i)

    @property
    def weight(self) -> int:
        return self.plain.weight + self.over_i.weight + self.over_minus_i.weight

    def parts(self) -> list[tuple[int, bool]]:
        """``(value, overlined)`` pairs, largest first, overlined before plain."""
        items = [(x, True) for x in self.over_i.parts + self.over_minus_i.parts]
        items += [(x, False) for x in self.plain.parts]
        return sorted(items, key=lambda item: (-item[0], not item[1]))


def andrews_forward(d: DottedSymbol) -> RestrictedOverpartition:
    mod = d.modulus
    if mod.self_dual:
        raise DomainError(f"k = 2i (k={mod.k}, i={mod.i}) is not supported")
    m = d.m
    sigma = psi_forward(d) if m else from_frobenius(d.symbol)
    kappa = Partition(tuple(x for x in sigma.parts if x % mod.k == 0))
    gamma = Partition(tuple(x for x in sigma.parts if x % mod.k))
    w = wright_inverse(mod, kappa, m)
    return RestrictedOverpartition(mod, gamma, w.mu1, w.mu2)


def andrews_inverse(r: RestrictedOverpartition) -> DottedSymbol:
    mod = r.modulus
    out = wright_forward(WrightInput(r.over_i, r.over_minus_i, mod))
    sigma = union(out.kappa, r.plain)
    if out.m == 0:
        return DottedSymbol(mod, to_frobenius(sigma), None)
    return psi_inverse(mod, out.m, sigma)
