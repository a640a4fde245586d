"""Primitive bijections: Dyson's map, shifts, shifted conjugates and the
modified Wright map.

The Dyson map is implemented twice.  :func:`dyson` works on parts
(subtract one from every part, append a new part) and :func:`dyson_frobenius`
follows the column casework on the Frobenius symbol; the bijection pipeline
uses the latter and the test-suite checks the two against each other.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import ModulusPair
from .errors import DomainError, ValidationError
from .partitions import (
    FrobeniusSymbol,
    Partition,
    conjugate,
    from_frobenius,
    scale,
    to_frobenius,
    union,
)

__all__ = [
    "dyson",
    "dyson_frobenius",
    "dyson_inverse",
    "dyson_inverse_frobenius",
    "shift",
    "shifted_conjugate",
    "WrightInput",
    "WrightOutput",
    "wright_forward",
    "wright_inverse",
]


def dyson(r: int, p: Partition) -> Partition:
    """Subtract 1 from each part of ``p`` and add a part ``r - 1 + len(p)``.

    Requires ``rank(p) <= r``.  On the empty partition this is only defined
    for ``r >= 1``.
    """
    if not p:
        if r < 1:
            raise DomainError(f"Dyson map d_{r} is undefined on the empty partition")
        return Partition((r - 1,) if r > 1 else ())
    if p.rank > r:
        raise DomainError(f"rank {p.rank} exceeds r={r}")
    new_part = r - 1 + len(p)
    rest = tuple(x - 1 for x in p.parts if x > 1)
    return Partition(((new_part,) if new_part > 0 else ()) + rest)


def dyson_inverse(r: int, q: Partition) -> Partition:
    """The unique ``p`` with ``dyson(r, p) == q``."""
    if not q:
        if r <= 0:
            return Partition((1,) * (1 - r))
        if r == 1:
            return Partition()
        raise DomainError(f"empty partition is not in the image of d_{r}")
    # the appended part is the largest part of q
    length = q.parts[0] - r + 1
    survivors = q.parts[1:]
    if length < 0 or length < len(survivors):
        raise DomainError(f"{q} is not in the image of d_{r}")
    p = Partition(tuple(x + 1 for x in survivors) + (1,) * (length - len(survivors)))
    if p.rank > r:
        raise DomainError(f"{q} is not in the image of d_{r}")
    return p


def dyson_frobenius(r: int, f: FrobeniusSymbol) -> FrobeniusSymbol:
    """Dyson's map read directly on Frobenius columns."""
    if not f:
        return to_frobenius(dyson(r, Partition()))
    a, b = f.top, f.bottom
    if a[0] - b[0] > r:
        raise DomainError(f"rank {a[0] - b[0]} exceeds r={r}")
    delta = len(f)
    head = b[0] + r - 1
    if delta == 1:
        if a[0] >= 2:
            return FrobeniusSymbol((head, a[0] - 2), (1, 0))
        if a[0] == 1:
            return FrobeniusSymbol((head,), (1,))
        if b[0] >= 1 - r:
            return FrobeniusSymbol((head,), (0,))
        # a_1 = 0 and b_1 = -r
        return FrobeniusSymbol()
    shifted_b = tuple(x + 2 for x in b[1:])
    if a[-1] >= 2:
        top = (head,) + tuple(x - 2 for x in a)
        bottom = shifted_b + (1, 0)
    elif a[-1] == 1:
        top = (head,) + tuple(x - 2 for x in a[:-1])
        bottom = shifted_b + (1,)
    elif a[-2] == 1:
        top = (head,) + tuple(x - 2 for x in a[:-2])
        bottom = shifted_b
    else:
        top = (head,) + tuple(x - 2 for x in a[:-1])
        bottom = shifted_b + (0,)
    return FrobeniusSymbol(top, bottom)


def dyson_inverse_frobenius(r: int, f: FrobeniusSymbol) -> FrobeniusSymbol:
    return to_frobenius(dyson_inverse(r, from_frobenius(f)))


def shift(u: int, f: FrobeniusSymbol) -> FrobeniusSymbol:
    """Columns ``(a, b) -> (a - u, b + u)``."""
    try:
        return FrobeniusSymbol(tuple(a - u for a in f.top), tuple(b + u for b in f.bottom))
    except ValidationError as exc:
        raise DomainError(f"shift by {u} leaves the set of symbols: {exc}") from None


def shifted_conjugate(u: int, f: FrobeniusSymbol) -> FrobeniusSymbol:
    """Columns ``(a, b) -> (b - u, a + u)``; an involution."""
    try:
        return FrobeniusSymbol(tuple(b - u for b in f.bottom), tuple(a + u for a in f.top))
    except ValidationError as exc:
        raise DomainError(f"shifted conjugate by {u} leaves the set of symbols: {exc}") from None


@dataclass(frozen=True)
class WrightInput:
    """Distinct parts ``= i (mod k)`` in ``mu1`` and ``= -i (mod k)`` in ``mu2``."""

    mu1: Partition
    mu2: Partition
    modulus: ModulusPair

    def __post_init__(self) -> None:
        k, i = self.modulus.k, self.modulus.i
        for name, mu, res in (("mu1", self.mu1, i), ("mu2", self.mu2, k - i)):
            if any(x % k != res for x in mu.parts):
                raise ValidationError(f"{name} parts must be congruent to {res} mod {k}")
            if len(set(mu.parts)) != len(mu.parts):
                raise ValidationError(f"{name} parts must be distinct")

    @property
    def m(self) -> int:
        return len(self.mu1) - len(self.mu2)

    @property
    def weight(self) -> int:
        return self.mu1.weight + self.mu2.weight


@dataclass(frozen=True)
class WrightOutput:
    kappa: Partition
    m: int


def _split_wright(rho: Partition, count: int) -> tuple[list[int], Partition]:
    # nu is the `count` largest parts (zero padded), mu the rest
    nu = list(rho.parts[:count]) + [0] * max(0, count - len(rho))
    return nu, Partition(rho.parts[count:])


def wright_forward(w: WrightInput) -> WrightOutput:
    k, i = w.modulus.k, w.modulus.i
    a = [(x - i) // k for x in w.mu1.parts]
    b = [(x - (k - i)) // k for x in w.mu2.parts]
    m = w.m
    if m >= 0:
        mu = from_frobenius(FrobeniusSymbol(tuple(a[m:]), tuple(b)))
        nu = [a[j] - m + j + 1 for j in range(m)]
        rho = union(Partition(tuple(x for x in nu if x > 0)), mu)
    else:
        n = -m
        mu = from_frobenius(FrobeniusSymbol(tuple(b[n:]), tuple(a)))
        nu = [b[j] - n + j + 1 for j in range(n)]
        rho = conjugate(union(Partition(tuple(x for x in nu if x > 0)), mu))
    return WrightOutput(scale(k, rho), m)


def wright_inverse(mod: ModulusPair, kappa: Partition, m: int) -> WrightInput:
    """Invert :func:`wright_forward`.

    For ``m >= 0`` the ``m`` largest parts of ``kappa / k`` form ``nu``: the
    smallest of them is ``a_m >= a_{m+1} + 1``, which is the largest part of
    the partition read off the Frobenius symbol.  For ``m < 0`` the same
    split is applied to the conjugate.
    """
    k, i = mod.k, mod.i
    if any(x % k for x in kappa.parts):
        raise ValidationError(f"every part of kappa must be a multiple of {k}")
    rho = Partition(tuple(x // k for x in kappa.parts))
    count = abs(m)
    if m < 0:
        rho = conjugate(rho)
    nu, mu = _split_wright(rho, count)
    sym = to_frobenius(mu)
    lead = [nu[j] + count - j - 1 for j in range(count)]
    if m >= 0:
        a, b = lead + list(sym.top), list(sym.bottom)
    else:
        b, a = lead + list(sym.top), list(sym.bottom)
    for row in (a, b):
        if any(row[j] <= row[j + 1] for j in range(len(row) - 1)):
            raise DomainError(f"({kappa}, {m}) is not in the image of the Wright map")
    mu1 = Partition(tuple(k * x + i for x in a))
    mu2 = Partition(tuple(k * x + k - i for x in b))
    return WrightInput(mu1, mu2, mod)
