"""Relative (fractional monomial) ideals over a numerical semigroup.

An ideal E is a set of integers, bounded below, with E + H inside E.  Since
E contains ``min(E) + H`` it contains every integer from ``min(E) + c`` on,
where ``c`` is the conductor of H, so ``(min, c-bit window)`` pins E down
completely.  That representation is canonical: equal sets give equal pairs.

Products and colons only ever touch minimal generators.  E + F is the union
of E + g over the generators g of F, and z + F lies in E as soon as z + g
does for every such g.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BaseMismatch, IsFullMonoid, NotContained
from .semigroup import NumericalSemigroup, _bits, _ones


class RelativeIdeal:
    __slots__ = ("base", "min", "mask")

    def __init__(self, base: NumericalSemigroup, min: int, mask: int):
        self.base = base
        self.min = min
        self.mask = mask

    @classmethod
    def _canonical(cls, base: NumericalSemigroup, lo: int, bits: int, nbits: int) -> RelativeIdeal:
        # `bits` is membership of lo .. lo+nbits-1; everything past that is in
        c = base.conductor
        bits &= _ones(nbits)
        if bits == 0:
            return cls(base, lo + nbits, _ones(c))
        t = (bits & -bits).bit_length() - 1
        rest = nbits - t
        mask = bits >> t
        if rest < c:
            mask |= _ones(c) ^ _ones(rest)
        return cls(base, lo + t, mask & _ones(c))

    # -- membership --------------------------------------------------------

    def members(self, lo: int, n: int) -> int:
        """Bitmask of membership for the integers lo, lo+1, ..., lo+n-1."""
        if n <= 0:
            return 0
        c = self.base.conductor
        off = lo - self.min
        if off >= 0:
            if off + n <= c:
                return (self.mask >> off) & _ones(n)
            ext = self.mask | (_ones(off + n) ^ _ones(c))
            return ext >> off
        need = n + off
        if need <= 0:
            return 0
        if need <= c:
            inside = self.mask & _ones(need)
        else:
            inside = self.mask | (_ones(need) ^ _ones(c))
        return inside << -off

    def __contains__(self, z: int) -> bool:
        off = z - self.min
        if off < 0:
            return False
        if off >= self.base.conductor:
            return True
        return bool(self.mask >> off & 1)

    def small_elements(self) -> list[int]:
        """Members below min + conductor, sorted."""
        return [self.min + i for i in _bits(self.mask)]

    def elements_upto(self, bound: int) -> Iterator[int]:
        for z in range(self.min, bound + 1):
            if z in self:
                yield z

    def issubset(self, other: RelativeIdeal) -> bool:
        _same_base(self, other)
        lo = min(self.min, other.min)
        n = max(self.min, other.min) - lo + self.base.conductor
        return self.members(lo, n) & ~other.members(lo, n) == 0

    __le__ = issubset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return self.base == other.base and self.min == other.min and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.base, self.min, self.mask))

    def __repr__(self) -> str:
        c = self.base.conductor
        shown = ",".join(map(str, self.small_elements()))
        return f"RelativeIdeal({self.base}, {{{shown}, {self.min + c}->}})"

    # -- structure ---------------------------------------------------------

    def minimal_generators(self) -> list[int]:
        """E \\ (E + M), M the maximal ideal of H."""
        h = self.base
        n = h.conductor + h.multiplicity + 1
        e = self.members(self.min, n)
        em = 0
        for g in h.generators:
            em |= e << g
        return [self.min + i for i in _bits(e & ~em & _ones(n))]

    def shift(self, v: int) -> RelativeIdeal:
        return RelativeIdeal(self.base, self.min + v, self.mask)

    def to_json(self) -> dict:
        return {"min": self.min, "members": self.small_elements()}

    @classmethod
    def from_json(cls, base: NumericalSemigroup, obj: dict) -> RelativeIdeal:
        return generated(base, obj["members"] or [obj["min"]])


def _same_base(e: RelativeIdeal, f: RelativeIdeal) -> None:
    if e.base != f.base:
        raise BaseMismatch(f"ideals over {e.base} and {f.base}")


def principal(base: NumericalSemigroup, v: int) -> RelativeIdeal:
    """The ideal v + H, i.e. t^v R."""
    return RelativeIdeal(base, v, base.mask)


def generated(base: NumericalSemigroup, elements: Iterable[int]) -> RelativeIdeal:
    """The smallest relative ideal containing `elements`."""
    elements = sorted(set(elements))
    if not elements:
        raise ValueError("an ideal needs at least one generator")
    lo = elements[0]
    n = elements[-1] - lo + base.conductor
    h = base.window_mask(n)
    bits = 0
    for x in elements:
        bits |= h << (x - lo)
    return RelativeIdeal._canonical(base, lo, bits, n)


def canonical_ideal(base: NumericalSemigroup) -> RelativeIdeal:
    """K = {x : F - x not in H}, which has min(K) = 0."""
    if base.is_full:
        raise IsFullMonoid("the canonical ideal is only built for H != N")
    f = base.frobenius
    bits = sum(1 << x for x in range(base.conductor) if (f - x) not in base)
    return RelativeIdeal(base, 0, bits)


def ideal_sum(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """E + F as ideals; for monomial ideals this is the set union."""
    _same_base(e, f)
    lo = min(e.min, f.min)
    n = max(e.min, f.min) - lo + e.base.conductor
    return RelativeIdeal._canonical(e.base, lo, e.members(lo, n) | f.members(lo, n), n)


def product(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """EF = {x + y : x in E, y in F}."""
    _same_base(e, f)
    gens = f.minimal_generators()
    lo = e.min + f.min
    n = e.base.conductor + gens[-1] - f.min
    base_bits = e.members(e.min, n)
    bits = 0
    for g in gens:
        bits |= base_bits << (g - f.min)
    return RelativeIdeal._canonical(e.base, lo, bits, n)


def power(e: RelativeIdeal, n: int) -> RelativeIdeal:
    if n < 0:
        raise ValueError("negative power")
    out = principal(e.base, 0)
    for _ in range(n):
        out = product(out, e)
    return out


def colon(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """(E : F) = {z : z + F inside E}."""
    _same_base(e, f)
    c = e.base.conductor
    lo = e.min - f.min
    if c == 0:
        return RelativeIdeal(e.base, lo, 0)
    bits = _ones(c)
    for g in f.minimal_generators():
        bits &= e.members(lo + g, c)
    return RelativeIdeal._canonical(e.base, lo, bits, c)


def dual(e: RelativeIdeal) -> RelativeIdeal:
    """E* = Hom(E, R) = (R : E)."""
    return colon(principal(e.base, 0), e)


def bidual(e: RelativeIdeal) -> RelativeIdeal:
    return dual(dual(e))


def trace(e: RelativeIdeal) -> RelativeIdeal:
    """tr(E) = E . E*; always inside H."""
    return product(e, dual(e))


def length_quotient(e: RelativeIdeal, f: RelativeIdeal) -> int:
    """lambda(E/F) = |E \\ F| for F inside E."""
    _same_base(e, f)
    lo = min(e.min, f.min)
    n = max(e.min, f.min) - lo + e.base.conductor
    eb = e.members(lo, n)
    fb = f.members(lo, n)
    if fb & ~eb:
        raise NotContained("length requested for a pair with F not inside E")
    return eb.bit_count() - fb.bit_count()
