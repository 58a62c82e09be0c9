"""Numerical semigroups stored as membership bitmasks.

A semigroup H is kept as its conductor ``c`` and an integer whose bit ``i``
is set iff ``i`` is in H, for ``0 <= i < c``.  Everything from ``c`` on is
in H and is not stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyGenerators, GcdNotOne, IsFullMonoid, SemigroupError


def _ones(n: int) -> int:
    return (1 << n) - 1


def _sieve(generators: Iterable[int], length: int) -> int:
    """Bitmask of the monoid spanned by `generators` on [0, length)."""
    full = _ones(length)
    mask = 1
    for g in generators:
        shift = g
        while shift < length:
            mask |= (mask << shift) & full
            shift <<= 1
    return mask


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class SemigroupProfile:
    multiplicity: int
    pseudo_frobenius: tuple[int, ...]
    type: int
    n_of: int
    is_symmetric: bool


class NumericalSemigroup:
    """A cofinite submonoid of the nonnegative integers.

    >>> H = NumericalSemigroup([5, 7, 9])
    >>> H.frobenius, H.genus
    (13, 8)
    """

    __slots__ = ("generators", "conductor", "mask", "_profile")

    def __init__(self, raw_generators: Iterable[int]):
        raw = sorted(set(int(g) for g in raw_generators))
        if not raw:
            raise EmptyGenerators("at least one generator is required")
        if raw[0] <= 0:
            raise SemigroupError(f"generators must be positive, got {raw[0]}")
        if reduce(gcd, raw) != 1:
            raise GcdNotOne(f"gcd of {raw} is {reduce(gcd, raw)}, not 1")
        # the Frobenius number is below min*max, so this window holds the conductor
        length = raw[0] * raw[-1] + 1
        mask = _sieve(raw, length)
        gaps = ~mask & _ones(length)
        conductor = gaps.bit_length()
        self._init(mask & _ones(conductor), conductor)

    def _init(self, mask: int, conductor: int) -> None:
        self.mask = mask
        self.conductor = conductor
        self._profile = None
        self.generators = self._minimal_generators()

    @classmethod
    def from_mask(cls, mask: int, conductor: int) -> NumericalSemigroup:
        """Build from a membership mask already known to be a semigroup.

        Bits at and above `conductor` are ignored; the true conductor may be
        smaller and is recomputed.
        """
        conductor = (~mask & _ones(conductor)).bit_length()
        obj = cls.__new__(cls)
        obj._init(mask & _ones(conductor), conductor)
        return obj

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        gaps = set(gaps)
        conductor = max(gaps) + 1 if gaps else 0
        mask = sum(1 << i for i in range(conductor) if i not in gaps)
        return cls.from_mask(mask, conductor)

    def _minimal_generators(self) -> tuple[int, ...]:
        # greedy: an element is a minimal generator iff the smaller ones miss it
        m = self.multiplicity
        window = self.conductor + m + 1
        target = self.window_mask(window)
        span = 1
        gens = []
        missing = target & ~span
        while missing:
            x = (missing & -missing).bit_length() - 1
            gens.append(x)
            shift = x
            while shift < window:
                span |= (span << shift) & _ones(window)
                shift <<= 1
            missing = target & ~span
        return tuple(gens)

    # -- basic invariants ------------------------------------------------

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def genus(self) -> int:
        return self.conductor - self.mask.bit_count()

    @property
    def multiplicity(self) -> int:
        rest = self.mask >> 1
        if not rest:
            return self.conductor if self.conductor > 0 else 1
        return (rest & -rest).bit_length()

    @property
    def is_full(self) -> bool:
        return self.conductor == 0

    def window_mask(self, length: int) -> int:
        """Membership bits of H on [0, length)."""
        if length <= self.conductor:
            return self.mask & _ones(length)
        return self.mask | (_ones(length) ^ _ones(self.conductor))

    def __contains__(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return bool(self.mask >> z & 1)

    contains = __contains__

    def gaps(self) -> list[int]:
        return list(_bits(~self.mask & _ones(self.conductor)))

    def small_elements(self) -> list[int]:
        """Elements of H below the conductor (0 included)."""
        return list(_bits(self.mask))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.conductor, self.mask))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __reduce__(self):
        return (NumericalSemigroup, (self.generators,))

    # -- derived structure ------------------------------------------------

    def profile(self) -> SemigroupProfile:
        if self._profile is None:
            self._profile = self._compute_profile()
        return self._profile

    def _compute_profile(self) -> SemigroupProfile:
        c = self.conductor
        if c == 0:
            # the only z outside N with z + M inside N is -1
            return SemigroupProfile(1, (-1,), 1, 0, True)
        window = c + max(self.generators)
        ext = self.window_mask(window)
        ok = ~self.mask & _ones(c)
        for g in self.generators:
            ok &= ext >> g
        pf = tuple(_bits(ok))
        n_of = self.mask.bit_count()
        return SemigroupProfile(
            multiplicity=self.multiplicity,
            pseudo_frobenius=pf,
            type=len(pf),
            n_of=n_of,
            is_symmetric=self.genus == n_of,
        )

    def is_symmetric(self) -> bool:
        """Direct test: exactly one of z, F - z lies in H for 0 <= z <= F."""
        f = self.frobenius
        return all((z in self) != (f - z in self) for z in range(f + 1))

    def m_colon_m(self) -> NumericalSemigroup:
        """The overring (M - M) where M = H \\ {0}."""
        if self.is_full:
            raise IsFullMonoid("N has no proper maximal ideal to colon")
        c = self.conductor
        ext = self.window_mask(c + max(self.generators))
        ok = _ones(c)
        for g in self.generators:
            ok &= ext >> g
        return NumericalSemigroup.from_mask(ok | self.mask, c)

    def children(self) -> list[NumericalSemigroup]:
        """Children in the semigroup tree, by removed generator ascending."""
        out = []
        for g in self.generators:
            if g > self.frobenius:
                mask = self.window_mask(g + 1) & ~(1 << g)
                out.append(NumericalSemigroup.from_mask(mask, g + 1))
        return out


def iter_tree(max_genus: int, root: NumericalSemigroup | None = None) -> Iterator[NumericalSemigroup]:
    """Depth-first walk of the semigroup tree below `root`, down to `max_genus`."""
    stack = [root if root is not None else NumericalSemigroup([1])]
    while stack:
        h = stack.pop()
        yield h
        if h.genus < max_genus:
            stack.extend(reversed(h.children()))


def count_by_genus(max_genus: int) -> list[int]:
    counts = [0] * (max_genus + 1)
    for h in iter_tree(max_genus):
        counts[h.genus] += 1
    return counts
