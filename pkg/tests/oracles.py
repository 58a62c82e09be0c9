"""Slow, independent reference computations on plain Python sets.

Nothing here touches the bitmask code; semigroups and ideals are explicit
finite sets on a generous window [LO, HI) and every operation is a literal
translation of its set-theoretic definition.
"""

from itertools import combinations


def semigroup_set(gens, hi):
    """Elements of <gens> below hi, by dynamic programming."""
    ok = [False] * hi
    ok[0] = True
    for x in range(1, hi):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return {x for x in range(hi) if ok[x]}


class Naive:
    def __init__(self, gens, pad=None):
        gens = sorted(gens)
        bound = gens[0] * gens[-1] + 1
        self.hi = bound * 6 + (pad or 0)
        self.lo = -self.hi
        self.H = semigroup_set(gens, self.hi)
        gaps = [x for x in range(bound) if x not in self.H]
        self.F = max(gaps) if gaps else -1
        self.c = self.F + 1
        self.gens = gens

    def member(self, E, z):
        # sets are exact on [lo, hi); above the window everything is in
        return z >= self.hi or z in E

    def genus(self):
        return self.c - len([h for h in self.H if h < self.c])

    def n_of(self):
        return len([h for h in self.H if h < self.F])

    def pseudo_frobenius(self):
        M = [h for h in self.H if h > 0]
        return [z for z in range(self.c) if z not in self.H
                and all(z + m in self.H or z + m >= self.hi for m in M)]

    def canonical(self):
        return {x for x in range(self.lo, self.hi) if not self.member(self.H, self.F - x)}

    def ideal(self, E):
        return {e + h for e in E for h in self.H if self.lo <= e + h < self.hi}

    def colon(self, E, Fset, zrange):
        # z + F inside E; only F elements below min(F) + 2c matter
        fmin = min(Fset)
        relevant = [f for f in Fset if f < fmin + 2 * self.c + 2]
        return {z for z in zrange if all(self.member(E, z + f) for f in relevant)}

    def dual(self, E):
        emin = min(E)
        return self.colon(self.H, E, range(-emin, -emin + 3 * self.c + 3)) | \
            set(range(-emin + 3 * self.c + 3, self.hi))

    def product(self, E, Fset):
        a = min(E)
        b = min(Fset)
        top = a + b + 2 * self.c + 2
        out = {x + y for x in E if x < top - b for y in Fset if y < top - a}
        out = {z for z in out if z < top}
        return out | set(range(top, self.hi))

    def length(self, big, small):
        assert small <= big
        return len(big - small)


def brute_force_semigroups(genus):
    """Every numerical semigroup of the given genus, as gap sets.

    A gap set G of size g lies inside [1, 2g-1]; G is valid iff its
    complement is closed under addition.
    """
    out = []
    if genus == 0:
        return [frozenset()]
    universe = range(1, 2 * genus)
    for gaps in combinations(universe, genus):
        gs = set(gaps)
        if 1 not in gs:
            continue
        elems = [x for x in range(1, 2 * genus) if x not in gs]
        if all((x + y) not in gs for i, x in enumerate(elems) for y in elems[i:]):
            out.append(frozenset(gs))
    return out
