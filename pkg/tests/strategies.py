from functools import reduce
from math import gcd

from hypothesis import strategies as st

from sgdeg.ideals import generated
from sgdeg.semigroup import NumericalSemigroup


@st.composite
def semigroups(draw, max_gen=30, proper=False):
    gens = draw(st.lists(st.integers(2 if proper else 1, max_gen), min_size=2, max_size=5))
    if reduce(gcd, gens) != 1:
        gens.append(max(gens) + 1)
    h = NumericalSemigroup(gens)
    if proper and h.is_full:
        h = NumericalSemigroup([2, 3])
    return h


@st.composite
def ideals(draw, base):
    c = base.conductor
    elems = draw(st.lists(st.integers(-c - 3, 2 * c + 3), min_size=1, max_size=4))
    return generated(base, elems)
