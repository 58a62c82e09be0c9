import pytest
from hypothesis import given, strategies as st

from oracles import Naive
from sgdeg.errors import BaseMismatch, IsFullMonoid, NotContained
from sgdeg.ideals import (
    RelativeIdeal,
    bidual,
    canonical_ideal,
    colon,
    dual,
    generated,
    ideal_sum,
    length_quotient,
    power,
    principal,
    product,
    trace,
)
from sgdeg.semigroup import NumericalSemigroup, iter_tree
from strategies import ideals, semigroups

H345 = NumericalSemigroup([3, 4, 5])
H579 = NumericalSemigroup([5, 7, 9])
H378 = NumericalSemigroup([3, 7, 8])
H34 = NumericalSemigroup([3, 4])
HK = NumericalSemigroup([13, 14, 15, 16, 17, 18, 21, 23])


def as_set(e, lo, hi):
    return {z for z in range(lo, hi) if z in e}


def complement_of(base, missing, upto):
    return generated(base, [x for x in range(upto) if x not in missing])


def test_principal():
    assert principal(H345, 0) == generated(H345, [0])
    assert as_set(principal(H579, 5), 0, 20) == {5, 10, 12, 14, 15, 17, 19}
    e = principal(H579, -2)
    assert e.min == -2 and all((z in e) == (z + 2 in H579) for z in range(-5, 40))


def test_canonical_ideal_examples():
    assert canonical_ideal(H345) == complement_of(H345, {2}, 10)
    assert canonical_ideal(H579) == complement_of(H579, {1, 3, 4, 6, 8, 13}, 20)
    assert canonical_ideal(H34) == principal(H34, 0)
    with pytest.raises(IsFullMonoid):
        canonical_ideal(NumericalSemigroup([1]))


def test_sum_and_product_examples():
    k = canonical_ideal(H378)
    assert k == complement_of(H378, {2, 5}, 10)
    assert product(k, k) == generated(H378, [0, 1, 2])
    assert as_set(product(k, k), 0, 12) == set(range(12))
    e = generated(H579, [2, 11])
    assert product(principal(H579, 0), e) == e
    assert ideal_sum(principal(H579, 0), principal(H579, 5)) == principal(H579, 0)


def test_colon_examples():
    unit = principal(H345, 0)
    maximal = generated(H345, [3, 4, 5])
    assert colon(unit, canonical_ideal(H345)) == maximal
    assert colon(unit, unit) == unit
    e = generated(H579, [0, 2])
    assert 0 in colon(e, e)


def test_dual_examples():
    assert dual(canonical_ideal(H345)) == generated(H345, [3, 4, 5])
    for v in (-4, 0, 7):
        assert bidual(principal(H579, v)) == principal(H579, v)
    k = canonical_ideal(H579)
    kk = bidual(k)
    assert as_set(kk, -5, 30) == as_set(k, -5, 30) | {13}
    assert length_quotient(kk, k) == 1


def test_trace_examples():
    assert trace(canonical_ideal(H579)) == generated(H579, [5, 7, 9])
    assert trace(principal(H579, 6)) == principal(H579, 0)
    assert trace(canonical_ideal(H34)) == principal(H34, 0)


def test_length_examples():
    unit = principal(H579, 0)
    k = canonical_ideal(H579)
    assert length_quotient(k, unit) == 2
    assert length_quotient(k, k) == 0
    assert length_quotient(unit, principal(H579, 5)) == 5
    with pytest.raises(NotContained):
        length_quotient(unit, k)


def test_minimal_generators_examples():
    assert canonical_ideal(H579).minimal_generators() == [0, 2]
    assert principal(H579, 4).minimal_generators() == [4]
    assert len(canonical_ideal(HK).minimal_generators()) == 5


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        product(principal(H345, 0), principal(H579, 0))


def test_json_round_trip():
    k = canonical_ideal(H579)
    obj = k.to_json()
    assert obj == {"min": 0, "members": [0, 2, 5, 7, 9, 10, 11, 12]}
    assert RelativeIdeal.from_json(H579, obj) == k


def test_representation_is_canonical():
    a = generated(H579, [0, 2, 7, 12, 30])
    b = generated(H579, [2, 0])
    assert a == b and hash(a) == hash(b)
    assert (a.min, a.mask) == (b.min, b.mask)


@given(st.data())
def test_ideal_is_closed(data):
    h = data.draw(semigroups(proper=True))
    e = data.draw(ideals(h))
    assert e.min in e
    members = as_set(e, e.min, e.min + h.conductor + 1)
    assert all(x + g in e for x in members for g in h.generators)


@given(st.data())
def test_ops_agree_with_naive_sets(data):
    h = data.draw(semigroups(max_gen=12, proper=True))
    e = data.draw(ideals(h))
    f = data.draw(ideals(h))
    n = Naive(h.generators, pad=4 * h.conductor)
    c = h.conductor
    es = n.ideal(as_set(e, n.lo, n.hi)) | set(range(e.min + c, n.hi))
    fs = n.ideal(as_set(f, n.lo, n.hi)) | set(range(f.min + c, n.hi))

    def same(x, ref, lo):
        return all((z in x) == (z in ref) for z in range(lo - 3, lo + 3 * c + 6))

    assert same(product(e, f), n.product(es, fs), e.min + f.min)
    lo = e.min - f.min
    ref = n.colon(es, fs, range(lo - 3, lo + 3 * c + 6))
    assert same(colon(e, f), ref, lo)
    d = n.dual(es)
    assert same(dual(e), d, -e.min)
    assert same(bidual(e), n.dual(d), e.min)
    assert same(ideal_sum(e, f), es | fs, min(e.min, f.min))


@given(st.data())
def test_dual_identities(data):
    h = data.draw(semigroups(proper=True))
    e = data.draw(ideals(h))
    assert e.issubset(bidual(e))
    assert bidual(bidual(e)) == bidual(e)
    assert dual(e) == dual(bidual(e))
    assert dual(dual(dual(e))) == dual(e)


@given(st.data())
def test_double_colon_is_bidual(data):
    h = data.draw(semigroups(max_gen=14, proper=True))
    e = data.draw(ideals(h))
    a = data.draw(st.integers(-10, 30))
    pa = principal(h, a)
    assert colon(pa, colon(pa, e)) == bidual(e)


@given(st.data())
def test_trace_shift_invariant(data):
    h = data.draw(semigroups(proper=True))
    e = data.draw(ideals(h))
    v = data.draw(st.integers(-20, 20))
    assert trace(e.shift(v)) == trace(e)
    assert trace(e).issubset(principal(h, 0))


@given(st.data())
def test_product_laws(data):
    h = data.draw(semigroups(max_gen=15, proper=True))
    e, f, g = (data.draw(ideals(h)) for _ in range(3))
    assert product(e, f) == product(f, e)
    assert product(product(e, f), g) == product(e, product(f, g))
    assert product(e, principal(h, 0)) == e
    assert product(e, ideal_sum(f, g)) == ideal_sum(product(e, f), product(e, g))
    assert power(e, 2) == product(e, e)


@given(st.data())
def test_minimal_generators_generate(data):
    h = data.draw(semigroups(proper=True))
    e = data.draw(ideals(h))
    gens = e.minimal_generators()
    assert generated(h, gens) == e
    for g in gens:
        rest = [x for x in gens if x != g]
        assert not rest or generated(h, rest) != e


def test_canonical_generators_match_type_to_genus_15():
    for h in iter_tree(15):
        if h.is_full:
            continue
        k = canonical_ideal(h)
        assert len(k.minimal_generators()) == h.profile().type, h
        assert k.min == 0 and principal(h, 0).issubset(k)
