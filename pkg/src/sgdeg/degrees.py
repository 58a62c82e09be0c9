"""Canonical and bi-canonical degrees of numerical semigroup rings.

Every invariant that has two independent routes is computed both ways and
the results compared; a disagreement raises InternalMismatch instead of
returning either value.

With the canonical ideal normalized to ``min(K) = 0`` the unit ideal is a
minimal reduction, so lambda(C^{j+1}/aC^j) becomes lambda(K^{j+1}/K^j) and
the canonical index is the first j with K^{j+1} = K^j.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import InternalMismatch
from .ideals import (
    bidual,
    canonical_ideal,
    length_quotient,
    principal,
    product,
    trace,
)
from .semigroup import NumericalSemigroup

TSV_COLUMNS = (
    "generators", "type", "multiplicity", "frobenius", "genus", "cdeg", "bideg",
    "rho", "e1", "s0", "agl_level", "goto", "nearly_gor", "far_flung",
    "comparison_holds",
)


def _check(ok: bool, what: str, h: NumericalSemigroup) -> None:
    if not ok:
        raise InternalMismatch(f"{what} failed for {h}")


def cdeg(h: NumericalSemigroup) -> int:
    """lambda(K/R), cross-checked against g(H) - n(H).

    N itself (k[[t]], Gorenstein) has cdeg 0.
    """
    prof = h.profile()
    by_count = h.genus - prof.n_of
    if h.is_full:
        return by_count
    by_ideal = length_quotient(canonical_ideal(h), principal(h, 0))
    if by_ideal != by_count:
        raise InternalMismatch(f"cdeg of {h}: lambda(K/R)={by_ideal} but g-n={by_count}")
    return by_ideal


def bideg_via_bidual(h: NumericalSemigroup) -> int:
    k = canonical_ideal(h)
    return length_quotient(bidual(k), k)


def bideg_via_trace(h: NumericalSemigroup) -> int:
    return length_quotient(principal(h, 0), trace(canonical_ideal(h)))


def bideg(h: NumericalSemigroup) -> int:
    """lambda(K**/K), cross-checked against lambda(R/tr(K))."""
    if h.is_full:
        return 0
    a = bideg_via_bidual(h)
    b = bideg_via_trace(h)
    if a != b:
        raise InternalMismatch(f"bideg of {h}: bidual gives {a}, trace gives {b}")
    return a


@dataclass(frozen=True)
class CanonicalPowers:
    rho: int
    power_steps: tuple[int, ...]
    e1: int
    s0: int
    rho_by_convention: bool = False


def canonical_powers(h: NumericalSemigroup) -> CanonicalPowers:
    """Canonical index, the lengths lambda(K^{j+1}/K^j), e1 and s0.

    For symmetric H the powers never move (K = R); rho is then reported as 1
    with the single step lambda(K/R) = 0.
    """
    if h.profile().is_symmetric:
        return CanonicalPowers(1, (0,), 0, 0, rho_by_convention=True)
    k = canonical_ideal(h)
    prev = principal(h, 0)
    cur = k
    steps = []
    while cur != prev:
        steps.append(length_quotient(cur, prev))
        prev, cur = cur, product(cur, k)
    e1 = sum(steps)
    return CanonicalPowers(len(steps), tuple(steps), e1, e1 - steps[0])


@dataclass(frozen=True)
class Comparison:
    cdeg: int
    bideg: int
    holds: bool


def comparison(h: NumericalSemigroup) -> Comparison:
    c, b = cdeg(h), bideg(h)
    return Comparison(c, b, b <= c)


@dataclass
class DegreeReport:
    generators: list[int]
    type: int
    multiplicity: int
    frobenius: int
    genus: int
    n_of: int
    cdeg: int
    bideg: int
    rho: int
    e1: int
    s0: int
    agl_level: int
    is_agl: bool
    is_goto: bool
    is_nearly_gorenstein: bool
    is_far_flung: bool
    comparison_holds: bool
    power_steps: list[int] = field(default_factory=list)
    pseudo_frobenius: list[int] = field(default_factory=list)
    rho_by_convention: bool = False

    @property
    def is_gorenstein(self) -> bool:
        return self.type == 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> DegreeReport:
        return cls(**json.loads(text))

    def tsv_row(self) -> str:
        flag = lambda b: "1" if b else "0"  # noqa: E731
        cells = [
            ",".join(map(str, self.generators)), self.type, self.multiplicity,
            self.frobenius, self.genus, self.cdeg, self.bideg, self.rho, self.e1,
            self.s0, self.agl_level, flag(self.is_goto),
            flag(self.is_nearly_gorenstein), flag(self.is_far_flung),
            flag(self.comparison_holds),
        ]
        return "\t".join(map(str, cells))

    def table(self) -> str:
        """Aligned `key  value` lines for terminals."""
        rows = [
            ("semigroup", "<" + ",".join(map(str, self.generators)) + ">"),
            ("multiplicity", self.multiplicity),
            ("frobenius", self.frobenius),
            ("genus", self.genus),
            ("n(H)", self.n_of),
            ("pseudo-Frobenius", " ".join(map(str, self.pseudo_frobenius))),
            ("type", self.type),
            ("cdeg", self.cdeg),
            ("bideg", self.bideg),
            ("rho", f"{self.rho}" + (" (by convention)" if self.rho_by_convention else "")),
            ("power steps", " ".join(map(str, self.power_steps))),
            ("e1", self.e1),
            ("s0", self.s0),
            ("agl level", self.agl_level),
            ("gorenstein", self.is_gorenstein),
            ("almost gorenstein", self.is_agl),
            ("goto", self.is_goto),
            ("nearly gorenstein", self.is_nearly_gorenstein),
            ("far-flung gorenstein", self.is_far_flung),
            ("bideg <= cdeg", self.comparison_holds),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def classify(h: NumericalSemigroup) -> DegreeReport:
    prof = h.profile()
    c = cdeg(h)
    b = bideg(h)
    res = b if h.is_full else bideg_via_trace(h)
    pw = canonical_powers(h)

    _check(pw.power_steps[0] == c, "steps[0] == cdeg", h)
    _check(pw.e1 == sum(pw.power_steps) and pw.s0 == pw.e1 - c >= 0, "e1/s0 bookkeeping", h)
    _check((pw.s0 == 0) == (c == 0) == (prof.type == 1), "s0 = 0 <=> cdeg = 0 <=> type 1", h)
    _check(c >= prof.type - 1, "cdeg >= type - 1", h)

    return DegreeReport(
        generators=list(h.generators),
        type=prof.type,
        multiplicity=prof.multiplicity,
        frobenius=h.frobenius,
        genus=h.genus,
        n_of=prof.n_of,
        cdeg=c,
        bideg=b,
        rho=pw.rho,
        e1=pw.e1,
        s0=pw.s0,
        agl_level=pw.s0,
        is_agl=prof.type > 1 and c == prof.type - 1,
        is_goto=b == 1,
        is_nearly_gorenstein=res == 1,
        is_far_flung=not h.is_full and b == prof.n_of,
        comparison_holds=b <= c,
        power_steps=list(pw.power_steps),
        pseudo_frobenius=list(prof.pseudo_frobenius),
        rho_by_convention=pw.rho_by_convention,
    )


@dataclass(frozen=True)
class AugmentedPrediction:
    """Invariants of R x| m predicted from those of R; None where inapplicable."""

    cdeg: Optional[int]
    type: Optional[int]
    bideg: Optional[int]


def augmented_predictions(h: NumericalSemigroup) -> AugmentedPrediction:
    if h.is_full:
        return AugmentedPrediction(None, None, None)
    prof = h.profile()
    c = cdeg(h)
    b = None if prof.is_symmetric else 2 * bideg(h) - 1
    return AugmentedPrediction(2 * c + 2, 2 * prof.type + 1, b)


@dataclass(frozen=True)
class MMAnalysis:
    overring: NumericalSemigroup
    cdeg: int
    predicted: int
    matches: bool
    bideg: int


def mm_analysis(h: NumericalSemigroup) -> MMAnalysis:
    """Compare cdeg((m:m)) computed directly with cdeg(R) + e0(m) - 2r(R).

    The residue field extension degree is 1 for semigroup rings.  An
    overring equal to N (k[[t]]) counts as Gorenstein with cdeg 0.
    """
    a = h.m_colon_m()
    prof = h.profile()
    direct = cdeg(a)
    predicted = cdeg(h) + prof.multiplicity - 2 * prof.type
    return MMAnalysis(a, direct, predicted, direct == predicted, bideg(a))
