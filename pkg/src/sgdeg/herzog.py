"""Herzog matrices of non-symmetric 3-generated semigroups.

For H = <a, b, c> not symmetric the defining ideal of k[[H]] is generated
by the 2x2 minors of

    ( X^a1  Y^b1  Z^c1 )
    ( Y^b2  Z^c2  X^a2 )

so that (a1+a2)a = b2 b + c1 c, (b1+b2)b = a1 a + c2 c and
(c1+c2)c = a2 a + b1 b.  Each left-hand side is the least multiple of that
generator lying in the semigroup spanned by the other two, and the
right-hand side is its unique representation there.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import DegenerateSign, GorensteinCase, NotThreeGenerated
from .ideals import RelativeIdeal, generated
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class HerzogMatrix:
    order: tuple[int, int, int]
    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int

    @property
    def top(self) -> tuple[int, int, int]:
        """Exponents of the first row (X, Y, Z)."""
        return (self.a1, self.b1, self.c1)

    @property
    def bottom(self) -> tuple[int, int, int]:
        """Exponents of the second row (Y, Z, X)."""
        return (self.b2, self.c2, self.a2)

    def relations_hold(self) -> bool:
        a, b, c = self.order
        return (
            (self.a1 + self.a2) * a == self.b2 * b + self.c1 * c
            and (self.b1 + self.b2) * b == self.a1 * a + self.c2 * c
            and (self.c1 + self.c2) * c == self.a2 * a + self.b1 * b
        )

    def pretty(self) -> str:
        def mono(var: str, e: int) -> str:
            return var if e == 1 else f"{var}^{e}"

        row1 = "  ".join([mono("X", self.a1), mono("Y", self.b1), mono("Z", self.c1)])
        row2 = "  ".join([mono("Y", self.b2), mono("Z", self.c2), mono("X", self.a2)])
        return f"( {row1} )\n( {row2} )"

    def to_json(self) -> dict:
        return {"order": list(self.order), "rows": [list(self.top), list(self.bottom)]}


def _representations(n: int, p: int, q: int) -> list[tuple[int, int]]:
    """All (i, j) >= 0 with i*p + j*q = n."""
    return [(i, (n - i * p) // q) for i in range(n // p + 1) if (n - i * p) % q == 0]


def _least_multiple(x: int, p: int, q: int) -> tuple[int, list[tuple[int, int]]]:
    # n*x lies in <p, q> for n = p*q at the latest
    for n in range(1, p * q + 1):
        reps = _representations(n * x, p, q)
        if reps:
            return n, reps
    raise AssertionError(f"no multiple of {x} in <{p},{q}>")


def herzog_matrix(a: int, b: int, c: int) -> HerzogMatrix:
    h = NumericalSemigroup([a, b, c])
    if len({a, b, c}) != 3 or h.generators != tuple(sorted((a, b, c))):
        raise NotThreeGenerated(f"<{a},{b},{c}> is not minimally 3-generated")

    def positive_rep(x: int, p: int, q: int) -> tuple[int, int, int]:
        n, reps = _least_multiple(x, p, q)
        if len(reps) != 1 or min(reps[0]) == 0:
            raise GorensteinCase(f"<{a},{b},{c}> is symmetric (complete intersection): no Herzog matrix")
        return n, reps[0][0], reps[0][1]

    na, b2, c1 = positive_rep(a, b, c)
    nb, a1, c2 = positive_rep(b, a, c)
    nc, a2, b1 = positive_rep(c, a, b)
    m = HerzogMatrix((a, b, c), a1, a2, b1, b2, c1, c2)
    if (a1 + a2, b1 + b2, c1 + c2) != (na, nb, nc) or not m.relations_hold():
        raise AssertionError(f"inconsistent Herzog exponents for <{a},{b},{c}>: {m}")
    return m


def cdeg_closed_form(m: HerzogMatrix) -> int:
    """a1 b1 c1 when b*b2 > a*a1, else a2 b2 c2."""
    a, b, _ = m.order
    sign = b * m.b2 - a * m.a1
    if sign > 0:
        return m.a1 * m.b1 * m.c1
    if sign < 0:
        return m.a2 * m.b2 * m.c2
    raise DegenerateSign(f"b*b2 == a*a1 for {m}")


def bideg_closed_form(m: HerzogMatrix) -> int:
    return min(m.a1, m.a2) * min(m.b1, m.b2) * min(m.c1, m.c2)


def relabelings(m: HerzogMatrix) -> list[HerzogMatrix]:
    """The Herzog matrix recomputed for each of the 6 orderings of (a, b, c)."""
    return [herzog_matrix(*p) for p in permutations(m.order)]


def agl_from_matrix(m: HerzogMatrix) -> tuple[bool, bool]:
    """(almost Gorenstein, 2-AGL) read off the matrix shapes."""
    forms = relabelings(m)
    is_agl = any(f.top == (1, 1, 1) or f.bottom == (1, 1, 1) for f in forms)
    is_2agl = any(f.top == (2, 1, 1) and f.a2 >= 2 for f in forms)
    return is_agl, is_2agl


def three_agl_patterns(m: HerzogMatrix) -> dict[str, bool]:
    """Shapes from two open questions about 3-AGL rings.

    ``x3_pattern``: top row (X^3, Y, Z) with a2 >= 3.
    ``x2_a2_one``: top row (X^2, Y, Z) with a2 = 1.
    No claim is made about what these shapes imply.
    """
    forms = relabelings(m)
    return {
        "x3_pattern": any(f.top == (3, 1, 1) and f.a2 >= 3 for f in forms),
        "x2_a2_one": any(f.top == (2, 1, 1) and f.a2 == 1 for f in forms),
    }


def canonical_ideal_candidates(m: HerzogMatrix) -> list[RelativeIdeal]:
    """The ideals (x^a1, y^b2), (y^b1, z^c2), (x^a2, z^c1) as relative ideals."""
    a, b, c = m.order
    h = NumericalSemigroup([a, b, c])
    return [
        generated(h, [m.a1 * a, m.b2 * b]),
        generated(h, [m.b1 * b, m.c2 * c]),
        generated(h, [m.a2 * a, m.c1 * c]),
    ]
