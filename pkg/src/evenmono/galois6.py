"""Galois groups of irreducible even sextics X^6 + a X^4 + b X^2 + c.

Writing the roots as +-sqrt(beta_i) for the roots beta_i of the cubic core
g = X^3 + a X^2 + b X + c, the group sits inside the signed permutations
of three letters (order 48).  Three quadratic subfields decide almost all
of the structure: Q(sqrt(disc g)), Q(sqrt(-c)) and Q(sqrt(-c disc g)).
The dihedral case is detected separately by the (m, n, c) shape.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from . import gfp
from . import zpoly as zp
from .errors import InconsistencyError, ReducibleInputError
from .zfactor import is_irreducible
from .zint import integer_roots, is_square, iter_primes
from .zpoly import IntPoly


class Group(str, enum.Enum):
    C6 = "C6"
    S3 = "S3"
    D6 = "D6"
    A4 = "A4"
    A4xC2 = "A4xC2"
    S4_6T7 = "S4_6T7"
    S4_6T8 = "S4_6T8"
    S4xC2 = "S4xC2"

    def __str__(self) -> str:
        return self.value


class Certainty(str, enum.Enum):
    PROVED = "proved"
    SAMPLED = "sampled"

    def __str__(self) -> str:
        return self.value


# Cycle types (sorted cycle lengths) of each group acting on the six roots.
CYCLE_TYPES: dict[Group, frozenset[tuple[int, ...]]] = {
    Group.C6: frozenset({(1,) * 6, (2, 2, 2), (3, 3), (6,)}),
    Group.S3: frozenset({(1,) * 6, (2, 2, 2), (3, 3)}),
    Group.D6: frozenset({(1,) * 6, (1, 1, 2, 2), (2, 2, 2), (3, 3), (6,)}),
    Group.A4: frozenset({(1,) * 6, (1, 1, 2, 2), (3, 3)}),
    Group.A4xC2: frozenset({(1,) * 6, (1, 1, 1, 1, 2), (1, 1, 2, 2), (2, 2, 2), (3, 3), (6,)}),
    Group.S4_6T7: frozenset({(1,) * 6, (1, 1, 2, 2), (3, 3), (2, 4)}),
    Group.S4_6T8: frozenset({(1,) * 6, (1, 1, 2, 2), (2, 2, 2), (3, 3), (1, 1, 4)}),
    Group.S4xC2: frozenset(
        {(1,) * 6, (1, 1, 2, 2), (2, 2, 2), (3, 3), (6,), (1, 1, 4), (2, 4), (1, 1, 1, 1, 2)}
    ),
}

GROUP_ORDER = {
    Group.C6: 6, Group.S3: 6, Group.D6: 12, Group.A4: 12,
    Group.A4xC2: 24, Group.S4_6T7: 24, Group.S4_6T8: 24, Group.S4xC2: 48,
}


@dataclass(frozen=True)
class D6Params:
    m: int
    n: int
    c: int

    @property
    def a(self) -> int:
        return self.n * self.n // self.c - 2 * self.m

    @property
    def b(self) -> int:
        return self.m * self.m - 2 * self.n


@dataclass(frozen=True)
class GaloisLabel:
    group: Group
    certainty: Certainty


def even_sextic(a: int, b: int, c: int) -> IntPoly:
    return IntPoly([c, 0, b, 0, a, 0, 1])


def cubic_core(a: int, b: int, c: int) -> IntPoly:
    return IntPoly([c, b, a, 1])


def cubic_disc(a: int, b: int, c: int) -> int:
    """Discriminant of X^3 + a X^2 + b X + c."""
    return a * a * b * b - 4 * b**3 - 4 * a**3 * c - 27 * c * c + 18 * a * b * c


def d6_shape(a: int, b: int, c: int) -> list[D6Params]:
    """All integer (m, n) with a = n^2/c - 2m and b = m^2 - 2n.

    Eliminating n = (m^2 - b)/2 from n^2 = c(a + 2m) leaves the quartic
    m^4 - 2b m^2 - 8c m + (b^2 - 4ac) = 0, so candidates are its integer
    roots with m^2 = b mod 2.
    """
    if c == 0:
        raise ValueError("c must be nonzero")
    quartic = [b * b - 4 * a * c, -8 * c, -2 * b, 0, 1]
    out = []
    for m in sorted(set(integer_roots(quartic))):
        if (m * m - b) % 2:
            continue
        n = (m * m - b) // 2
        if n * n != c * (a + 2 * m):
            continue
        out.append(D6Params(m, n, c))
    return out


def d_value(p: D6Params) -> int:
    m, n, c = p.m, p.n, p.c
    return -(4 * m**3 * c - m * m * n * n - 18 * m * n * c + 4 * n**3 + 27 * c * c)


def is_c6(p: D6Params) -> bool:
    if is_square(-p.c):
        return False
    core = [p.c, p.b, p.a, 1]
    if integer_roots(core):
        return False
    return is_square(d_value(p))


def _shape_label(p: D6Params, dg: int) -> Group:
    if is_c6(p):
        return Group.C6
    if dg and is_square(-p.c * dg):
        return Group.S3
    return Group.D6


def classify(a: int, b: int, c: int, *, samples: int | None = None) -> GaloisLabel:
    """Galois group of an irreducible X^6 + aX^4 + bX^2 + c.

    Every branch is decided by square tests, so labels are PROVED.  In the
    S4 branch, 6T7 is the group inside A6 (square polynomial discriminant,
    i.e. -c a square) and 6T8 is the one fixing sqrt(-c disc g).  Passing
    ``samples`` replaces the 6T7 / S4xC2 split by Frobenius sampling over
    that many primes (6-cycle seen => S4xC2), labelled SAMPLED.
    """
    if c == 0 or not is_irreducible(even_sextic(a, b, c)):
        raise ReducibleInputError(f"X^6 + {a}X^4 + {b}X^2 + {c} is reducible")
    dg = cubic_disc(a, b, c)
    shapes = d6_shape(a, b, c)
    if shapes:
        labels = {_shape_label(p, dg) for p in shapes}
        if len(labels) > 1:
            raise InconsistencyError(f"shape solutions disagree for {(a, b, c)}: {labels}")
        return GaloisLabel(labels.pop(), Certainty.PROVED)
    if is_square(dg):
        group = Group.A4 if is_square(-c) else Group.A4xC2
        return GaloisLabel(group, Certainty.PROVED)
    if is_square(-c * dg):
        return GaloisLabel(Group.S4_6T8, Certainty.PROVED)
    if samples is not None:
        seen = frobenius_samples(even_sextic(a, b, c), samples)
        group = Group.S4xC2 if (6,) in seen else Group.S4_6T7
        return GaloisLabel(group, Certainty.SAMPLED)
    if is_square(-c):
        return GaloisLabel(Group.S4_6T7, Certainty.PROVED)
    return GaloisLabel(Group.S4xC2, Certainty.PROVED)


def frobenius_samples(f: IntPoly, count: int) -> Counter:
    """Degree patterns of f mod p for the first ``count`` primes not dividing disc * lc."""
    bad = zp.discriminant(f.coeffs) * f.lc
    seen: Counter = Counter()
    n = 0
    for p in iter_primes(2):
        if n >= count:
            break
        if bad % p == 0:
            continue
        seen[tuple(gfp.degree_pattern(f.coeffs, p))] += 1
        n += 1
    return seen


def consistent_with(group: Group, seen) -> bool:
    """Every observed cycle type occurs in ``group``."""
    return set(seen) <= CYCLE_TYPES[group]
