"""Parametrized families, bounded searches, and the reproduction checks.

Searches enumerate even sextics X^6 + aX^4 + bX^2 + c either over a box of
coefficients or over the dihedral (m, n, c) parametrization, pass each
candidate through an ordered list of named filters, and return the
surviving hits sorted by (a, b, c).  Chunks of the grid can be processed
in worker processes; the merged output does not depend on the chunking.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import gfp
from . import zpoly as zp
from .cyclo import match_remark
from .errors import DivisibilityViolation, VerificationFailure
from .galois6 import (
    D6Params,
    GaloisLabel,
    Group,
    classify,
    cubic_core,
    cubic_disc,
    d6_shape,
    even_sextic,
)
from .mono import MonogenicityReport, Status, eisenstein_filter, is_monogenic
from .zfactor import is_irreducible
from .zint import is_square, is_squarefree, iter_primes
from .zpoly import IntPoly

MONOGENIC_C6_TRIPLES = frozenset(
    {(-7, 14, -7), (-6, 9, -3), (5, 6, 1), (6, 5, 1), (6, 9, 1), (9, 6, 1)}
)

CYCLIC_EVEN_POLYS: dict[int, tuple[IntPoly, ...]] = {
    5: (
        IntPoly.from_desc(1, 0, 9, 0, 28, 0, 35, 0, 15, 0, 1),
        IntPoly.from_desc(1, 0, -11, 0, 44, 0, -77, 0, 55, 0, -11),
        IntPoly.from_desc(1, 0, 15, 0, 35, 0, 28, 0, 9, 0, 1),
    ),
    11: (
        IntPoly.from_desc(
            1, 0, 21, 0, 190, 0, 969, 0, 3060, 0, 6188, 0, 8008, 0, 6435, 0, 3003, 0, 715, 0, 66, 0, 1
        ),
        IntPoly.from_desc(
            1, 0, -23, 0, 230, 0, -1311, 0, 4692, 0, -10948, 0, 16744, 0, -16445, 0, 9867, 0,
            -3289, 0, 506, 0, -23
        ),
        IntPoly.from_desc(
            1, 0, 66, 0, 715, 0, 3003, 0, 6435, 0, 8008, 0, 6188, 0, 3060, 0, 969, 0, 190, 0, 21, 0, 1
        ),
    ),
}


# -- families -----------------------------------------------------------------


def family_c6(m: int, n: int, c: int) -> IntPoly:
    """X^6 + (n^2/c - 2m) X^4 + (m^2 - 2n) X^2 + c."""
    if c == 0 or (n * n) % c:
        raise DivisibilityViolation(f"c={c} must be nonzero and divide n^2={n * n}")
    return even_sextic(n * n // c - 2 * m, m * m - 2 * n, c)


def family_m0(k: int, c: int) -> IntPoly:
    return IntPoly([c, 0, -2 * k * c, 0, k * k * c, 0, 1])


def family_n0(j: int, c: int) -> IntPoly:
    return IntPoly([c, 0, j * j * c * c, 0, -2 * j * c, 0, 1])


def disc_m0(k: int, c: int) -> int:
    return -64 * c**5 * (4 * k**3 * c + 27) ** 2


def disc_n0(j: int, c: int) -> int:
    return -64 * c**5 * (4 * j**3 * c * c + 27) ** 2


def d_tilde(j: int, k: int, c: int) -> int:
    return 4 * j**3 * c * c - j * j * k * k * c * c - 18 * j * k * c + 4 * k**3 * c + 27


def disc_shape_closed_form(j: int, k: int, c: int) -> int:
    """Closed-form discriminant of family_c6(jc, kc, c)."""
    return -64 * c**5 * (j * k * c - 1) ** 4 * d_tilde(j, k, c) ** 2


def family_6t8(b: int) -> IntPoly:
    return even_sextic(9, b, b)


def qualifies_6t8(b: int) -> bool:
    """b = 2 mod 4 and b(b - 27) squarefree."""
    return b % 4 == 2 and is_squarefree(b * (b - 27)) is True


# -- search machinery -----------------------------------------------------------


class Candidate:
    """One triple with lazily computed invariants shared by all filters."""

    def __init__(self, a: int, b: int, c: int):
        self.a, self.b, self.c = a, b, c
        self.dg = cubic_disc(a, b, c)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @cached_property
    def irreducible(self) -> bool:
        return is_irreducible(even_sextic(self.a, self.b, self.c))

    @cached_property
    def label(self) -> GaloisLabel | None:
        if not self.irreducible:
            return None
        return classify(self.a, self.b, self.c)

    @cached_property
    def report(self) -> MonogenicityReport:
        return is_monogenic(even_sextic(self.a, self.b, self.c))

    @cached_property
    def shapes(self) -> tuple[D6Params, ...]:
        return tuple(d6_shape(self.a, self.b, self.c))

    def characters(self) -> tuple[bool, bool, bool]:
        """Squareness of disc(g), -c and -c disc(g)."""
        return (is_square(self.dg), is_square(-self.c), is_square(-self.c * self.dg))


# Square pattern of (disc g, -c, -c disc g) forced by each group.
GROUP_CHARACTERS = {
    Group.C6: (True, False, False),
    Group.S3: (False, False, True),
    Group.D6: (False, False, False),
    Group.A4: (True, True, True),
    Group.A4xC2: (True, False, False),
    Group.S4_6T7: (False, True, False),
    Group.S4_6T8: (False, False, True),
    Group.S4xC2: (False, False, False),
}


@dataclass(frozen=True)
class Filter:
    name: str
    cost: int
    cheap: Callable[[Candidate], bool]
    full: Callable[[Candidate], bool]


def _always(_: Candidate) -> bool:
    return True


def _group_filter(group: Group) -> Filter:
    chars = GROUP_CHARACTERS[group]

    def cheap(x: Candidate) -> bool:
        return x.dg != 0 and x.characters() == chars

    def full(x: Candidate) -> bool:
        return x.label is not None and x.label.group == group

    return Filter(f"{group.value.lower()}_only", 3, cheap, full)


FILTERS: dict[str, Filter] = {
    "eisenstein_filter": Filter(
        "eisenstein_filter", 0, lambda x: eisenstein_filter(cubic_core(*x.triple), 3), _always
    ),
    "irreducible": Filter("irreducible", 2, _always, lambda x: x.irreducible),
    "monogenic_only": Filter(
        "monogenic_only", 4, _always, lambda x: x.irreducible and x.report.status is Status.MONOGENIC
    ),
}
for _g in Group:
    FILTERS[_group_filter(_g).name] = _group_filter(_g)
# short aliases used on the command line
GROUP_FILTER_ALIASES = {
    "C6": "c6_only", "S3": "s3_only", "D6": "d6_only", "A4": "a4_only",
    "A4xC2": "a4xc2_only", "6T7": "s4_6t7_only", "6T8": "s4_6t8_only", "S4xC2": "s4xc2_only",
}


@dataclass(frozen=True)
class SearchSpec:
    mode: str  # "coeff_box" or "shape_params"
    bounds: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    filters: tuple[str, ...] = ()
    parallel_chunks: int = 1

    def __post_init__(self):
        if self.mode not in ("coeff_box", "shape_params"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        for lo, hi in self.bounds:
            if lo > hi:
                raise ValueError(f"empty range {lo}..{hi}")
        unknown = [f for f in self.filters if f not in FILTERS]
        if unknown:
            raise ValueError(f"unknown filters {unknown}")
        if self.parallel_chunks < 1:
            raise ValueError("parallel_chunks must be positive")

    @classmethod
    def box(cls, a: int, b: int, c: int, filters=(), chunks: int = 1) -> SearchSpec:
        return cls("coeff_box", ((-a, a), (-b, b), (-c, c)), tuple(filters), chunks)

    @classmethod
    def shape(cls, m: int, n: int, cmax: int, filters=(), chunks: int = 1) -> SearchSpec:
        return cls("shape_params", ((-m, m), (-n, n), (-cmax, cmax)), tuple(filters), chunks)


@dataclass(frozen=True)
class SearchHit:
    triple: tuple[int, int, int]
    shapes: tuple[D6Params, ...]
    label: GaloisLabel | None
    report: MonogenicityReport


def _candidates(spec: SearchSpec, first: range):
    (_, _), (b_lo, b_hi), (c_lo, c_hi) = spec.bounds
    if spec.mode == "coeff_box":
        cs = [c for c in range(c_lo, c_hi + 1) if c != 0]
        for a in first:
            for b in range(b_lo, b_hi + 1):
                for c in cs:
                    yield Candidate(a, b, c)
        return
    # shape mode: first range is m, then n, then c | n^2
    for m in first:
        for n in range(b_lo, b_hi + 1):
            for c in range(c_lo, c_hi + 1):
                if c == 0 or (n * n) % c:
                    continue
                yield Candidate(n * n // c - 2 * m, m * m - 2 * n, c)


def _run_chunk(spec: SearchSpec, lo: int, hi: int) -> list[SearchHit]:
    flts = [FILTERS[name] for name in spec.filters]
    cheap = [f.cheap for f in flts]
    full = [f.full for f in sorted(flts, key=lambda f: f.cost)]
    hits: dict[tuple[int, int, int], SearchHit] = {}
    for x in _candidates(spec, range(lo, hi + 1)):
        if x.triple in hits:
            continue
        if not all(f(x) for f in cheap):
            continue
        if not all(f(x) for f in full):
            continue
        hits[x.triple] = SearchHit(x.triple, x.shapes, x.label, x.report)
    return list(hits.values())


def _chunks(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    n = hi - lo + 1
    k = max(1, min(k, n))
    step = math.ceil(n / k)
    return [(s, min(s + step - 1, hi)) for s in range(lo, hi + 1, step)]


def run_search(spec: SearchSpec, jobs: int = 1) -> list[SearchHit]:
    """All hits of ``spec``, deduplicated and sorted by (a, b, c)."""
    lo, hi = spec.bounds[0]
    parts = _chunks(lo, hi, max(spec.parallel_chunks, jobs))
    if jobs <= 1:
        results = [_run_chunk(spec, a, b) for a, b in parts]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, [spec] * len(parts), *zip(*parts)))
    merged: dict[tuple[int, int, int], SearchHit] = {}
    for chunk in results:
        for h in chunk:
            merged.setdefault(h.triple, h)
    return [merged[t] for t in sorted(merged)]


# -- verification -----------------------------------------------------------------


@dataclass
class VerificationReport:
    name: str
    passed: bool
    summary: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def raise_if_failed(self) -> VerificationReport:
        if not self.passed:
            raise VerificationFailure(f"{self.name} failed: {self.summary}", self.witnesses)
        return self


def c6_shape_dichotomy(p: D6Params) -> bool:
    """mn = 0 with c = 1 mod 4, or {m, n} = {-1, -2} with c = 1."""
    if p.m * p.n == 0:
        return p.c % 4 == 1
    return {p.m, p.n} == {-1, -2} and p.c == 1


def verify_thm_1_1(bound: int = 60, jobs: int = 1, filters=("c6_only", "monogenic_only")):
    box = run_search(SearchSpec.box(bound, bound, bound, filters, jobs), jobs)
    shape = run_search(SearchSpec.shape(bound, bound, bound, filters, jobs), jobs)
    box_set = {h.triple for h in box}
    shape_set = {h.triple for h in shape}
    witnesses = []
    for h in box:
        for p in h.shapes:
            if not c6_shape_dichotomy(p):
                witnesses.append(("dichotomy", h.triple, p))
            if p.m % p.c == 0 and p.n % p.c == 0:
                j, k = p.m // p.c, p.n // p.c
                if disc_shape_closed_form(j, k, p.c) != h.report.disc:
                    witnesses.append(("closed_form", h.triple, p))
    witnesses += [("box", t) for t in box_set ^ MONOGENIC_C6_TRIPLES]
    witnesses += [("shape", t) for t in shape_set ^ MONOGENIC_C6_TRIPLES]
    return VerificationReport(
        "thm1.1",
        not witnesses,
        {"bound": bound, "box_hits": sorted(box_set), "shape_hits": sorted(shape_set)},
        witnesses,
    ).raise_if_failed()


def full_cycle_prime(f: IntPoly, max_primes: int = 500) -> int | None:
    """Index (1-based) of the first sampled prime where f stays irreducible."""
    bad = zp.discriminant(f.coeffs)
    n = 0
    for p in iter_primes(2):
        if bad % p == 0:
            continue
        n += 1
        if n > max_primes:
            return None
        if gfp.degree_pattern(f.coeffs, p) == [f.degree]:
            return n
    return None


def verify_lem_1_2(max_primes: int = 500):
    rows = []
    witnesses = []
    for q, polys in CYCLIC_EVEN_POLYS.items():
        for f in polys:
            core = IntPoly(zp.sqrt_decompose(f.coeffs))
            report = is_monogenic(f)
            match = match_remark(core)
            cycle_at = full_cycle_prime(f, max_primes)
            row = {
                "q": q,
                "poly": str(f),
                "status": str(report.status),
                "remark_match": None if match is None else (match.d, match.sign, match.mirror),
                "full_cycle_prime_index": cycle_at,
                "cyclicity": "sampled",
            }
            rows.append(row)
            if report.status is not Status.MONOGENIC or match is None or cycle_at is None:
                witnesses.append(row)
    return VerificationReport("lem1.2", not witnesses, {"rows": rows}, witnesses).raise_if_failed()


def verify_thm_4_1(max_b: int = 500, min_count: int = 50):
    qualifying = [b for b in range(1, max_b + 1) if qualifies_6t8(b)]
    witnesses = []
    for b in qualifying:
        report = is_monogenic(family_6t8(b))
        label = classify(9, b, b)
        if report.status is not Status.MONOGENIC or label.group is not Group.S4_6T8:
            witnesses.append({"b": b, "status": str(report.status), "group": str(label.group)})
    if len(qualifying) < min_count:
        witnesses.append({"count": len(qualifying), "required": min_count})
    return VerificationReport(
        "thm4.1",
        not witnesses,
        {"max_b": max_b, "qualifying": len(qualifying), "values": qualifying},
        witnesses,
    ).raise_if_failed()


# cycle types of the regular action of the dihedral group of order 2m
def _dihedral_regular_types(m: int) -> set[tuple[int, ...]]:
    types = {(2,) * m}
    for d in range(1, m + 1):
        if m % d == 0:
            types.add((d,) * (2 * m // d))
    return types


def looks_dihedral_regular(f: IntPoly, m: int, samples: int = 40) -> bool:
    """Sampled test: every Frobenius cycle type of f is one of D_m's regular ones."""
    allowed = _dihedral_regular_types(m)
    bad = zp.discriminant(f.coeffs)
    if bad == 0:
        return False
    n = 0
    for p in iter_primes(3):
        if bad % p == 0:
            continue
        if tuple(gfp.degree_pattern(f.coeffs, p)) not in allowed:
            return False
        n += 1
        if n >= samples:
            return True
    return True


def dihedral_quintic_scan(bound: int = 6) -> dict:
    """Quintic cores g in a box with g(X^2) regular-dihedral (sampled) and their verdicts."""
    r = range(-bound, bound + 1)
    scanned = square_disc = 0
    found = []
    for a4, a3, a2, a1 in itertools.product(r, repeat=4):
        for a0 in r:
            if a0 == 0:
                continue
            scanned += 1
            g = [a0, a1, a2, a3, a4, 1]
            dg = zp.discriminant(g)
            # the dihedral group of odd degree lies in the alternating group
            if dg == 0 or not is_square(dg):
                continue
            square_disc += 1
            f = IntPoly(zp.compose_power(g, 2))
            if not looks_dihedral_regular(f, 5):
                continue
            if not is_irreducible(f):
                continue
            rep = is_monogenic(f)
            found.append(
                {"core": g, "status": str(rep.status), "failing_prime": rep.failing_prime}
            )
    return {"scanned": scanned, "square_disc": square_disc, "dihedral": found}


def verify_lem_4_2(bound: int = 40, quintic_bound: int = 6, jobs: int = 1):
    s3 = run_search(SearchSpec.box(bound, bound, bound, ("s3_only",), jobs), jobs)
    witnesses = []
    for h in s3:
        if h.report.status is not Status.NOT_MONOGENIC:
            witnesses.append({"triple": h.triple, "status": str(h.report.status)})
    quint = dihedral_quintic_scan(quintic_bound) if quintic_bound > 0 else None
    if quint is not None:
        for row in quint["dihedral"]:
            if row["status"] != str(Status.NOT_MONOGENIC):
                witnesses.append(row)
    return VerificationReport(
        "lem4.2",
        not witnesses,
        {
            "bound": bound,
            "s3_sextics": len(s3),
            "s3_monogenic": sum(h.report.status is Status.MONOGENIC for h in s3),
            "quintic": quint,
        },
        witnesses,
    ).raise_if_failed()
