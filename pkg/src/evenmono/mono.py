"""Monogenicity of monic integer polynomials via Dedekind's criterion.

A monic irreducible f is monogenic when Z[alpha] is the full ring of
integers.  Only primes whose square divides disc(f) can divide the index,
and for each of them Dedekind's criterion decides the question with one
gcd computation over GF(p).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import gfp
from . import zpoly as zp
from .errors import DegreeMismatchError, NonMonicError, ZeroDiscriminantError
from .zfactor import is_irreducible
from .zint import Factorization, factorize, is_squarefree, perfect_power
from .zpoly import IntPoly


class Status(str, enum.Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    UNKNOWN = "Unknown"
    REDUCIBLE = "Reducible"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DedekindOutcome:
    prime: int
    divides_index: bool
    detail: tuple[int, ...] | None = None  # common factor mod p, ascending
    eisenstein: bool = False


@dataclass(frozen=True)
class MonogenicityReport:
    status: Status
    disc: int
    disc_factorization: Factorization | None
    failing_prime: int | None = None
    per_prime: tuple[DedekindOutcome, ...] = field(default=())


def _require_monic(f: IntPoly) -> None:
    if not f.is_monic():
        raise NonMonicError(f"{f!r} is not monic")


def is_p_eisenstein(f: IntPoly, p: int) -> bool:
    _require_monic(f)
    cs = f.coeffs
    if len(cs) < 2:
        return False
    return all(c % p == 0 for c in cs[:-1]) and cs[0] % (p * p) != 0


def dedekind_test(f: IntPoly, p: int) -> DedekindOutcome:
    """Does p divide the index of Z[alpha] in the maximal order?

    Write f = prod g_i^e_i mod p, take G = prod g_i and H = prod g_i^(e_i - 1)
    (lifted with coefficients in [0, p)), and F = (f - G H) / p.  Then p
    divides the index exactly when gcd(G, H, F) is nontrivial mod p.
    """
    _require_monic(f)
    facs = gfp.factor(f.coeffs, p)
    g = [1]
    h = [1]
    for gi, e in facs:
        g = gfp.mul(g, gi, p)
        for _ in range(e - 1):
            h = gfp.mul(h, gi, p)
    diff = zp.sub(f.coeffs, zp.mul(g, h))
    assert all(c % p == 0 for c in diff)
    F = gfp.reduce([c // p for c in diff], p)
    common = gfp.gcd(gfp.gcd(g, h, p), F, p)
    if len(common) > 1:
        return DedekindOutcome(p, True, tuple(common))
    return DedekindOutcome(p, False)


def disc_factorization(f: IntPoly) -> tuple[int, Factorization]:
    """disc(f) and its factorization.

    Even polynomials g(X^2) with g(0) != 0 are factored through
    disc(g(X^2)) = (-4)^q g(0) disc(g)^2, which keeps the integers to factor
    small for the degree-10 and degree-22 cores.
    """
    d = zp.discriminant(f.coeffs)
    if d == 0:
        return 0, Factorization()
    g = zp.sqrt_decompose(f.coeffs)
    if g is not None and len(g) > 2 and g[0] != 0:
        q = len(g) - 1
        dg = zp.discriminant(g)
        fac = Factorization(((2, 2 * q),), 1, (-1) ** q)
        fac = fac.merged(factorize(g[0])).merged(factorize(dg), times=2)
        if fac.value() != d:
            raise AssertionError("power-composition discriminant identity failed")
        return d, fac
    return d, factorize(d)


def is_monogenic(f: IntPoly) -> MonogenicityReport:
    _require_monic(f)
    if f.degree < 1 or not is_irreducible(f):
        d = zp.discriminant(f.coeffs) if f.degree >= 1 else 0
        return MonogenicityReport(Status.REDUCIBLE, d, None)
    d, fac = disc_factorization(f)
    if d == 0:
        raise ZeroDiscriminantError(f"{f!r} has a repeated root")
    outcomes: list[DedekindOutcome] = []
    for p, e in fac.factors:
        if e < 2:
            continue
        if is_p_eisenstein(f, p):
            outcomes.append(DedekindOutcome(p, False, eisenstein=True))
            continue
        out = dedekind_test(f, p)
        outcomes.append(out)
        if out.divides_index:
            return MonogenicityReport(Status.NOT_MONOGENIC, d, fac, p, tuple(outcomes))
    if fac.cofactor > 1 and not _cofactor_squarefree(fac):
        return MonogenicityReport(Status.UNKNOWN, d, fac, None, tuple(outcomes))
    return MonogenicityReport(Status.MONOGENIC, d, fac, None, tuple(outcomes))


def _cofactor_squarefree(fac: Factorization) -> bool:
    c = fac.cofactor
    if perfect_power(c) is not None:
        return False
    return is_squarefree(c) is True


def eisenstein_filter(g: IntPoly, q: int) -> bool:
    """Cheap necessary condition for g(X^ell) to be monogenic with cyclic core.

    The constant term must be squarefree, divide every other coefficient,
    and have only prime factors equal to q or congruent to 1 mod q.
    """
    _require_monic(g)
    if g.degree != q:
        raise DegreeMismatchError(f"expected degree {q}, got {g.degree}")
    a0 = g.coeffs[0]
    if a0 == 0:
        return False
    if any(c % a0 for c in g.coeffs[1:-1]):
        return False
    if abs(a0) == 1:
        return True
    fac = factorize(a0)
    if not fac.complete or any(e > 1 for _, e in fac.factors):
        return False
    return all(p == q or p % q == 1 for p in fac.primes())
