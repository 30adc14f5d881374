"""Cyclotomic and real-cyclotomic minimal polynomials, and shift matching."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import zpoly as zp
from .errors import DegenerateConductorError, NonMonicError
from .zint import factorize
from .zpoly import IntPoly


@dataclass(frozen=True)
class ShiftMatch:
    d: int
    sign: int  # the +-2 shift
    mirror: bool  # matched the reciprocal of the input


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = zp.exact_quotient(num, list(_cyclotomic(e)))
    return tuple(num)


def cyclotomic_poly(d: int) -> IntPoly:
    if d < 1:
        raise ValueError("conductor must be positive")
    return IntPoly(_cyclotomic(d))


def euler_phi(d: int) -> int:
    out = d
    for p in factorize(d).primes():
        out = out // p * (p - 1)
    return out


def chebyshev_like(k: int) -> list[int]:
    """T_k(y) with x^k + x^-k = T_k(x + 1/x)."""
    t0, t1 = [2], [0, 1]
    if k == 0:
        return t0
    for _ in range(k - 1):
        t0, t1 = t1, zp.sub(zp.mul([0, 1], t1), t0)
    return t1


def real_cyclotomic_minpoly(d: int) -> IntPoly:
    """Minimal polynomial of zeta_d + zeta_d^-1, degree phi(d)/2."""
    if d < 3:
        raise DegenerateConductorError(f"conductor {d} has no real subfield of positive degree")
    phi = list(_cyclotomic(d))
    k = (len(phi) - 1) // 2
    # x^-k Phi_d(x) = c_k + sum_j c_{k+j} (x^j + x^-j), by palindromy
    out = [phi[k]]
    for j in range(1, k + 1):
        out = zp.add(out, zp.scale(chebyshev_like(j), phi[k + j]))
    return IntPoly(out)


def shifted_variant(h: IntPoly, t: int, negate: bool) -> IntPoly:
    """Minimal polynomial of t - alpha (negate) or alpha + t, for h(alpha) = 0."""
    if not h.is_monic():
        raise NonMonicError(f"{h!r} is not monic")
    if negate:
        # h(t - X), normalized monic
        cs = zp.taylor_shift(zp.negate_var(h.coeffs), -t)
        if h.degree % 2:
            cs = [-c for c in cs]
        return IntPoly(cs)
    return IntPoly(zp.taylor_shift(h.coeffs, -t))


def conductors_with_phi(target: int) -> list[int]:
    """All d with phi(d) == target (phi(d) >= sqrt(d/2) bounds the search)."""
    return [d for d in range(1, 2 * target * target + 3) if euler_phi(d) == target]


def _reciprocal_monic(g: IntPoly) -> IntPoly | None:
    if abs(g.coeffs[0]) != 1:
        return None
    cs = zp.reciprocal(g.coeffs)
    if cs[-1] < 0:
        cs = [-c for c in cs]
    return IntPoly(cs)


def match_remark(g: IntPoly) -> ShiftMatch | None:
    """Find d, sign with g = minpoly(-zeta_d - zeta_d^-1 + 2 sign).

    Also tries the reciprocal of g when g(0) = +-1.
    """
    if g.degree < 1:
        return None
    candidates = [(g, False)]
    rec = _reciprocal_monic(g)
    if rec is not None and rec != g:
        candidates.append((rec, True))
    for d in conductors_with_phi(2 * g.degree):
        if d < 3:
            continue
        h = real_cyclotomic_minpoly(d)
        for sign in (1, -1):
            target = shifted_variant(h, 2 * sign, negate=True)
            for cand, mirror in candidates:
                if cand == target:
                    return ShiftMatch(d, sign, mirror)
    return None
