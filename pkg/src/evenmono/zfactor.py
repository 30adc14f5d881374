"""Factorization and irreducibility over Z.

Squarefree split (Yun), modular factorization at a small good prime,
quadratic Hensel lifting past the Mignotte bound, and Zassenhaus subset
recombination.  No lattice reduction: the degrees in this package stay at
22 and below, where the modular factor counts are small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import gfp
from . import zpoly as zp
from .errors import ZeroPolynomialError
from .zint import factorize, iter_primes
from .zpoly import IntPoly

# candidate primes examined when picking the one with fewest modular factors
_PRIME_TRIALS = 5


@dataclass(frozen=True)
class ZFactorization:
    """``unit * content * prod(f**e)`` reconstructs the input."""

    unit: int
    content: int
    factors: tuple[tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        out = IntPoly([self.unit * self.content])
        for f, e in self.factors:
            out = out * f**e
        return out

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def squarefree_z(a: list[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm on a primitive polynomial with positive lc."""
    out = []
    da = zp.derivative(a)
    c = _gcd_z(a, da)
    w = zp.exact_quotient(a, c)
    y = zp.exact_quotient(da, c)
    i = 1
    while len(w) > 1:
        z = zp.sub(y, zp.derivative(w))
        g = _gcd_z(w, z)
        if len(g) > 1:
            out.append((g, i))
        w = zp.exact_quotient(w, g)
        y = zp.exact_quotient(z, g)
        i += 1
    return out


def _gcd_z(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[X] via primitive PRS; positive leading coefficient."""
    if not b:
        return zp.primitive(a)
    if not a:
        return zp.primitive(b)
    a, b = zp.primitive(a), zp.primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = zp.pseudo_rem(a, b)
        a, b = b, zp.primitive(r) if r else []
    g = zp.primitive(a)
    return g if len(g) > 1 else [1]


def _symmetric(a: list[int], m: int) -> list[int]:
    half = m // 2
    out = [c % m for c in a]
    return zp.trim([c - m if c > half else c for c in out])


def _hensel_step(f, g, h, s, t, m):
    # f == g h, s g + t h == 1 (mod m), h monic; returns lifts mod m^2
    m2 = m * m
    e = [c % m2 for c in zp.sub(f, zp.mul(g, h))]
    q, r = _divmod_monic(zp.mul(s, e), h, m2)
    g1 = [c % m2 for c in zp.add(zp.add(g, zp.mul(t, e)), zp.mul(q, g))]
    h1 = [c % m2 for c in zp.add(h, r)]
    b = [c % m2 for c in zp.sub(zp.add(zp.mul(s, g1), zp.mul(t, h1)), [1])]
    c, d = _divmod_monic(zp.mul(s, b), h1, m2)
    s1 = [x % m2 for x in zp.sub(s, d)]
    t1 = [x % m2 for x in zp.sub(zp.sub(t, zp.mul(t, b)), zp.mul(c, g1))]
    return zp.trim(g1), zp.trim(h1), zp.trim(s1), zp.trim(t1)


def _divmod_monic(a, b, m):
    r = [c % m for c in a]
    zp.trim(r)
    db = len(b) - 1
    q = [0] * max(0, len(r) - db)
    while r and len(r) - 1 >= db:
        t = r[-1]
        shift = len(r) - 1 - db
        q[shift] = t
        for i, c in enumerate(b):
            r[i + shift] = (r[i + shift] - t * c) % m
        zp.trim(r)
    return zp.trim(q), r


def hensel_lift(f: list[int], factors: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift monic modular factors of ``f`` (mod p) to monic factors mod p**k."""
    mod = p**k
    if len(factors) == 1:
        inv = pow(f[-1], -1, mod)
        return [[c * inv % mod for c in f]]
    lc = f[-1]
    h = factors[-1]
    g = gfp.scale(_prod_mod(factors[:-1], p), lc, p)
    one, s, t = gfp.xgcd(g, h, p)
    assert one == [1], "modular factors not coprime"
    m = p
    fm = [c % mod for c in f]
    while m < mod:
        g, h, s, t = _hensel_step(fm, g, h, s, t, m)
        m *= m
    g = [c % mod for c in g]
    h = [c % mod for c in h]
    return hensel_lift(g, factors[:-1], p, k) + [h]


def _prod_mod(fs, p):
    out = [1]
    for f in fs:
        out = gfp.mul(out, f, p)
    return out


def _good_prime(a: list[int]) -> tuple[int, list[list[int]]]:
    """Prime p with lc(a) != 0 mod p and a squarefree mod p, fewest factors."""
    best = None
    tried = 0
    for p in iter_primes(3):
        if a[-1] % p == 0:
            continue
        red = gfp.reduce(a, p)
        if not gfp.is_squarefree(red, p):
            continue
        fs = [f for f, _ in gfp.factor(red, p)]
        if best is None or len(fs) < len(best[1]):
            best = (p, fs)
        tried += 1
        if len(fs) == 1 or tried >= _PRIME_TRIALS:
            break
    return best


def _zassenhaus(a: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree polynomial, deg >= 1."""
    if len(a) <= 2:
        return [a]
    p, modf = _good_prime(a)
    if len(modf) == 1:
        return [a]
    bound = 2 * zp.mignotte_bound(a) * abs(a[-1]) + 1
    k = 1
    while p**k <= bound:
        k *= 2
    mod = p**k
    lifted = hensel_lift(a, modf, p, k)
    out = []
    remaining = list(range(len(lifted)))
    f = list(a)
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for sub in combinations(remaining, s):
            lc = f[-1]
            g = [lc]
            for i in sub:
                g = [c % mod for c in zp.mul(g, lifted[i])]
            g = _symmetric(g, mod)
            if not g or not g[0] or (lc * f[0]) % g[0]:
                continue
            g = zp.primitive(g)
            q = zp.exact_quotient(f, g)
            if q is None:
                continue
            out.append(g)
            f = q if q[-1] > 0 else [-c for c in q]
            remaining = [i for i in remaining if i not in sub]
            found = True
            break
        if not found:
            s += 1
    out.append(zp.primitive(f))
    return out


def _sort_key(f: IntPoly):
    return (f.degree, [abs(c) for c in reversed(f.coeffs)], list(reversed(f.coeffs)))


def factor_over_Z(f: IntPoly) -> ZFactorization:
    if f.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    a = list(f.coeffs)
    unit = -1 if a[-1] < 0 else 1
    cont = zp.content(a)
    a = [unit * c // cont for c in a]
    factors: list[tuple[IntPoly, int]] = []
    v = 0
    while a[v] == 0:
        v += 1
    if v:
        factors.append((IntPoly([0, 1]), v))
        a = a[v:]
    if len(a) > 1:
        for sqf, e in squarefree_z(a):
            for g in _zassenhaus(sqf):
                factors.append((IntPoly(g), e))
    factors.sort(key=lambda fe: (_sort_key(fe[0]), fe[1]))
    return ZFactorization(unit, cont, tuple(factors))


def eisenstein_prime(f: IntPoly) -> int | None:
    """Some prime p at which f (any leading coeff) is p-Eisenstein, if any."""
    cs = f.coeffs
    if len(cs) < 2 or cs[0] == 0:
        return None
    g = 0
    for c in cs[:-1]:
        g = math.gcd(g, c)
    if g == 1:
        return None
    for p in factorize(g).primes():
        if cs[-1] % p and cs[0] % (p * p):
            return p
    return None


def modular_irreducibility_certificate(f: IntPoly, primes: int = 8) -> int | None:
    """A prime p with f irreducible mod p (and deg preserved), if one is found early."""
    a = list(f.coeffs)
    n = len(a) - 1
    count = 0
    for p in iter_primes(2):
        if a[-1] % p:
            red = gfp.reduce(a, p)
            if gfp.is_squarefree(red, p):
                if gfp.degree_pattern(red, p) == [n]:
                    return p
                count += 1
                if count >= primes:
                    return None
        if p > 1000:
            return None


def _pattern_obstruction(a: list[int], primes: int = 8) -> bool:
    """True if modular degree patterns rule out every proper factor degree."""
    n = len(a) - 1
    possible = set(range(1, n))
    count = 0
    for p in iter_primes(2):
        if p > 1000 or count >= primes:
            break
        if a[-1] % p == 0:
            continue
        red = gfp.reduce(a, p)
        if not gfp.is_squarefree(red, p):
            continue
        count += 1
        sums = {0}
        for d in gfp.degree_pattern(red, p):
            sums |= {s + d for s in sums}
        possible &= sums
        if not possible:
            return True
    return False


def is_irreducible(f: IntPoly) -> bool:
    """Irreducibility over Q."""
    if f.degree < 1:
        raise ValueError("constant polynomials are neither")
    if f.degree == 1:
        return True
    a = zp.primitive(f.coeffs)
    if a[0] == 0:
        return False
    if eisenstein_prime(IntPoly(a)) is not None:
        return True
    if len(_gcd_z(a, zp.derivative(a))) > 1:
        return False
    if _pattern_obstruction(a):
        return True
    fz = factor_over_Z(IntPoly(a))
    return fz.is_irreducible
