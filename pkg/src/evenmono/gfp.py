"""Polynomials over the prime field GF(p) and their factorization.

Same list convention as :mod:`evenmono.zpoly`, with every coefficient
reduced into ``range(p)``.  Factoring follows the usual pipeline:
squarefree decomposition (with p-th roots for characteristic-p
derivatives), distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting driven by a seeded RNG so results are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ZeroPolynomialError


def reduce(a: Iterable[int], p: int) -> list[int]:
    out = [c % p for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def scale(a, k, p):
    k %= p
    if not k:
        return []
    return [c * k % p for c in a]


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - db)
    while len(r) - 1 >= db and r:
        t = r[-1] * inv % p
        shift = len(r) - 1 - db
        q[shift] = t
        for i, c in enumerate(b):
            r[i + shift] = (r[i + shift] - t * c) % p
        _trim(r)
    return _trim(q), r


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """(g, s, t) with s*a + t*b == g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def derivative(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def powmod(base, e, m, p):
    result = [1]
    base = rem(base, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        base = rem(mul(base, base, p), m, p)
        e >>= 1
    return result


def _pth_root(a, p):
    # a(X) = b(X^p) over GF(p); coefficients are fixed by Frobenius
    return [a[i] for i in range(0, len(a), p)]


def squarefree_decomposition(a, p) -> list[tuple[list[int], int]]:
    """Monic squarefree factors with multiplicities, product == monic(a)."""
    a = monic(a, p)
    if len(a) <= 1:
        return []
    out: list[tuple[list[int], int]] = []
    da = derivative(a, p)
    if not da:
        for f, e in squarefree_decomposition(_pth_root(a, p), p):
            out.append((f, e * p))
        return out
    c = gcd(a, da, p)
    w = divmod_(a, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if len(c) > 1:
        for f, e in squarefree_decomposition(_pth_root(c, p), p):
            out.append((f, e * p))
    return out


def distinct_degree(a, p) -> list[tuple[list[int], int]]:
    """Split a monic squarefree polynomial into (product, degree) pieces."""
    out = []
    f = list(a)
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(a, d, p, rng: random.Random) -> list[list[int]]:
    """Split a product of distinct monic degree-d irreducibles."""
    n = len(a) - 1
    if n == d:
        return [a]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        _trim(r)
        if len(r) < 2:
            continue
        if p == 2:
            # trace map r + r^2 + ... + r^(2^(d-1))
            t = list(r)
            s = list(r)
            for _ in range(d - 1):
                s = rem(mul(s, s, p), a, p)
                t = add(t, s, p)
            g = gcd(a, t, p)
        else:
            e = (p**d - 1) // 2
            b = powmod(r, e, a, p)
            g = gcd(a, sub(b, [1], p), p)
        if 1 < len(g) < len(a):
            break
    h = divmod_(a, g, p)[0]
    return equal_degree(g, d, p, rng) + equal_degree(h, d, p, rng)


def factor(a, p, seed: int = 0) -> list[tuple[list[int], int]]:
    """Monic irreducible factors with exponents, sorted by (degree, coeffs).

    The leading coefficient of ``a`` is dropped.
    """
    a = reduce(a, p)
    if not a:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for sqf, e in squarefree_decomposition(a, p):
        for prod, d in distinct_degree(sqf, p):
            for f in equal_degree(prod, d, p, rng):
                out.append((f, e))
    out.sort(key=lambda fe: (len(fe[0]), fe[0][::-1], fe[1]))
    return out


def degree_pattern(a, p) -> list[int]:
    """Irreducible factor degrees of a squarefree polynomial (no splitting)."""
    pat = []
    for prod, d in distinct_degree(monic(reduce(a, p), p), p):
        pat.extend([d] * ((len(prod) - 1) // d))
    return sorted(pat)


def is_squarefree(a, p) -> bool:
    a = reduce(a, p)
    return len(gcd(a, derivative(a, p), p)) == 1


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over GF(p) with reduced ascending coefficients."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(reduce(coeffs, p)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: ModPoly) -> ModPoly:
        return ModPoly(self.p, mul(self.coeffs, other.coeffs, self.p))

    def __pow__(self, k: int) -> ModPoly:
        out = ModPoly(self.p, [1])
        for _ in range(k):
            out = out * self
        return out


def factor_mod_p(f: ModPoly, seed: int = 0) -> list[tuple[ModPoly, int]]:
    return [(ModPoly(f.p, g), e) for g, e in factor(f.coeffs, f.p, seed)]
