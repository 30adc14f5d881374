"""Integer utilities: primality, factorization, square and squarefree tests.

Factoring runs in three stages: trial division by small primes, a
deterministic Miller-Rabin test, and Brent's variant of Pollard rho with a
fixed sequence of increments.  When rho gives up, the remaining composite
is trial divided up to the configured bound and then kept as an unfactored
cofactor, so callers can tell a complete factorization from a partial one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import ZeroPolynomialError

# Deterministic for n < 3.3e24 (first 13 primes as witnesses).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_STAGE = 4096


@dataclass(frozen=True)
class FactorBudget:
    trial_bound: int = 10**6
    rho_iterations: int = 200_000
    rho_attempts: int = 12


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True)
class Factorization:
    """``sign * cofactor * prod(p**e)`` equals the factored integer."""

    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1
    sign: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def merged(self, other: Factorization, times: int = 1) -> Factorization:
        """Factorization of ``self * other**times``."""
        exps: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e * times
        return Factorization(
            factors=tuple(sorted(exps.items())),
            cofactor=self.cofactor * other.cofactor**times,
            sign=self.sign * other.sign**times,
        )


@lru_cache(maxsize=4)
def primes_below(n: int) -> tuple[int, ...]:
    """All primes ``p < n`` (sieve of Eratosthenes)."""
    if n < 3:
        return ()
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n, i)))
    return tuple(i for i in range(n) if sieve[i])


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    k = max(n + 1, 2)
    while not is_prime(k):
        k += 1
    return k


def iter_primes(start: int = 2):
    p = start - 1
    while True:
        p = next_prime(p)
        yield p


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k + 1)
    # Newton from above
    r = max(r + 1, 1)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return ``(r, k)`` with ``r**k == n`` and k >= 2 maximal, or None."""
    if n < 4:
        return None
    best = None
    for k in primes_below(n.bit_length() + 1):
        r = integer_root(n, k)
        if r**k == n:
            inner = perfect_power(r)
            if inner is None:
                best = (r, k)
            else:
                best = (inner[0], inner[1] * k)
            break
    return best


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """``(True, r)`` with ``r*r == n`` and r >= 0, else ``(False, None)``."""
    if n < 0:
        return False, None
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def is_square(n: int) -> bool:
    return is_perfect_square(n)[0]


def _rho(n: int, c: int, max_iter: int) -> int | None:
    # Brent's cycle detection with batched gcds.
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    done = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        done += r
        if done > max_iter:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def _split(n: int, budget: FactorBudget, out: dict[int, int], rest: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    pp = perfect_power(n)
    if pp is not None:
        r, k = pp
        sub: dict[int, int] = {}
        subrest: list[int] = []
        _split(r, budget, sub, subrest)
        for p, e in sub.items():
            out[p] = out.get(p, 0) + e * k
        rest.extend(x**k for x in subrest)
        return
    for c in range(1, budget.rho_attempts + 1):
        d = _rho(n, c, budget.rho_iterations)
        if d is not None and 1 < d < n:
            _split(d, budget, out, rest)
            _split(n // d, budget, out, rest)
            return
    rest.append(n)


def factorize(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    exps: dict[int, int] = {}
    small = min(budget.trial_bound, _SMALL_STAGE)
    for p in primes_below(small):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            exps[p] = e
    if 1 < n < small * small:
        exps[n] = exps.get(n, 0) + 1
        n = 1
    rest: list[int] = []
    _split(n, budget, exps, rest)
    cofactor = 1
    for r in rest:
        # rho failed: finish trial division up to the bound before giving up
        for p in primes_below(budget.trial_bound):
            if p < small:
                continue
            if p * p > r:
                break
            while r % p == 0:
                r //= p
                exps[p] = exps.get(p, 0) + 1
        if r > 1 and (r < budget.trial_bound**2 or is_prime(r)):
            exps[r] = exps.get(r, 0) + 1
            r = 1
        cofactor *= r
    return Factorization(tuple(sorted(exps.items())), cofactor, sign)


def is_squarefree(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> bool | None:
    """True / False, or None when factoring was too incomplete to decide."""
    if n == 0:
        raise ValueError("0 is not squarefree-testable")
    fac = factorize(n, budget)
    if any(e > 1 for _, e in fac.factors):
        return False
    if fac.cofactor == 1:
        return True
    if perfect_power(fac.cofactor) is not None:
        return False
    if any(math.gcd(fac.cofactor, p) > 1 for p in fac.primes()):
        return False
    # no prime factor below the bound: below bound**3 it has at most two
    # prime factors, and it is not a square
    if fac.cofactor < budget.trial_bound**3:
        return True
    return None


def divisors(fac: Factorization) -> list[int]:
    """Positive divisors of a completely factored integer, ascending."""
    if not fac.complete:
        raise ValueError("factorization incomplete")
    out = []
    ranges = [[p**i for i in range(e + 1)] for p, e in fac.factors]
    for combo in product(*ranges):
        out.append(math.prod(combo))
    return sorted(out)


def integer_roots(coeffs) -> list[int]:
    """Integer roots (with multiplicity, ascending) of a nonzero polynomial.

    ``coeffs`` is an ascending coefficient sequence or anything with a
    ``coeffs`` attribute.
    """
    cs = list(getattr(coeffs, "coeffs", coeffs))
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ZeroPolynomialError("zero polynomial has every integer as a root")
    roots: list[int] = []
    v = 0
    while cs[v] == 0:
        v += 1
    roots.extend([0] * v)
    cs = cs[v:]
    if len(cs) == 1:
        return roots
    fac = factorize(cs[0])
    if fac.complete:
        cands = divisors(fac)
    else:
        # Cauchy bound keeps the fallback finite
        bound = 1 + max(abs(c) for c in cs[:-1]) // abs(cs[-1])
        cands = range(1, bound + 1)
    for d in cands:
        for r in (d, -d):
            while len(cs) > 1 and _horner(cs, r) == 0:
                roots.append(r)
                cs = _deflate(cs, r)
    return sorted(roots)


def _horner(cs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _deflate(cs: list[int], r: int) -> list[int]:
    # synthetic division by (X - r); exact since r is a root
    n = len(cs) - 1
    out = [0] * n
    acc = cs[n]
    for i in range(n - 1, -1, -1):
        out[i] = acc
        acc = cs[i] + acc * r
    return out
