"""Dense univariate polynomials over the integers.

Coefficient lists are ascending (``[c0, c1, ..., cn]``) with no trailing
zeros; the zero polynomial is ``[]``.  The module-level helpers work on
plain lists; :class:`IntPoly` is the immutable value type handed around
the rest of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConstantPolynomialError


def trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def degree(cs: Sequence[int]) -> int:
    return len(cs) - 1


def add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def scale(a: Sequence[int], k: int) -> list[int]:
    if k == 0:
        return []
    return [k * c for c in a]


def content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def primitive(a: Sequence[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    g = content(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def derivative(a: Sequence[int]) -> list[int]:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: Sequence[int], x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pseudo_rem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """lc(b)^(deg a - deg b + 1) * a  mod  b."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    if e <= 0:
        return r
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        trim(r)
        e -= 1
    if e:
        f = lb**e
        r = [f * c for c in r]
    return r


def divmod_exact(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]] | None:
    """Quotient and remainder over Z, or None if some step needs a fraction."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    q = [0] * max(0, len(a) - db)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        if lr % lb:
            return None
        t = lr // lb
        shift = len(r) - 1 - db
        q[shift] = t
        for i, c in enumerate(b):
            r[i + shift] -= t * c
        trim(r)
    return trim(q), r


def exact_quotient(a: Sequence[int], b: Sequence[int]) -> list[int] | None:
    """a / b if b divides a in Z[X], else None."""
    res = divmod_exact(a, b)
    if res is None or res[1]:
        return None
    return res[0]


def compose_power(a: Sequence[int], ell: int) -> list[int]:
    """Coefficients of a(X**ell)."""
    if ell < 1:
        raise ValueError("exponent must be positive")
    if not a:
        return []
    out = [0] * ((len(a) - 1) * ell + 1)
    for i, c in enumerate(a):
        out[i * ell] = c
    return out


def sqrt_decompose(a: Sequence[int]) -> list[int] | None:
    """g with g(X^2) == a(X), or None if a has an odd-degree term."""
    if any(a[i] for i in range(1, len(a), 2)):
        return None
    return list(a[::2])


def taylor_shift(a: Sequence[int], t: int) -> list[int]:
    """Coefficients of a(X + t)."""
    out = list(a)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += t * out[j + 1]
    return out


def negate_var(a: Sequence[int]) -> list[int]:
    """Coefficients of a(-X)."""
    return [c if i % 2 == 0 else -c for i, c in enumerate(a)]


def reciprocal(a: Sequence[int]) -> list[int]:
    """X^deg * a(1/X)."""
    return trim(list(reversed(a)))


def resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """Res(a, b) by the subresultant pseudo-remainder sequence."""
    a, b = list(a), list(b)
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, cb = content(a), content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    g = h = 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = pseudo_rem(a, b)
        a = b
        if not r:
            return 0
        den = g * h**delta
        b = [c // den for c in r]
        da, db = len(a) - 1, len(b) - 1
        g = a[-1]
        if delta == 0:
            h = h * 1
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if db == 0:
            break
    lb = b[-1]
    if da == 1:
        h = lb
    else:
        h = lb**da // h ** (da - 1)
    return s * t * h


def discriminant(a: Sequence[int]) -> int:
    """(-1)^(n(n-1)/2) Res(a, a') / lc(a)."""
    n = len(a) - 1
    if n < 1:
        raise ConstantPolynomialError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(a, derivative(a))
    q, rem = divmod(r, a[-1])
    assert rem == 0
    return -q if (n * (n - 1) // 2) % 2 else q


def mignotte_bound(a: Sequence[int]) -> int:
    """Bound on |coefficients| of any factor of ``a`` in Z[X]."""
    n = len(a) - 1
    norm2 = math.isqrt(sum(c * c for c in a)) + 1
    return (1 << n) * norm2 * abs(a[-1])


@dataclass(frozen=True)
class IntPoly:
    """Immutable integer polynomial, ascending coefficients."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        trim(cs)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_desc(cls, *cs: int) -> IntPoly:
        return cls(reversed(cs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x):
        return evaluate(self.coeffs, x)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(add(self.coeffs, _as_coeffs(other)))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(sub(self.coeffs, _as_coeffs(other)))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(scale(self.coeffs, other))
        return IntPoly(mul(self.coeffs, _as_coeffs(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        q = exact_quotient(self.coeffs, _as_coeffs(other))
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(q)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        from .parse import render

        return render(self)

    def derivative(self) -> IntPoly:
        return IntPoly(derivative(self.coeffs))

    def content(self) -> int:
        return content(self.coeffs)

    def primitive(self) -> IntPoly:
        return IntPoly(primitive(self.coeffs))

    def compose_power(self, ell: int) -> IntPoly:
        return compose_power_poly(self, ell)

    def discriminant(self) -> int:
        return discriminant_poly(self)


def _as_coeffs(p) -> Sequence[int]:
    return p.coeffs if isinstance(p, IntPoly) else p


def compose_power_poly(g: IntPoly, ell: int) -> IntPoly:
    """f with f(x) = g(x**ell)."""
    return IntPoly(compose_power(g.coeffs, ell))


def sqrt_decompose_poly(f: IntPoly) -> IntPoly | None:
    g = sqrt_decompose(f.coeffs)
    return None if g is None else IntPoly(g)


def discriminant_poly(f: IntPoly) -> int:
    if f.degree < 1:
        raise ConstantPolynomialError(f"discriminant of constant {f!r}")
    return discriminant(f.coeffs)


def resultant_poly(f: IntPoly, g: IntPoly) -> int:
    return resultant(f.coeffs, g.coeffs)
