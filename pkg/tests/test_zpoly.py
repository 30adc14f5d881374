import random

import pytest
from hypothesis import given, settings, strategies as st

from evenmono import zpoly as zp
from evenmono.errors import ConstantPolynomialError, ZeroPolynomialError
from evenmono.hunt import d_tilde, disc_shape_closed_form
from evenmono.zfactor import (
    factor_over_Z,
    hensel_lift,
    is_irreducible,
    modular_irreducibility_certificate,
)
from evenmono.zpoly import IntPoly
from oracles import poly_mul, sylvester_discriminant, sylvester_resultant

polys = st.lists(st.integers(-20, 20), min_size=1, max_size=8).map(zp.trim).filter(bool)


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly([]).degree == -1
    assert IntPoly.from_desc(1, 0, -2) == IntPoly([-2, 0, 1])


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    A, B, C = IntPoly(a), IntPoly(b), IntPoly(c)
    assert A * (B + C) == A * B + A * C
    assert (A * B) // B == A
    assert A - A == IntPoly([])


@pytest.mark.parametrize(
    "g, ell, f",
    [
        ([-1, 1, 0, 1], 2, [-1, 0, 1, 0, 0, 0, 1]),
        ([-7, 14, -7, 1], 2, [-7, 0, 14, 0, -7, 0, 1]),
        ([3, 1, 4, 1, 5], 1, [3, 1, 4, 1, 5]),
    ],
)
def test_compose_power(g, ell, f):
    assert zp.compose_power(g, ell) == f


@pytest.mark.parametrize(
    "f, g",
    [([1, 0, 6, 0, 5, 0, 1], [1, 6, 5, 1]), ([1, 1, 0, 1], None), ([0, 0, 0, 0, 1], [0, 0, 1])],
)
def test_sqrt_decompose(f, g):
    assert zp.sqrt_decompose(f) == g


@pytest.mark.parametrize(
    "f, d",
    [
        ([1, 0, 5, 0, 6, 0, 1], -153664),
        ([1, 0, 1, 0, 9, 0, 1], -467943424),
        ([-2, 0, 1], 8),
        ([1, 0, 0, 0, 0, 0, 1], -46656),
    ],
)
def test_discriminant_examples(f, d):
    assert zp.discriminant(f) == d
    assert sylvester_discriminant(f) == d


def test_discriminant_errors():
    with pytest.raises(ConstantPolynomialError):
        zp.discriminant([5])


@settings(max_examples=300)
@given(polys.filter(lambda p: len(p) > 1), polys.filter(lambda p: len(p) > 1))
def test_resultant_matches_sylvester(f, g):
    assert zp.resultant(f, g) == sylvester_resultant(f, g)


@settings(max_examples=300)
@given(polys.filter(lambda p: len(p) > 2))
def test_discriminant_matches_sylvester(f):
    assert zp.discriminant(f) == sylvester_discriminant(f)


def test_power_composition_spot_value():
    # g = X^3 + 1: (-1)^3 4^3 * 1 * (-27)^2
    assert zp.discriminant(zp.compose_power([1, 0, 0, 1], 2)) == -64 * 729


def power_composition_cases(count=200, seed=1):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = rng.choice((1, 3, 5))
        g = [rng.randint(-9, 9) for _ in range(q)] + [1]
        if g[0] == 0:
            continue
        out.append(g)
    return out


def test_power_composition_identity():
    for g in power_composition_cases():
        q = len(g) - 1
        dg = zp.discriminant(g) if q > 1 else 1
        lhs = zp.discriminant(zp.compose_power(g, 2))
        assert lhs == (-1) ** q * 4**q * g[0] * dg * dg
        assert lhs == sylvester_discriminant(zp.compose_power(g, 2))


def shape_cases(count=200, seed=2):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        j, k, c = (rng.randint(-10, 10) for _ in range(3))
        if c:
            out.append((j, k, c))
    return out


def test_shape_discriminant_closed_form():
    for j, k, c in shape_cases():
        m, n = j * c, k * c
        a, b = n * n // c - 2 * m, m * m - 2 * n
        f = [c, 0, b, 0, a, 0, 1]
        assert zp.discriminant(f) == -64 * c**5 * (j * k * c - 1) ** 4 * d_tilde(j, k, c) ** 2
        assert disc_shape_closed_form(j, k, c) == zp.discriminant(f)


@pytest.mark.parametrize(
    "f, parts",
    [
        ([1, 0, 1, 0, 1, 0, 1], [[1, 0, 1], [1, 0, 0, 0, 1]]),
        ([1, 0, 6, 0, 5, 0, 1], [[1, 0, 6, 0, 5, 0, 1]]),
        ([-4, 0, 0, 0, 1], [[-2, 0, 1], [2, 0, 1]]),
    ],
)
def test_factor_examples(f, parts):
    fz = factor_over_Z(IntPoly(f))
    assert sorted(list(g.coeffs) for g, _ in fz.factors) == sorted(parts)
    assert fz.expand() == IntPoly(f)


@pytest.mark.parametrize(
    "f, irr",
    [([7, 0, 35, 0, 21, 0, 1], True), ([1, 0, 1, 0, 1, 0, 1], False), ([1, 6, 9, 1], True)],
)
def test_irreducibility_examples(f, irr):
    assert is_irreducible(IntPoly(f)) is irr


def test_swinnerton_dyer_like_polynomial():
    # X^4 - 10X^2 + 1 is irreducible but splits mod every prime
    f = IntPoly([1, 0, -10, 0, 1])
    assert is_irreducible(f)
    assert factor_over_Z(f).is_irreducible


@settings(max_examples=300)
@given(st.lists(polys.filter(lambda p: len(p) > 1), min_size=1, max_size=3), st.integers(-6, 6).filter(bool))
def test_factor_reassembly(parts, unit):
    f = [unit]
    for p in parts:
        f = poly_mul(f, p)
    fz = factor_over_Z(IntPoly(f))
    assert fz.expand() == IntPoly(f)
    for g, _ in fz.factors:
        if g.degree > 1 and modular_irreducibility_certificate(g) is not None:
            assert is_irreducible(g)
    assert sum(e * g.degree for g, e in fz.factors) == len(f) - 1
    assert sum(e for _, e in fz.factors) >= len(parts)


def test_factor_zero_rejected():
    with pytest.raises(ZeroPolynomialError):
        factor_over_Z(IntPoly([]))


def test_hensel_lift_reassembles_mod_power():
    f = [1, 0, -10, 0, 1]
    p, k = 3, 6
    from evenmono import gfp

    fs = [g for g, _ in gfp.factor(gfp.reduce(f, p), p)]
    lifted = hensel_lift(f, fs, p, k)
    prod = [1]
    for g in lifted:
        prod = [c % p**k for c in poly_mul(prod, g)]
    assert prod == [c % p**k for c in f]


def test_mignotte_bound_dominates_factor_coefficients():
    f = poly_mul([3, -5, 0, 1], [-7, 2, 1])
    bound = zp.mignotte_bound(f)
    for g, _ in factor_over_Z(IntPoly(f)).factors:
        assert max(abs(c) for c in g.coeffs) <= bound
