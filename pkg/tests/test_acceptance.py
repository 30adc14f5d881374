"""Acceptance criteria, one test per criterion.

Each test prints a single ``[criterion N] PASS|FAIL`` line (outside pytest's
capture) before asserting, so ``pytest -v`` shows the verdicts inline.
"""

import json
import random
import time

import pytest

from evenmono import zpoly as zp
from evenmono.cli import main
from evenmono.cyclo import cyclotomic_poly, match_remark
from evenmono.galois6 import Certainty, D6Params, Group, classify, cubic_disc, d6_shape, d_value
from evenmono.hunt import (
    CYCLIC_EVEN_POLYS,
    MONOGENIC_C6_TRIPLES,
    SearchSpec,
    d_tilde,
    disc_m0,
    disc_n0,
    family_6t8,
    family_m0,
    family_n0,
    full_cycle_prime,
    qualifies_6t8,
    run_search,
)
from evenmono.mono import Status, is_monogenic
from evenmono.parse import parse_poly, render
from evenmono.zfactor import eisenstein_prime, factor_over_Z, is_irreducible
from evenmono.zint import factorize, is_square
from evenmono.zpoly import IntPoly
from oracles import slow_is_prime, trial_factor


@pytest.fixture
def verdict(capsys):
    def emit(n, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())
        assert ok, detail

    return emit


def _cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_criterion_1_c6_triples(capsys, verdict):
    t0 = time.perf_counter()
    code, out, err = _cli(capsys, "verify", "thm1.1", "--bound", "60")
    elapsed = time.perf_counter() - t0
    ok = code == 0 and out.startswith("PASS thm1.1")
    if ok:
        summary = json.loads(out.split(" ", 2)[2])
        box = {tuple(t) for t in summary["box_hits"]}
        shape = {tuple(t) for t in summary["shape_hits"]}
        ok = box == shape == MONOGENIC_C6_TRIPLES
    ok = ok and elapsed < 300
    verdict(1, "six monogenic C6 triples, box and shape, bound 60", ok, f"({elapsed:.1f}s)")


def test_criterion_2_cyclic_lists(verdict):
    t0 = time.perf_counter()
    problems = []
    count = 0
    for q, polys in CYCLIC_EVEN_POLYS.items():
        for f in polys:
            count += 1
            assert f.degree == 2 * q
            if is_monogenic(f).status is not Status.MONOGENIC:
                problems.append((str(f), "status"))
            if match_remark(IntPoly(zp.sqrt_decompose(f.coeffs))) is None:
                problems.append((str(f), "remark"))
            if full_cycle_prime(f, 500) is None:
                problems.append((str(f), "cycle"))
    code = main(["verify", "lem1.2"])
    elapsed = time.perf_counter() - t0
    ok = not problems and count == 6 and code == 0 and elapsed < 60
    verdict(2, "degree 10 and 22 lists monogenic, matched, full cycle", ok, f"{problems} ({elapsed:.1f}s)")


def test_criterion_3_6t8_family(capsys, verdict):
    t0 = time.perf_counter()
    qualifying = [b for b in range(1, 501) if qualifies_6t8(b)]
    # independent restatement of the qualifier
    expected = [
        b for b in range(1, 501)
        if b % 4 == 2 and all(e == 1 for e in trial_factor(b * (b - 27)).values())
    ]
    bad = []
    for b in qualifying:
        f = family_6t8(b)
        label = classify(9, b, b)
        if is_monogenic(f).status is not Status.MONOGENIC or label.group is not Group.S4_6T8:
            bad.append(b)
    code, out, _ = _cli(capsys, "verify", "thm4.1", "--max-b", "500")
    elapsed = time.perf_counter() - t0
    ok = qualifying == expected and not bad and len(qualifying) >= 50 and code == 0 and elapsed < 120
    verdict(3, "6T8 family b <= 500", ok, f"qualifying={len(qualifying)} bad={bad} ({elapsed:.1f}s)")


def test_criterion_4_negative_witness(verdict):
    f = IntPoly.from_desc(1, 0, 21, 0, 35, 0, 7)
    rep = is_monogenic(f)
    label = classify(21, 35, 7)
    ok = (
        is_irreducible(f)
        and eisenstein_prime(f) == 7
        and label.group is Group.C6
        and label.certainty is Certainty.PROVED
        and rep.status is Status.NOT_MONOGENIC
        and rep.failing_prime == 2
    )
    verdict(4, "X^6+21X^4+35X^2+7 C6/proved, NotMonogenic at 2", ok, f"{label.group}/{label.certainty} {rep.status} at {rep.failing_prime}")


def test_criterion_5_dihedral_nonexistence(capsys, verdict):
    t0 = time.perf_counter()
    code, out, err = _cli(capsys, "verify", "lem4.2", "--bound", "40", "--quintic-bound", "6")
    elapsed = time.perf_counter() - t0
    ok = code == 0 and out.startswith("PASS lem4.2")
    detail = ""
    if ok:
        summary = json.loads(out.split(" ", 2)[2])
        monogenic_dihedral = [
            r for r in summary["quintic"]["dihedral"] if r["status"] == "Monogenic"
        ]
        ok = summary["s3_monogenic"] == 0 and not monogenic_dihedral
        detail = f"s3={summary['s3_sextics']} quintics={summary['quintic']['scanned']}"
    ok = ok and elapsed < 600
    verdict(5, "no monogenic S3 sextics (40) or dihedral decics (6)", ok, f"{detail} ({elapsed:.1f}s)")


def test_criterion_6_dedekind_oracles(verdict):
    bad = []
    for d in range(-200, 201):
        if abs(d) < 2 or any(e > 1 for e in trial_factor(d).values()):
            continue
        monogenic = is_monogenic(IntPoly([-d, 0, 1])).status is Status.MONOGENIC
        if monogenic != (d % 4 != 1):
            bad.append(("quadratic", d))
    for p in range(2, 32):
        if slow_is_prime(p) and is_monogenic(cyclotomic_poly(p)).status is not Status.MONOGENIC:
            bad.append(("cyclotomic", p))
    verdict(6, "quadratic and cyclotomic Dedekind laws", not bad, str(bad))


def test_criterion_7_discriminant_identities(verdict):
    rng = random.Random(2024)
    bad = []
    done = 0
    while done < 200:
        j, k, c = rng.randint(-10, 10), rng.randint(-10, 10), rng.randint(-10, 10)
        if c == 0:
            continue
        m, n = j * c, k * c
        f = [c, 0, m * m - 2 * n, 0, n * n // c - 2 * m, 0, 1]
        if zp.discriminant(f) != -64 * c**5 * (j * k * c - 1) ** 4 * d_tilde(j, k, c) ** 2:
            bad.append(("closed_form", j, k, c))
        done += 1
    done = 0
    while done < 200:
        q = (1, 3, 5)[done % 3]
        g = [rng.randint(-12, 12) for _ in range(q)] + [1]
        if g[0] == 0:
            continue
        dg = zp.discriminant(g) if q > 1 else 1
        if zp.discriminant(zp.compose_power(g, 2)) != (-1) ** q * 4**q * g[0] * dg * dg:
            bad.append(("power", g))
        done += 1
    for k in range(-10, 11):
        for c in range(-10, 11):
            if c == 0:
                continue
            if zp.discriminant(family_m0(k, c).coeffs) != -64 * c**5 * (4 * k**3 * c + 27) ** 2:
                bad.append(("m0", k, c))
            if zp.discriminant(family_n0(k, c).coeffs) != -64 * c**5 * (4 * k**3 * c * c + 27) ** 2:
                bad.append(("n0", k, c))
            if disc_m0(k, c) != zp.discriminant(family_m0(k, c).coeffs):
                bad.append(("m0-accessor", k, c))
            if disc_n0(k, c) != zp.discriminant(family_n0(k, c).coeffs):
                bad.append(("n0-accessor", k, c))
    verdict(7, "shape, power-composition and family discriminants", not bad, str(bad[:5]))


def _shape_soundness(rng, n):
    bad = 0
    for _ in range(n):
        a, b = rng.randint(-60, 60), rng.randint(-60, 60)
        c = rng.choice([x for x in range(-60, 61) if x])
        for p in d6_shape(a, b, c):
            bad += (p.a, p.b, p.c) != (a, b, c)
    return bad


def _d_compat(rng, n):
    bad = 0
    done = 0
    while done < n:
        m, nn = rng.randint(-12, 12), rng.randint(-12, 12)
        c = rng.choice([x for x in range(-40, 41) if x])
        if (nn * nn) % c:
            continue
        done += 1
        a, b = nn * nn // c - 2 * m, m * m - 2 * nn
        dg = cubic_disc(a, b, c)
        for p in d6_shape(a, b, c):
            d = d_value(p)
            if dg != 0 and not (d * dg > 0 and is_square(d * dg)):
                bad += 1
            if d == 0 and dg != 0:
                bad += 1
        j, k = rng.randint(-10, 10), rng.randint(-10, 10)
        bad += d_value(D6Params(j * c, k * c, c)) != -c * c * d_tilde(j, k, c)
    return bad


def _reassembly(rng, n_ints, n_polys):
    bad = 0
    for _ in range(n_ints):
        x = rng.choice([-1, 1]) * rng.randint(1, 10**12)
        bad += factorize(x).value() != x
    for _ in range(n_polys):
        parts = [[rng.randint(-9, 9) for _ in range(rng.randint(1, 3))] + [rng.choice([1, -1, 2])]
                 for _ in range(rng.randint(1, 3))]
        f = [rng.choice([1, -3, 5])]
        for p in parts:
            f = zp.mul(f, p)
        bad += factor_over_Z(IntPoly(f)).expand() != IntPoly(f)
    return bad


def _round_trip(rng, n):
    bad = 0
    for _ in range(n):
        deg = rng.randint(0, 22)
        p = IntPoly([rng.randint(-(10**9), 10**9) for _ in range(deg + 1)])
        bad += parse_poly(render(p)).poly != p
    return bad


def _parallel_determinism():
    spec = SearchSpec.box(14, 14, 14, ("c6_only", "monogenic_only"), chunks=8)
    one = run_search(SearchSpec.box(14, 14, 14, ("c6_only", "monogenic_only")), jobs=1)
    eight = run_search(spec, jobs=8)
    return int(one != eight)


def test_criterion_8_property_suites(verdict):
    rng = random.Random(99)
    counts = {
        "shape_soundness": _shape_soundness(rng, 100_000),
        "d_value_compat": _d_compat(rng, 2_000),
        "reassembly": _reassembly(rng, 10_000, 300),
        "parse_round_trip": _round_trip(rng, 10_000),
        "parallel_determinism": _parallel_determinism(),
    }
    ok = all(v == 0 for v in counts.values())
    verdict(8, "property suites with zero violations", ok, json.dumps(counts))
