"""Command-line front end: ``evenmono analyze | search | verify | cyclo``.

Records go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 parse or usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
import time
from dataclasses import asdict, dataclass, field

from . import zpoly as zp
from .cyclo import match_remark, real_cyclotomic_minpoly, shifted_variant
from .errors import (
    ConstantPolynomialError,
    DegenerateConductorError,
    InconsistencyError,
    VerificationFailure,
    ZeroDiscriminantError,
)
from .galois6 import classify, d6_shape
from .hunt import (
    GROUP_FILTER_ALIASES,
    SearchHit,
    SearchSpec,
    run_search,
    verify_lem_1_2,
    verify_lem_4_2,
    verify_thm_1_1,
    verify_thm_4_1,
)
from .mono import disc_factorization, is_monogenic
from .parse import ParseError, parse_poly, render
from .zfactor import is_irreducible
from .zint import Factorization
from .zpoly import IntPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

RECORD_FIELDS = (
    "input",
    "degree",
    "disc",
    "disc_factorization",
    "irreducible",
    "galois",
    "monogenic",
    "shape_params",
    "remark_match",
    "timing_ms",
)


@dataclass
class ReportRecord:
    input: dict
    degree: int
    disc: str
    disc_factorization: dict | None
    irreducible: bool
    galois: dict | None
    monogenic: dict | None
    shape_params: list | None = None
    remark_match: dict | None = None
    timing_ms: float | None = field(default=None)

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    def csv_row(self) -> list[str]:
        out = []
        for name in RECORD_FIELDS:
            v = getattr(self, name)
            out.append(v if isinstance(v, str) else json.dumps(v, separators=(",", ":")))
        return out

    def human(self) -> str:
        lines = [
            f"input: {self.input['text']}",
            f"degree: {self.degree}",
            f"disc: {self.disc}",
            f"disc_factorization: {_fac_text(self.disc_factorization)}",
            f"irreducible: {str(self.irreducible).lower()}",
        ]
        if self.galois is not None:
            lines.append(f"galois: {self.galois['group']}/{self.galois['certainty']}")
        if self.monogenic is not None:
            mono = self.monogenic["status"]
            if self.monogenic["failing_prime"] is not None:
                mono += f" (failing prime {self.monogenic['failing_prime']})"
            lines.append(f"monogenic: {mono}")
        if self.shape_params:
            lines.append("shape_params: " + ", ".join(
                f"(m={p['m']}, n={p['n']}, c={p['c']})" for p in self.shape_params))
        if self.remark_match is not None:
            r = self.remark_match
            lines.append(f"remark_match: d={r['d']} sign={r['sign']:+d} mirror={str(r['mirror']).lower()}")
        if self.timing_ms is not None:
            lines.append(f"timing_ms: {self.timing_ms:.1f}")
        return "\n".join(lines)


def encode_factorization(fac: Factorization | None) -> dict | None:
    if fac is None:
        return None
    return {
        "sign": fac.sign,
        "factors": [[str(p), e] for p, e in fac.factors],
        "cofactor": str(fac.cofactor),
        "complete": fac.complete,
    }


def _fac_text(enc: dict | None) -> str:
    if enc is None:
        return "-"
    parts = [p if e == 1 else f"{p}^{e}" for p, e in enc["factors"]]
    if enc["cofactor"] != "1":
        parts.append(f"[{enc['cofactor']}]")
    body = " * ".join(parts) or "1"
    return ("-" if enc["sign"] < 0 else "") + body


def _even_sextic_params(f: IntPoly) -> tuple[int, int, int] | None:
    cs = f.coeffs
    if f.degree != 6 or cs[6] != 1 or any(cs[i] for i in (1, 3, 5)) or cs[0] == 0:
        return None
    return cs[4], cs[2], cs[0]


def _match_target(f: IntPoly) -> IntPoly | None:
    if not f.is_monic() or f.degree < 1:
        return None
    g = zp.sqrt_decompose(f.coeffs)
    if g is not None and len(g) > 2:
        return IntPoly(g)
    return f


def build_record(f: IntPoly, text: str, *, shapes=None, label=None, report=None,
                 timed: bool = True) -> ReportRecord:
    """Assemble the record for f; precomputed pieces are reused when passed."""
    t0 = time.perf_counter()
    if f.degree < 1:
        raise ConstantPolynomialError("analysis needs degree at least 1")
    irreducible = is_irreducible(f)
    if report is None and f.is_monic():
        report = is_monogenic(f)
    if report is not None and report.disc_factorization is not None:
        disc, fac = report.disc, report.disc_factorization
    else:
        disc, fac = disc_factorization(f)
    params = _even_sextic_params(f)
    galois = None
    shape_params = None
    if params is not None:
        if irreducible:
            label = label if label is not None else classify(*params)
            galois = {"group": label.group.value, "certainty": label.certainty.value}
        if shapes is None:
            shapes = d6_shape(*params)
        shape_params = [{"m": p.m, "n": p.n, "c": p.c} for p in shapes]
    monogenic = None
    if report is not None:
        monogenic = {"status": report.status.value, "failing_prime": report.failing_prime}
    target = _match_target(f)
    match = match_remark(target) if target is not None else None
    remark = None if match is None else {"d": match.d, "sign": match.sign, "mirror": match.mirror}
    return ReportRecord(
        input={"text": text, "coeffs": list(f.coeffs)},
        degree=f.degree,
        disc=str(disc),
        disc_factorization=encode_factorization(fac if disc else None),
        irreducible=irreducible,
        galois=galois,
        monogenic=monogenic,
        shape_params=shape_params,
        remark_match=remark,
        timing_ms=round((time.perf_counter() - t0) * 1000, 3) if timed else None,
    )


def hit_record(hit: SearchHit) -> ReportRecord:
    f = IntPoly([hit.triple[2], 0, hit.triple[1], 0, hit.triple[0], 0, 1])
    return build_record(f, render(f), shapes=hit.shapes, label=hit.label,
                        report=hit.report, timed=False)


# -- output -------------------------------------------------------------------------


def write_atomic(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".evenmono-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_records(records: list[ReportRecord], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(r.to_json() + "\n" for r in records)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


# -- commands -----------------------------------------------------------------------


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not integers: {text!r}") from None
    if any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError("bounds must be nonnegative")
    return vals  # type: ignore[return-value]


def cmd_analyze(args) -> int:
    expr = parse_poly(args.poly)
    rec = build_record(expr.poly, expr.source)
    print(rec.to_json() if args.json else rec.human())
    return EXIT_OK


def cmd_search(args) -> int:
    filters = []
    if args.group:
        filters.append(GROUP_FILTER_ALIASES[args.group])
    if args.monogenic:
        filters.append("monogenic_only")
    if args.eisenstein:
        filters.insert(0, "eisenstein_filter")
    if args.box:
        spec = SearchSpec.box(*args.box, filters=filters, chunks=args.jobs)
    else:
        spec = SearchSpec.shape(*args.shape, filters=filters, chunks=args.jobs)
    hits = run_search(spec, jobs=args.jobs)
    text = format_records([hit_record(h) for h in hits], args.format)
    if args.out:
        write_atomic(args.out, text)
        print(f"wrote {len(hits)} records to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    name = args.name
    try:
        if name == "thm1.1":
            rep = verify_thm_1_1(args.bound or 60, jobs=args.jobs)
        elif name == "lem1.2":
            rep = verify_lem_1_2()
        elif name == "thm4.1":
            rep = verify_thm_4_1(args.max_b)
        else:
            rep = verify_lem_4_2(args.bound or 40, args.quintic_bound, jobs=args.jobs)
    except VerificationFailure as exc:
        print(f"FAIL {name}", file=sys.stdout)
        print(json.dumps({"witnesses": exc.witness}, default=str), file=sys.stderr)
        return EXIT_FAIL
    print(f"PASS {name} " + json.dumps(rep.summary, default=str, separators=(",", ":")))
    return EXIT_OK


def cmd_cyclo(args) -> int:
    h = real_cyclotomic_minpoly(args.d)
    if args.shift == 0 and not args.negate:
        out = h
    else:
        out = shifted_variant(h, args.shift, args.negate)
    print(render(out))
    return EXIT_OK


def _shift(text: str) -> int:
    if text not in ("+2", "2", "-2", "0"):
        raise argparse.ArgumentTypeError("shift must be one of +2, -2, 0")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="evenmono", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report on a single polynomial")
    a.add_argument("poly")
    a.add_argument("--json", action="store_true", help="one-line structured record")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("search", help="bounded search over even sextics")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--box", type=_triple, metavar="A,B,C")
    mode.add_argument("--shape", type=_triple, metavar="M,N,CMAX")
    s.add_argument("--group", choices=sorted(GROUP_FILTER_ALIASES))
    s.add_argument("--monogenic", action="store_true")
    s.add_argument("--eisenstein", action="store_true", help="prefilter the cubic core")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="rerun a reproduction check")
    v.add_argument("name", choices=("thm1.1", "lem1.2", "thm4.1", "lem4.2"))
    v.add_argument("--bound", type=int)
    v.add_argument("--max-b", type=int, default=500)
    v.add_argument("--quintic-bound", type=int, default=6)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cyclo", help="shifted real cyclotomic minimal polynomials")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--shift", type=_shift, default=0)
    c.add_argument("--negate", action="store_true")
    c.set_defaults(func=cmd_cyclo)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1 or (getattr(args, "bound", None) or 1) < 1:
        print("error: --jobs and --bound must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateConductorError as exc:
        print(f"error: DegenerateConductor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstantPolynomialError, ZeroDiscriminantError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistencyError, AssertionError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
