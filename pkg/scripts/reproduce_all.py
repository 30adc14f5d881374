"""Run the four reproduction checks at full scale and write a JSON summary.

    python3 scripts/reproduce_all.py --out results/reproduction.json
"""

import argparse
import json
import os
import sys
import time

from evenmono.errors import VerificationFailure
from evenmono.hunt import verify_lem_1_2, verify_lem_4_2, verify_thm_1_1, verify_thm_4_1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=60, help="box bound for thm1.1")
    ap.add_argument("--s3-bound", type=int, default=40)
    ap.add_argument("--quintic-bound", type=int, default=6)
    ap.add_argument("--max-b", type=int, default=500)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="results/reproduction.json")
    args = ap.parse_args()

    checks = {
        "thm1.1": lambda: verify_thm_1_1(args.bound, jobs=args.jobs),
        "lem1.2": verify_lem_1_2,
        "thm4.1": lambda: verify_thm_4_1(args.max_b),
        "lem4.2": lambda: verify_lem_4_2(args.s3_bound, args.quintic_bound, jobs=args.jobs),
    }
    results = {}
    failed = False
    for name, run in checks.items():
        t0 = time.perf_counter()
        try:
            rep = run()
            entry = {"passed": True, "summary": rep.summary}
        except VerificationFailure as exc:
            entry = {"passed": False, "witnesses": exc.witness}
            failed = True
        entry["seconds"] = round(time.perf_counter() - t0, 2)
        results[name] = entry
        print(f"{name:7s} {'PASS' if entry['passed'] else 'FAIL'} {entry['seconds']:8.2f}s", file=sys.stderr)

    os.makedirs(os.path.dirname(os.path.abspath(args.out)), exist_ok=True)
    with open(args.out, "w") as fh:
        json.dump(results, fh, indent=2, default=str)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
