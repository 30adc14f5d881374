"""Census of Galois groups and monogenicity verdicts over a coefficient box.

Tabulates, for irreducible X^6 + aX^4 + bX^2 + c with |a|, |b|, |c| <= B,
how many fall in each group and how many of those are monogenic.

    python3 scripts/group_census.py --bound 12 --jobs 1
"""

import argparse
import csv
import sys
from collections import Counter

from evenmono.galois6 import Group
from evenmono.hunt import SearchSpec, run_search


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--csv", help="also write the table here")
    args = ap.parse_args()

    hits = run_search(SearchSpec.box(args.bound, args.bound, args.bound, ("irreducible",), args.jobs), args.jobs)
    total = Counter(h.label.group for h in hits)
    mono = Counter(h.label.group for h in hits if h.report.status.value == "Monogenic")
    unknown = sum(h.report.status.value == "Unknown" for h in hits)

    rows = [(g.value, total[g], mono[g]) for g in Group]
    print(f"{'group':8s} {'count':>7s} {'monogenic':>10s}")
    for name, n, m in rows:
        print(f"{name:8s} {n:7d} {m:10d}")
    print(f"irreducible: {len(hits)}  unknown verdicts: {unknown}", file=sys.stderr)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["group", "count", "monogenic"])
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
