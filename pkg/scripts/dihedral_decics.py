"""Scan quintic cores g for g(X^2) with a regular dihedral Frobenius profile.

Prints every core that passes the sampled test with its monogenicity
verdict.  A known positive (the D5 decic built from the quintic field of
discriminant 47^2) is checked first so an empty scan means something.

    python3 scripts/dihedral_decics.py --bound 6
"""

import argparse
import sys
import time

from evenmono import zpoly as zp
from evenmono.hunt import dihedral_quintic_scan, looks_dihedral_regular
from evenmono.zpoly import IntPoly

KNOWN_D5_CORE = [229345007, 34157767, 1972637, 53016, 611, 1]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=6)
    args = ap.parse_args()

    if not looks_dihedral_regular(IntPoly(zp.compose_power(KNOWN_D5_CORE, 2)), 5):
        print("detector missed the known D5 decic", file=sys.stderr)
        return 1
    t0 = time.perf_counter()
    res = dihedral_quintic_scan(args.bound)
    print(f"scanned {res['scanned']} cores, {res['square_disc']} with square discriminant, "
          f"{len(res['dihedral'])} dihedral ({time.perf_counter() - t0:.1f}s)")
    for row in res["dihedral"]:
        print(row["core"], row["status"], row["failing_prime"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
