"""Geometry and facet census, then exhaustive proof counts for each R at the given B values.

    python scripts/census.py --b 13 15
"""

import argparse
import time

from parity600.facets import default_facets
from parity600.polytope import default_polytope
from parity600.search import search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b", type=int, nargs="*", default=[13], help="odd basis counts to scan")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    P = default_polytope()
    F = default_facets()
    print(f"rays {len(P.rays)}  bases {len(P.bases)}")
    print(f"DLPs {len(F.enumerate_dlps())}  DPPs {len(F.enumerate_dpps())}  RCs {len(F.enumerate_rcs())}")
    print("tilings", {k: len(F.tilings(k)) for k in ("RC", "DLP", "DPP")})

    for B in args.b:
        for R in range(B, 2 * B + 1):
            t = time.perf_counter()
            n = len(search((R, B), workers=args.workers))
            print(f"{R}-{B}: {n}  ({time.perf_counter() - t:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
