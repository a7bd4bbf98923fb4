"""Search one R-B target and write the catalog as JSON, with orbit and variety summaries.

    python scripts/search_catalog.py 30 15 -o catalog_30_15.json --workers 4
"""

import argparse
import time
from collections import Counter

from parity600.contextuality import nhv_max
from parity600.export import catalog_json
from parity600.search import critical_only, search, stderr_progress
from parity600.symmetry import classify, variety_key


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("R", type=int)
    ap.add_argument("B", type=int)
    ap.add_argument("-o", "--output")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--progress", action="store_true")
    args = ap.parse_args()

    t = time.perf_counter()
    sets = search((args.R, args.B), workers=args.workers,
                  progress=stderr_progress if args.progress else None)
    crit = critical_only(sets)
    print(f"{args.R}-{args.B}: {len(sets)} proofs, {len(crit)} critical  ({time.perf_counter() - t:.1f}s)")
    if not sets:
        return
    classes = classify(sets)
    print("geometric orbits:", sorted(len(v) for v in classes.values()))
    print("variety classes:", sorted(Counter(variety_key(s) for s in sets).values()))
    print("nhv maxima:", dict(Counter(nhv_max(s).F_max_nhv for s in sets)))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(catalog_json(sets, f"{args.R}-{args.B}"))


if __name__ == "__main__":
    main()
