"""Run every construction family and report counts, multiplicities and orbit totals.

    python scripts/constructions.py [--json out.json]
"""

import argparse
import json
import time
from collections import Counter

from parity600.constructions import default_constructions
from parity600.symmetry import classify, grand_total


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", help="write the summary here")
    args = ap.parse_args()
    C = default_constructions()
    summary = {}

    t = time.perf_counter()
    t1 = C.all_30_15_type1()
    summary["30-15a"] = {"distinct": len(t1), "orbit_total": grand_total(t1.values())}
    for kind in ("34-17", "26-13", "38-19", "30-15b"):
        cat = C.catalog(kind)
        reps = Counter(c.result.basis_ids for c in cat)
        distinct = {c.result.basis_ids: c.result for c in cat}
        classes = classify(distinct.values())
        summary[kind] = {
            "generated": len(cat),
            "distinct": len(reps),
            "times_each": sorted(set(reps.values())),
            "orbits": len(classes),
            "orbit_total": grand_total(v[0] for v in classes.values()),
        }
    p50 = [len(C.partition_even_set(C.delete_dpps([d]))) for d in range(1, 37)]
    p54 = [len(C.partition_even_set(C.delete_dlp(d))) for d in C.F.enumerate_dlps()]
    summary["50-25"] = {"per_ambient": sorted(set(p50)), "proofs": 2 * sum(p50)}
    summary["54-27"] = {"per_ambient": sorted(set(p54)), "proofs": 2 * sum(p54)}
    s60 = C.construct_60_41()
    summary["60-41"] = {"witness": list(s60.basis_ids), "spreads": len(C.spreads())}
    summary["seconds"] = round(time.perf_counter() - t, 1)

    for k, v in summary.items():
        print(f"{k:8} {v}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary, fh, indent=2)


if __name__ == "__main__":
    main()
