"""One check per acceptance criterion; each records a PASS/FAIL line for the summary."""

import os
import subprocess
import sys
import time
from collections import Counter

import pytest

from conftest import ACCEPTANCE
from parity600.constructions import Constructions
from parity600.contextuality import nhv_max
from parity600.data import tables
from parity600.export import catalog_json, export_dot, export_mmp
from parity600.facets import Facets, dpp_lines
from parity600.polytope import Polytope, table2_bases
from parity600.raybasis import RayBasisSet, is_parity_proof, profile
from parity600.search import is_basis_critical, is_colorable, search
from parity600.symmetry import classify, grand_total, groups, orbit_report, variety_key


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def _t(*parts):
    return RayBasisSet.from_quads(sum(parts, ()))


GOLDEN = {
    "table3 bold": _t(tables.TABLE3_BOLD),
    "table3 plain": _t(tables.TABLE3_PLAIN),
    "table4 34-17": _t(tables.TABLE4_PLAIN_BOLD, tables.TABLE4_BOLD_UNDERLINED),
    "table4 26-13": _t(tables.TABLE4_PLAIN_BOLD, tables.TABLE4_BOLD_ITALIC),
    "table5 38-19": _t(tables.TABLE5_PLAIN_BOLD, tables.TABLE5_BOLD_UNDERLINED),
    "table5 30-15": _t(tables.TABLE5_PLAIN_BOLD, tables.TABLE5_BOLD_ITALIC),
    "table6 bold": _t(tables.TABLE6_BOLD),
    "table6 plain": _t(tables.TABLE6_PLAIN),
    "table7 bold": _t(tables.TABLE7_BOLD),
    "table7 plain": _t(tables.TABLE7_PLAIN),
    "table8 36-19": _t(tables.TABLE8_PLAIN, tables.TABLE8_BOLD),
    "table8 32-17": _t(tables.TABLE8_PLAIN, tables.TABLE8_BOLD_ITALIC),
}


def test_criterion_1_geometry():
    t = time.perf_counter()
    P = Polytope()
    dt = time.perf_counter() - t
    printed = table2_bases()
    ok = (
        len(P.rays) == 60
        and len(P.bases) == 75
        and all(set(b.rays) == set(printed[i]) for i, b in P.bases.items())
        and all(len(P.ray_bases[r]) == 5 and P.degree(r) == 15 for r in P.rays)
        and dt < 1.0
    )
    record(1, ok, f"60 rays, 75 bases match table, degree 15, in 5 bases ({dt:.2f}s)")


def test_criterion_2_facets():
    t = time.perf_counter()
    F = Facets()
    counts = (len(F.enumerate_dlps()), len(F.enumerate_dpps()), len(F.enumerate_rcs()))
    til = tuple(len(F.tilings(k)) for k in ("RC", "DLP", "DPP"))
    dt = time.perf_counter() - t
    ok = counts == (100, 36, 25) and til == (10, 20, 12) and dt < 10
    record(2, ok, f"DLP/DPP/RC {counts}, tilings {til} ({dt:.1f}s)")


def test_criterion_3_mating(F):
    t = time.perf_counter()
    lines = dpp_lines()
    good = sum(sorted(F.reconstruct_bases(line)) == list(range(1, 76)) for line in lines)
    dt = time.perf_counter() - t
    record(3, good == len(lines) == 12 and dt < 5, f"{good}/12 DPP lines recover all 75 bases ({dt:.2f}s)")


def test_criterion_4_search(proofs_26_13):
    crit = all(is_basis_critical(s) for s in proofs_26_13)
    none25 = search((25, 13)) == []
    b17 = {R: len(search((R, 17), limit=1)) for R in (32, 33, 34)}
    empty31 = search((31, 17), workers=os.cpu_count() or 1) == []
    ok = len(proofs_26_13) == 1800 and crit and none25 and all(b17.values()) and empty31
    record(4, ok, f"26-13: {len(proofs_26_13)} all critical={crit}; 25-13 empty={none25}; "
                  f"32/33/34-17 nonempty={all(b17.values())}; 31-17 empty={empty31}")


def test_criterion_5_construction_counts(C):
    t1 = C.all_30_15_type1()
    pairs = {frozenset([k, C.type1_complement(k)]) for k in t1}
    disjoint = all(set(t1[a].rays).isdisjoint(t1[b].rays) for a, b in map(tuple, pairs))
    fam = {}
    for kind in ("34-17", "26-13", "38-19", "30-15b"):
        reps = Counter(c.result.basis_ids for c in C.catalog(kind))
        fam[kind] = (len(reps), set(reps.values()))
    p50 = [len(C.partition_even_set(C.delete_dpps([d]))) for d in range(1, 37)]
    p54 = [len(C.partition_even_set(C.delete_dlp(d))) for d in C.F.enumerate_dlps()]
    dlp50 = {(len(C.dlps_within(C.delete_dpps([d]))), len(C.separation12_pairs(C.delete_dpps([d]))))
             for d in range(1, 37)}
    ok = (
        len(t1) == 240 and len(pairs) == 120 and disjoint
        and fam == {"34-17": (3600, {1}), "26-13": (1800, {2}), "38-19": (3600, {1}), "30-15b": (3600, {1})}
        and set(p50) == {291} and 2 * sum(p50) == 20952
        and set(p54) == {368} and 2 * sum(p54) == 73600
        and dlp50 == {(50, 100)}
    )
    record(5, ok, f"type-1 {len(t1)}/{len(pairs)} pairs; {fam}; 50-25 total {2 * sum(p50)}; "
                  f"54-27 total {2 * sum(p54)}; 50-50 DLPs/sep-12 pairs {dlp50}")


def test_criterion_6_worked_examples(C, F):
    got = {
        "table3 bold": C.construct_30_15_type1([1, 2, 3]),
        "table3 plain": C.construct_30_15_type1([4, 5, 6]),
        "table4 34-17": C.construct_34_17((1, 2), F.dlp_of((17, 25, 42))),
        "table4 26-13": C.construct_26_13((1, 2), F.dlp_of((17, 25, 42))),
    }
    dual = C.construct_26_13((16, 34), F.dlp_of((3, 19, 56)))
    pair = (F.dlp_of((5, 19, 46)), F.dlp_of((7, 34, 53)))
    got["table5 38-19"] = C.construct_38_19(1, pair)
    got["table5 30-15"] = C.construct_30_15_type2(1, pair)
    p6 = C.partition_even_set(C.delete_dpps([10]))
    p7 = C.partition_even_set(C.delete_dlp(F.dlp_of((5, 19, 46))))
    s36, s32 = C.table8_examples()
    got["table8 36-19"], got["table8 32-17"] = s36, s32
    wrong = [k for k, v in got.items() if v != GOLDEN[k]]
    t6 = any({a, b} == {GOLDEN["table6 bold"], GOLDEN["table6 plain"]} for a, b in p6)
    t7 = any({a, b} == {GOLDEN["table7 bold"], GOLDEN["table7 plain"]} for a, b in p7)
    x4 = s36.rays_with(4) == s32.rays_with(4) == (25, 29)
    ok = not wrong and dual == GOLDEN["table4 26-13"] and t6 and t7 and x4
    record(6, ok, f"{len(got) - len(wrong)}/{len(got)} constructions match, dual generation "
                  f"{dual == GOLDEN['table4 26-13']}, partitions {t6 and t7}, x4 rays {x4}")


def _properties(s: RayBasisSet) -> bool:
    p = profile(s)
    mult = set(s.multiplicity.values())
    return (
        s.B % 2 == 1 and mult <= {2, 4}
        and p.count_four == 2 * s.B - s.R and p.count_twice == 2 * s.R - 2 * s.B
        and is_colorable(s) is None and is_basis_critical(s)
    )


def test_criterion_7_properties(C, proofs_26_13):
    sets = list(proofs_26_13) + list(C.all_30_15_type1().values())
    for kind in ("34-17", "38-19", "30-15b"):
        sets += list({c.result.basis_ids: c.result for c in C.catalog(kind)}.values())
    bad = [s for s in sets if not _properties(s)]
    record(7, not bad, f"{len(sets) - len(bad)}/{len(sets)} proofs odd B, mult 2/4, identities, critical")


def test_criterion_8_profiles(C):
    s26 = GOLDEN["table4 26-13"]
    s60 = C.construct_60_41()
    p26, p60 = profile(s26), profile(s60)
    ok = (p26.count_twice, p26.count_four) == (26, 0) and s60.size == "60-41" \
        and is_parity_proof(s60) and (p60.count_twice, p60.count_four) == (38, 22)
    record(8, ok, f"26-13 -> {(p26.count_twice, p26.count_four)}; "
                  f"{s60.size} -> {(p60.count_twice, p60.count_four)}")


@pytest.mark.slow
def test_criterion_9_contextuality(proofs_26_13, global_bound):
    sets = list(proofs_26_13) + list(GOLDEN.values())
    reps = [nhv_max(s) for s in sets]
    per = all(r.F_max_nhv == s.B - 2 and len(r.violated) == 1 for r, s in zip(reps, sets))
    hs = global_bound.hitting_set_bound
    ok = per and hs == 9
    record(9, ok, f"nhv_max = B-2 with one violated basis for all {len(sets)}: {per}; "
                  f"hitting set {hs} (expected 9), exact bound {global_bound.nhv_max_sum}/75")


@pytest.mark.slow
def test_criterion_10_symmetry(C, proofs_26_13, proofs_30_15):
    G = groups()
    transitive = all(g.ray_orbits() == [list(range(1, 61))] for g in G.values())
    c26 = classify(proofs_26_13)
    r26 = [orbit_report(v[0]) for v in c26.values()]
    t1 = list(C.all_30_15_type1().values())
    r1 = [orbit_report(v[0]) for v in classify(t1).values()]
    stab = all(r.orbit_size * r.stabilizer_order == r.group_order for r in r26 + r1)
    varieties = len({variety_key(s) for s in proofs_30_15})
    totals = {}
    for kind in ("34-17", "38-19", "30-15b"):
        distinct = {c.result.basis_ids: c.result for c in C.catalog(kind)}
        reps = [v[0] for v in classify(distinct.values()).values()]
        totals[kind] = (grand_total(reps), len(distinct))
    lower = all(g >= n for g, n in totals.values())
    ok = (transitive and stab and sum(r.orbit_size for r in r26) == 1800
          and sum(r.orbit_size for r in r1) == 240 and varieties == 6 and lower)
    record(10, ok, f"transitive {transitive}, orbit-stabilizer {stab}, orbit sums "
                   f"{sum(r.orbit_size for r in r26)}/{sum(r.orbit_size for r in r1)}, "
                   f"30-15 varieties {varieties}, orbit totals vs constructed {totals}")


def _cli(*args: str) -> bytes:
    return subprocess.run([sys.executable, "-m", "parity600", *args],
                          capture_output=True, check=True).stdout


def test_criterion_11_determinism(C, proofs_26_13):
    threads = search((26, 13), workers=2) == proofs_26_13
    again = Constructions(C.F).catalog("26-13") == C.catalog("26-13")
    exports = [(catalog_json(proofs_26_13, "26-13"), [export_mmp(s).text for s in proofs_26_13],
                [export_dot(s) for s in proofs_26_13[:50]]) for _ in range(2)]
    cli1 = _cli("search", "-R", "26", "-B", "13", "--threads", "1", "--format", "mmp")
    cli2 = _cli("search", "-R", "26", "-B", "13", "--threads", "2", "--format", "mmp",
                "--seed-order", "descending")
    ok = threads and again and exports[0] == exports[1] and cli1 == cli2
    record(11, ok, f"threads {threads}, catalogs {again}, exports {exports[0] == exports[1]}, "
                   f"cli bytes {cli1 == cli2}")
