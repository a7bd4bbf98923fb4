from collections import Counter

import pytest

from parity600.constructions import ConstructionError, two_two_splits
from parity600.data import tables
from parity600.raybasis import RayBasisSet, is_parity_proof, profile
from parity600.search import is_basis_critical


def _t(*parts):
    return RayBasisSet.from_quads(sum(parts, ()))


def test_type1(C):
    sets = C.all_30_15_type1()
    assert len(sets) == 240 and len({s.basis_ids for s in sets.values()}) == 240
    pairs = set()
    for triad, s in sets.items():
        comp = C.type1_complement(triad)
        assert set(s.rays).isdisjoint(sets[comp].rays)
        pairs.add(frozenset([triad, comp]))
    assert len(pairs) == 120
    assert C.construct_30_15_type1([1, 2, 3]) == _t(tables.TABLE3_BOLD)
    assert C.construct_30_15_type1([4, 5, 6]) == _t(tables.TABLE3_PLAIN)


def test_type1_rejects_bad_triads(C):
    with pytest.raises(ConstructionError):
        C.construct_30_15_type1([1, 2, 7])
    with pytest.raises(ConstructionError):
        C.construct_30_15_type1([1, 2])


def test_isogonal_counts(C):
    assert len(C.isogonal_sets(2)) == 180
    assert len(C.isogonal_sets(1)) == 36
    assert {s.size for s in C.isogonal_sets(2).values()} == {"40-30"}


def test_table4(C, F):
    d = F.dlp_of((17, 25, 42))
    assert C.construct_34_17((1, 2), d) == _t(tables.TABLE4_PLAIN_BOLD, tables.TABLE4_BOLD_UNDERLINED)
    s26, sq = C.construct_26_13((1, 2), d, with_square=True)
    assert s26 == _t(tables.TABLE4_PLAIN_BOLD, tables.TABLE4_BOLD_ITALIC)
    want = [frozenset(map(int, r.split())) for r in tables.TABLE4_SQUARE]
    assert {frozenset(r) for r in sq.rows} == set(want)
    assert sq.added_rays() == frozenset({10, 36, 37, 50, 11, 33, 38, 49})


def test_table4_text_dlp_gives_another_34_17(C, F):
    s = C.construct_34_17((1, 2), F.dlp_of((5, 24, 57)))
    assert s.size == "34-17" and is_basis_critical(s)
    assert s != _t(tables.TABLE4_PLAIN_BOLD, tables.TABLE4_BOLD_UNDERLINED)


def test_26_13_generated_twice(C):
    target = _t(tables.TABLE4_PLAIN_BOLD, tables.TABLE4_BOLD_ITALIC)
    gens = {(pair, str(d)) for pair, d in C.iter_40_30_dlp() if C.construct_26_13(pair, d) == target}
    assert gens == {((1, 2), "(17 25 42)+(19 26 44)"), ((16, 34), "(3 19 56)+(4 17 54)")}


def test_table5(C, F):
    pair = (F.dlp_of((5, 19, 46)), F.dlp_of((7, 34, 53)))
    assert C.separation(*pair).value == 12
    assert C.construct_38_19(1, pair) == _t(tables.TABLE5_PLAIN_BOLD, tables.TABLE5_BOLD_UNDERLINED)
    s30, sq = C.construct_30_15_type2(1, pair, with_square=True)
    assert s30 == _t(tables.TABLE5_PLAIN_BOLD, tables.TABLE5_BOLD_ITALIC)
    want = [frozenset(map(int, r.split())) for r in tables.TABLE5_SQUARE]
    assert {frozenset(r) for r in sq.rows} == set(want)


def test_separation_rejected(C, F):
    with pytest.raises(ConstructionError):
        C.construct_38_19(1, (F.dlp_of((5, 19, 46)), F.dlp_of((5, 19, 46))))


@pytest.mark.parametrize("kind, distinct, mult", [
    ("34-17", 3600, 1), ("26-13", 1800, 2), ("38-19", 3600, 1), ("30-15b", 3600, 1),
])
def test_catalog_counts(C, kind, distinct, mult):
    cat = C.catalog(kind)
    assert len(cat) == 3600
    reps = Counter(c.result.basis_ids for c in cat)
    assert len(reps) == distinct and set(reps.values()) == {mult}
    assert all(is_parity_proof(c.result) for c in cat)


def test_26_13_catalog_equals_search(C, proofs_26_13):
    built = {c.result.basis_ids for c in C.catalog("26-13")}
    assert built == {s.basis_ids for s in proofs_26_13}


def test_type2_disjoint_from_type1(C):
    t1 = {s.basis_ids for s in C.all_30_15_type1().values()}
    assert not t1 & {c.result.basis_ids for c in C.catalog("30-15b")}


def test_50_50_dlp_structure(C):
    for dpp in range(1, 37):
        s50 = C.delete_dpps([dpp])
        assert len(C.dlps_within(s50)) == 50
        assert len(C.separation12_pairs(s50)) == 100


def test_partitions(C, F):
    pairs = C.partition_even_set(C.delete_dpps([10]))
    assert len(pairs) == 291
    want = {_t(tables.TABLE6_BOLD), _t(tables.TABLE6_PLAIN)}
    assert any({a, b} == want for a, b in pairs)
    pairs = C.partition_even_set(C.delete_dlp(F.dlp_of((5, 19, 46))))
    assert len(pairs) == 368
    want = {_t(tables.TABLE7_BOLD), _t(tables.TABLE7_PLAIN)}
    assert any({a, b} == want for a, b in pairs)
    assert all(is_parity_proof(h) and h.B == 27 for p in pairs for h in p)


def test_two_two_splits_small(C):
    # the 50-50 set splits the same way whichever side holds the lowest basis
    amb = C.delete_dpps([3])
    splits = two_two_splits(amb)
    assert all(a[0] == amb.basis_ids[0] for a, _ in splits)
    assert len(splits) == 291


def test_partition_rejects_odd(C):
    with pytest.raises(ConstructionError):
        C.partition_even_set(C.delete_dpps([1, 2, 3]))


def test_table8(C):
    s36, s32 = C.table8_examples()
    assert s36.size == "36-19" and s32.size == "32-17"
    assert s36.rays_with(4) == s32.rays_with(4) == (25, 29)
    assert (profile(s32).count_twice, profile(s32).count_four) == (30, 2)


def test_complementary_pairs(C):
    amb = C.delete_dpps([1])
    found = C.find_basis_complementary_pairs(amb, (42, 21))
    assert len(found) == 500
    assert {c.size for _, c, _, _ in found} == {"50-29"}
    assert any(a and b for _, _, a, b in found)
    for s, c, _, _ in found:
        assert c.R == amb.R - 2 * s.B + s.R


def test_60_41(C):
    s = C.construct_60_41()
    assert s.size == "60-41" and is_parity_proof(s)
    p = profile(s)
    assert (p.count_twice, p.count_four) == (38, 22)


def test_spreads(C):
    sp = C.spreads()
    assert len(sp) == 280
    assert all(sorted(r for b in cover for r in C.P.bases[b].rays) == list(range(1, 61)) for cover in sp)
