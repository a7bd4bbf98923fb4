import pytest
from hypothesis import given, settings, strategies as st

from parity600.data import tables
from parity600.raybasis import RayBasisSet, basis_complement, delete_rays, is_parity_proof, profile

ids = st.sets(st.integers(1, 75), min_size=1, max_size=40)


@given(ids)
@settings(max_examples=200)
def test_multiplicity_sums(s):
    x = RayBasisSet.of(s)
    assert sum(x.multiplicity.values()) == 4 * x.B
    assert x.R == len(x.rays)


@given(ids)
@settings(max_examples=100)
def test_json_roundtrip(s):
    x = RayBasisSet.of(s)
    assert RayBasisSet.from_json(x.to_json()) == x


@given(ids, ids)
@settings(max_examples=100)
def test_union_difference(a, b):
    x, y = RayBasisSet.of(a), RayBasisSet.of(b)
    assert set((x | y).basis_ids) == a | b
    assert set((x - y).basis_ids) == a - b


def test_rejects_duplicates_and_unknown():
    with pytest.raises(ValueError):
        RayBasisSet.of([1, 1, 2])
    with pytest.raises((ValueError, KeyError)):
        RayBasisSet.of([0])


def test_table3_sets_are_proofs():
    bold = RayBasisSet.from_quads(tables.TABLE3_BOLD)
    plain = RayBasisSet.from_quads(tables.TABLE3_PLAIN)
    assert bold.size == plain.size == "30-15"
    assert is_parity_proof(bold) and is_parity_proof(plain)
    assert set(bold.rays).isdisjoint(plain.rays)


def test_profiles(proofs_26_13):
    assert (profile(proofs_26_13[0]).count_twice, profile(proofs_26_13[0]).count_four) == (26, 0)
    s36 = RayBasisSet.from_quads(tables.TABLE8_PLAIN + tables.TABLE8_BOLD)
    p = profile(s36)
    assert (p.count_twice, p.count_four) == (34, 2)
    assert s36.rays_with(4) == (25, 29)


def test_profile_rejects_odd():
    with pytest.raises(ValueError):
        profile(RayBasisSet.of([1]))


def test_full_set():
    full = RayBasisSet.full()
    assert full.size == "60-75"
    assert set(full.multiplicity.values()) == {5}
    assert not is_parity_proof(full)


def test_delete_rays():
    full = RayBasisSet.full()
    s = delete_rays(full, [1])
    assert s.B == 70 and 1 not in s.rays


def test_complement(C):
    amb = C.delete_dpps([10])
    half = RayBasisSet.from_quads(tables.TABLE6_BOLD)
    comp = basis_complement(amb, half)
    assert comp == RayBasisSet.from_quads(tables.TABLE6_PLAIN)
    assert basis_complement(amb, comp) == half
    with pytest.raises(ValueError):
        basis_complement(RayBasisSet.full(), half)
