import pytest

from parity600.data import tables
from parity600.raybasis import RayBasisSet, is_parity_proof, profile
from parity600.search import SearchTarget, critical_only, is_basis_critical, is_colorable, search

from oracles import brute_colorable, ray_driven_proofs


def test_target_validation():
    with pytest.raises(ValueError):
        SearchTarget(31, 15)  # R > 2B
    with pytest.raises(ValueError):
        SearchTarget(12, 13)  # R < B forces a negative count of twice-used rays


def test_26_13_count_and_oracle(P, proofs_26_13):
    assert len(proofs_26_13) == 1800
    assert [s.basis_ids for s in proofs_26_13] == ray_driven_proofs(P, 26, 13)


def test_26_13_all_critical(proofs_26_13):
    assert all(is_parity_proof(s) and s.size == "26-13" for s in proofs_26_13)
    assert critical_only(proofs_26_13) == proofs_26_13


def test_no_smaller_proof():
    assert search((25, 13)) == []


@pytest.mark.slow
def test_30_15_against_oracle(P, proofs_30_15):
    assert len(proofs_30_15) == 11040
    assert [s.basis_ids for s in proofs_30_15] == ray_driven_proofs(P, 30, 15)
    bold = RayBasisSet.from_quads(tables.TABLE3_BOLD)
    plain = RayBasisSet.from_quads(tables.TABLE3_PLAIN)
    assert bold in proofs_30_15 and plain in proofs_30_15


@pytest.mark.parametrize("R", [32, 33, 34])
def test_b17_nonempty(R):
    (s,) = search((R, 17), limit=1)
    assert s.size == f"{R}-17" and is_parity_proof(s)


def test_universe_restriction(C):
    amb = C.delete_dpps([1, 2, 3])
    (only,) = search((30, 15), universe=amb.basis_ids)
    assert only == amb


def test_workers_do_not_change_output(proofs_26_13):
    assert search((26, 13), workers=2) == proofs_26_13


def test_root_order_does_not_change_output(proofs_26_13):
    assert search((26, 13), roots=range(75, 0, -1)) == proofs_26_13


def test_colorability_oracle(proofs_26_13):
    for s in proofs_26_13[::90]:
        assert is_colorable(s) is None and not brute_colorable(s.quads())
        for b in s.basis_ids:
            t = s.without(b)
            col = is_colorable(t)
            assert col is not None and brute_colorable(t.quads())
            for q in t.quads():
                assert sum(col[r] for r in q) == 1


def test_full_orthogonality_flag(proofs_26_13):
    s = proofs_26_13[0]
    assert is_basis_critical(s, full_orthogonality=True) in (True, False)
    assert is_colorable(s, full_orthogonality=True) is None


def test_profile_identities(proofs_26_13):
    for s in proofs_26_13:
        p = profile(s)
        assert p.count_four == 2 * s.B - s.R and p.count_twice == 2 * s.R - 2 * s.B
