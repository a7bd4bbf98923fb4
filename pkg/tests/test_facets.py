import pytest

from parity600.facets import DualLinePair, Line, dpp_lines, table9_grid


def test_lines(F):
    lines = F.lines()
    assert len(lines) == 200
    assert F.is_line(1, 5, 9)
    assert F.dual_line((1, 5, 9)) == Line((14, 20, 23))
    assert F.dual_line((3, 8, 10)) == Line((16, 17, 24))


def test_pentagon_triples_are_not_lines(F):
    pent = F.dpp(1).pent_a.rays
    assert not F.is_line(*pent[:3])


def test_census(F):
    assert len(F.enumerate_dlps()) == 100
    assert len(F.enumerate_dpps()) == 36
    assert len(F.enumerate_rcs()) == 25
    assert all(len(d.rays) == 6 for d in F.enumerate_dlps())
    assert all(len(d.rays) == 10 for d in F.enumerate_dpps())
    assert all(len(set(rc.rays)) == 12 for rc in F.enumerate_rcs())


def test_dpp_labels(F):
    assert str(F.dpp(1)) == "DPP1 (1 15 30 47 56)+(4 14 29 45 55)"


@pytest.mark.parametrize("kind, n", [("RC", 10), ("DLP", 20), ("DPP", 12)])
def test_tilings(F, kind, n):
    til = F.tilings(kind)
    assert len(til) == n
    if kind != "RC":
        assert sorted(til) == sorted(F.table_tilings(kind))


def test_dlp_exact_covers_exceed_table(F):
    # only the 20 covers avoiding separation-8 pairs are table rows/columns
    assert len(F.exact_covers("DLP")) == 520


def test_table9_rows_and_columns_tile(F):
    for row in table9_grid():
        rays = sorted(r for a, b in row for r in a.rays + b.rays)
        assert rays == list(range(1, 61))


def test_mating(F):
    assert F.mate_dpps(1, 2) == [1, 16, 32, 48, 62]
    for line in dpp_lines():
        assert sorted(F.reconstruct_bases(line)) == list(range(1, 76))
    with pytest.raises(ValueError):
        F.mate_dpps(1, 8)


def test_separation_values(F):
    dlps = F.enumerate_dlps()
    seps = {F.separation(a, b) for a in dlps[:10] for b in dlps if set(a.rays).isdisjoint(b.rays)}
    assert seps <= {0, 2, 4, 6, 8, 10, 12} and 12 in seps
    assert isinstance(dlps[0], DualLinePair)
