"""Recipes that build basis-critical parity proofs from facets, without search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator

from .data import tables
from .facets import DualLinePair, Facets, default_facets, dpp_lines
from .polytope import GeometryError, Polytope
from .raybasis import RayBasisSet, basis_complement, delete_rays
from .search import search


class ConstructionError(ValueError):
    """Inputs outside a recipe's preconditions."""


@dataclass(frozen=True)
class Separation:
    dlp_a: DualLinePair
    dlp_b: DualLinePair
    value: int


@dataclass(frozen=True)
class AugmentationSquare:
    """Rows 0-1: the two dropped bases (column-aligned); rows 2-3: the added rays."""

    rows: tuple[tuple[int, int, int, int], ...]

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[c] for row in self.rows) for c in range(4)]

    def new_bases(self) -> list[tuple[int, ...]]:
        return self.columns() + [self.rows[2], self.rows[3]]

    def added_rays(self) -> frozenset[int]:
        return frozenset(self.rows[2] + self.rows[3])


@dataclass(frozen=True)
class Construction:
    """A constructed set together with the recipe parameters that produced it."""

    kind: str
    params: tuple
    result: RayBasisSet


class Constructions:
    def __init__(self, facets: Facets | None = None) -> None:
        self.F = facets or default_facets()
        self.P: Polytope = self.F.P

    @property
    def full(self) -> RayBasisSet:
        return RayBasisSet.full(self.P)

    def _dpp_rays(self, labels: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for d in labels:
            out.update(self.F.dpp(d).rays)
        return out

    def _check_line(self, labels: tuple[int, ...]) -> None:
        if len(set(labels)) != len(labels):
            raise ConstructionError(f"repeated DPP labels {labels}")
        if not any(set(labels) <= set(l) for l in dpp_lines()):
            raise ConstructionError(f"DPPs {labels} do not share a row or column of the DPP table")

    # isogonal subsets ---------------------------------------------------------

    def delete_dpps(self, labels: Iterable[int]) -> RayBasisSet:
        labels = tuple(labels)
        if len(labels) > 1:
            self._check_line(labels)
        return delete_rays(self.full, self._dpp_rays(labels))

    def isogonal_sets(self, k: int) -> dict[frozenset[int], RayBasisSet]:
        """Sets left by deleting ``k`` DPPs of one row/column, keyed by the deleted labels."""
        out: dict[frozenset[int], RayBasisSet] = {}
        for line in dpp_lines():
            for triad in combinations(line, k):
                out.setdefault(frozenset(triad), self.delete_dpps(triad))
        return out

    # 30-15 type 1 -------------------------------------------------------------

    def construct_30_15_type1(self, triad: Iterable[int]) -> RayBasisSet:
        triad = tuple(triad)
        if len(triad) != 3:
            raise ConstructionError("a Type-1 30-15 set needs exactly three DPPs")
        return self.delete_dpps(triad)

    def all_30_15_type1(self) -> dict[frozenset[int], RayBasisSet]:
        return self.isogonal_sets(3)

    def type1_complement(self, triad: Iterable[int]) -> frozenset[int]:
        triad = frozenset(triad)
        for line in dpp_lines():
            if triad <= set(line):
                return frozenset(line) - triad
        raise ConstructionError(f"DPPs {sorted(triad)} do not share a row or column")

    # helpers for the DLP-based recipes ----------------------------------------

    def dlps_within(self, s: RayBasisSet) -> list[DualLinePair]:
        present = set(s.rays)
        return [d for d in self.F.enumerate_dlps() if present.issuperset(d.rays)]

    def _thrice_split(self, s: RayBasisSet) -> tuple[RayBasisSet, list[int]]:
        """Drop the bases made up solely of thrice-occurring rays; they must be exactly two."""
        thrice = set(s.rays_with(3))
        if len(thrice) != 8:
            raise GeometryError(f"{s.size} set has {len(thrice)} rays occurring thrice, expected 8")
        own = [b for b in s.basis_ids if thrice.issuperset(self.P.bases[b].rays)]
        if len(own) != 2 or set(self.P.bases[own[0]].rays) | set(self.P.bases[own[1]].rays) != thrice:
            raise GeometryError(f"thrice-occurring rays of {s.size} set do not form two bases")
        return s - RayBasisSet.of(own, self.P), own

    def augmentation_square(self, b1: int, b2: int) -> AugmentationSquare:
        """Align two disjoint bases column-wise and complete every column to a basis.

        The columns are found by pairing each ray of ``b1`` with its orthogonal
        partner in ``b2``; the two remaining rays of each column's basis are
        then split between rows 3 and 4 so that both rows are bases.  Every
        step must have a unique outcome.
        """
        P = self.P
        top = P.bases[b1].rays
        bottom = []
        for x in top:
            partners = [y for y in P.bases[b2].rays if P.orthogonal(x, y)]
            if len(partners) != 1:
                raise GeometryError(f"ray {x} has {len(partners)} orthogonal partners in basis {b2}")
            bottom.append(partners[0])
        if len(set(bottom)) != 4:
            raise GeometryError("column pairing is not a bijection")
        extras = []
        for x, y in zip(top, bottom):
            (col,) = P.bases_containing(x, y)
            extras.append(tuple(r for r in P.bases[col].rays if r not in (x, y)))
        completions = []
        for flips in range(16):
            r3 = tuple(e[(flips >> c) & 1] for c, e in enumerate(extras))
            r4 = tuple(e[1 - ((flips >> c) & 1)] for c, e in enumerate(extras))
            if frozenset(r3) in P.basis_of_quad and frozenset(r4) in P.basis_of_quad:
                completions.append((r3, r4))
        # swapping rows 3 and 4 gives the same square
        keyed = {frozenset([frozenset(a), frozenset(b)]) for a, b in completions}
        if len(keyed) != 1:
            raise GeometryError(f"augmentation square of bases {b1},{b2} has {len(keyed)} completions")
        r3, r4 = min(completions)
        added = set(r3 + r4)
        if len(added) != 8 or added & (set(top) | set(bottom)):
            raise GeometryError("added rays are not eight new rays")
        return AugmentationSquare((tuple(top), tuple(bottom), r3, r4))

    def _truncate(self, s: RayBasisSet, dropped: list[int]) -> tuple[RayBasisSet, AugmentationSquare]:
        sq = self.augmentation_square(*dropped)
        new = [self.P.basis_for(q) for q in sq.new_bases()]
        missing = [b for b in new if b not in s]
        if missing:
            raise GeometryError(f"augmentation bases {missing} are not in the {s.size} set")
        return s - RayBasisSet.of(new, self.P), sq

    # 34-17 and 26-13 ----------------------------------------------------------

    def _34_19(self, dpp_pair: Iterable[int], dlp: DualLinePair) -> RayBasisSet:
        pair = tuple(dpp_pair)
        if len(pair) != 2:
            raise ConstructionError("a 40-30 set needs exactly two DPPs")
        s40 = self.delete_dpps(pair)
        if not set(s40.rays).issuperset(dlp.rays):
            raise ConstructionError(f"DLP {dlp} is not contained in the 40-30 set")
        return delete_rays(s40, dlp.rays)

    def construct_34_17(self, dpp_pair: Iterable[int], dlp: DualLinePair) -> RayBasisSet:
        s34, _ = self._thrice_split(self._34_19(dpp_pair, dlp))
        return s34

    def construct_26_13(self, dpp_pair: Iterable[int], dlp: DualLinePair,
                        with_square: bool = False):
        s = self._34_19(dpp_pair, dlp)
        _, dropped = self._thrice_split(s)
        out, sq = self._truncate(s, dropped)
        return (out, sq) if with_square else out

    # 38-19 and 30-15 type 2 ---------------------------------------------------

    def separation(self, a: DualLinePair, b: DualLinePair) -> Separation:
        return Separation(a, b, self.F.separation(a, b))

    def separation12_pairs(self, s50: RayBasisSet) -> list[tuple[DualLinePair, DualLinePair]]:
        inside = self.dlps_within(s50)
        return [(a, b) for a, b in combinations(inside, 2) if self.F.separation(a, b) == 12]

    def _38_21(self, dpp: int, dlp_pair: tuple[DualLinePair, DualLinePair]) -> RayBasisSet:
        s50 = self.delete_dpps([dpp])
        a, b = dlp_pair
        present = set(s50.rays)
        if not present.issuperset(a.rays) or not present.issuperset(b.rays):
            raise ConstructionError("DLP pair is not inside the 50-50 set")
        sep = self.F.separation(a, b)
        if sep != 12:
            raise ConstructionError(f"DLP separation is {sep}, expected 12")
        return delete_rays(s50, set(a.rays) | set(b.rays))

    def construct_38_19(self, dpp: int, dlp_pair: tuple[DualLinePair, DualLinePair]) -> RayBasisSet:
        s38, _ = self._thrice_split(self._38_21(dpp, dlp_pair))
        return s38

    def construct_30_15_type2(self, dpp: int, dlp_pair: tuple[DualLinePair, DualLinePair],
                              with_square: bool = False):
        s = self._38_21(dpp, dlp_pair)
        _, dropped = self._thrice_split(s)
        out, sq = self._truncate(s, dropped)
        return (out, sq) if with_square else out

    # catalogs -----------------------------------------------------------------

    def iter_40_30_dlp(self) -> Iterator[tuple[tuple[int, int], DualLinePair]]:
        for key in sorted(self.isogonal_sets(2), key=sorted):
            pair = tuple(sorted(key))
            for d in self.dlps_within(self.delete_dpps(pair)):
                yield pair, d

    def iter_50_50_dlp_pairs(self) -> Iterator[tuple[int, tuple[DualLinePair, DualLinePair]]]:
        for dpp in range(1, 37):
            for pair in self.separation12_pairs(self.delete_dpps([dpp])):
                yield dpp, pair

    def catalog(self, kind: str) -> list[Construction]:
        """Every output of one recipe over all admissible inputs, in input order."""
        out = []
        if kind == "30-15a":
            for key, s in sorted(self.all_30_15_type1().items(), key=lambda kv: sorted(kv[0])):
                out.append(Construction(kind, tuple(sorted(key)), s))
        elif kind in ("34-17", "26-13"):
            f = self.construct_34_17 if kind == "34-17" else self.construct_26_13
            for pair, d in self.iter_40_30_dlp():
                out.append(Construction(kind, (pair, d), f(pair, d)))
        elif kind in ("38-19", "30-15b"):
            f = self.construct_38_19 if kind == "38-19" else self.construct_30_15_type2
            for dpp, pair in self.iter_50_50_dlp_pairs():
                out.append(Construction(kind, (dpp, pair), f(dpp, pair)))
        else:
            raise ConstructionError(f"unknown construction kind {kind!r}")
        return out

    # even sets and their partitions -------------------------------------------

    def delete_dlp(self, dlp: DualLinePair) -> RayBasisSet:
        return delete_rays(self.full, dlp.rays)

    def partition_even_set(self, ambient: RayBasisSet) -> list[tuple[RayBasisSet, RayBasisSet]]:
        """All splits of ``ambient`` into two halves, each using every ray exactly twice.

        Each unordered split is listed once, with the half holding the smallest
        basis id first.
        """
        mult = ambient.multiplicity
        if ambient.B % 2 or any(m != 4 for m in mult.values()):
            raise ConstructionError("ambient set must have even B and every ray at multiplicity 4")
        return [(RayBasisSet.of(a, self.P), RayBasisSet.of(b, self.P))
                for a, b in two_two_splits(ambient)]

    def find_basis_complementary_pairs(self, ambient: RayBasisSet, target: tuple[int, int],
                                       limit: int | None = None
                                       ) -> list[tuple[RayBasisSet, RayBasisSet, bool, bool]]:
        """Parity proofs of size ``target`` inside ``ambient`` with their basis complements.

        Each entry is (proof, complement, proof is critical, complement is critical).
        """
        from .search import is_basis_critical

        out = []
        for s in search(target, universe=ambient.basis_ids, limit=limit, polytope=self.P):
            comp = basis_complement(ambient, s)
            out.append((s, comp, is_basis_critical(s), is_basis_critical(comp)))
        return out

    # large proofs from spreads ------------------------------------------------

    def spreads(self) -> list[tuple[int, ...]]:
        """Sets of 15 bases covering each of the 60 rays exactly once."""
        from .facets import exact_covers

        return exact_covers({b: self.P.bases[b].rays for b in self.P.bases}, self.P.rays)

    def construct_60_41(self) -> RayBasisSet:
        """All 75 bases minus a spread and a disjoint 38-19 proof.

        The spread removes one occurrence of every ray and the 38-19 set two
        more of its own rays, leaving 38 rays twice and 22 four times.
        """
        spreads = self.spreads()
        for c in self.catalog("38-19"):
            k = set(c.result.basis_ids)
            for sp in spreads:
                if k.isdisjoint(sp):
                    return self.full - RayBasisSet.of(sorted(k | set(sp)), self.P)
        raise GeometryError("no 38-19 set is disjoint from a spread")

    # published worked examples ------------------------------------------------

    def table8_examples(self) -> tuple[RayBasisSet, RayBasisSet]:
        s36 = RayBasisSet.from_quads(tables.TABLE8_PLAIN + tables.TABLE8_BOLD, self.P)
        s32 = RayBasisSet.from_quads(tables.TABLE8_PLAIN + tables.TABLE8_BOLD_ITALIC, self.P)
        return s36, s32


def two_two_splits(ambient: RayBasisSet) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Backtracking over bases with per-ray 2+2 balance and unit propagation."""
    P = ambient.polytope
    ids = list(ambient.basis_ids)
    rays_of = {b: P.bases[b].rays for b in ids}
    holders: dict[int, list[int]] = {}
    for b in ids:
        for r in rays_of[b]:
            holders.setdefault(r, []).append(b)
    side: dict[int, int] = {}
    count = {r: [0, 0] for r in holders}
    out = []

    def assign(b: int, s: int, trail: list[int]) -> bool:
        stack = [(b, s)]
        while stack:
            b, s = stack.pop()
            if b in side:
                if side[b] != s:
                    return False
                continue
            side[b] = s
            trail.append(b)
            for r in rays_of[b]:
                count[r][s] += 1
            for r in rays_of[b]:
                c = count[r]
                if c[s] > 2:
                    return False
                if c[s] == 2:
                    for o in holders[r]:
                        if o not in side:
                            stack.append((o, 1 - s))
        return True

    def undo(trail: list[int]) -> None:
        for b in reversed(trail):
            s = side.pop(b)
            for r in rays_of[b]:
                count[r][s] -= 1

    def rec() -> None:
        free = [b for b in ids if b not in side]
        if not free:
            a = tuple(b for b in ids if side[b] == 0)
            out.append((a, tuple(b for b in ids if side[b] == 1)))
            return
        b = free[0]
        for s in (0, 1):
            trail: list[int] = []
            if assign(b, s, trail):
                rec()
            undo(trail)

    trail: list[int] = []
    if assign(ids[0], 0, trail):
        rec()
    undo(trail)
    return sorted(out)


@cache
def default_constructions() -> Constructions:
    return Constructions()
