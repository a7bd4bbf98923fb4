"""Facets of the ray system: lines, dual line pairs, pentagons, dual pentagon
pairs and Reye configurations, their tilings of the 60 rays, and DPP mating."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Literal

from .data import tables
from .golden import GoldenNumber, mul
from .polytope import NUM_RAYS, GeometryError, Polytope, basis_position, default_polytope

TWO = GoldenNumber(2, 0)
TWO_TAU = GoldenNumber(0, 2)
TWO_KAPPA = GoldenNumber(-2, 2)


@dataclass(frozen=True, order=True)
class Line:
    rays: tuple[int, int, int]

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.rays)) + ")"


@dataclass(frozen=True, order=True)
class DualLinePair:
    line_a: Line
    line_b: Line

    @property
    def rays(self) -> tuple[int, ...]:
        return tuple(sorted(self.line_a.rays + self.line_b.rays))

    def __str__(self) -> str:
        return f"{self.line_a}+{self.line_b}"


@dataclass(frozen=True, order=True)
class Pentagon:
    rays: tuple[int, int, int, int, int]

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.rays)) + ")"


@dataclass(frozen=True)
class DualPentagonPair:
    pent_a: Pentagon
    pent_b: Pentagon
    label: int

    @property
    def rays(self) -> tuple[int, ...]:
        return tuple(sorted(self.pent_a.rays + self.pent_b.rays))

    def __str__(self) -> str:
        return f"DPP{self.label} {self.pent_a}+{self.pent_b}"


@dataclass(frozen=True)
class ReyeConfig:
    bases: tuple[int, int, int]
    rays: tuple[int, ...]
    lines: tuple[Line, ...]


def _det3(m) -> GoldenNumber:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (mul(a, mul(e, i) - mul(f, h)) - mul(b, mul(d, i) - mul(f, g))
            + mul(c, mul(d, h) - mul(e, g)))


def rank_below_3(P: Polytope, r1: int, r2: int, r3: int) -> bool:
    """True when the three ray vectors are linearly dependent (all 3x3 minors vanish)."""
    vs = [P.vector(r) for r in (r1, r2, r3)]
    return all(not _det3([[v[c] for c in cols] for v in vs]) for cols in combinations(range(4), 3))


class Facets:
    """All facet enumerations for one polytope; computed lazily, then cached."""

    def __init__(self, polytope: Polytope | None = None) -> None:
        self.P = polytope or default_polytope()
        self._lines: list[Line] | None = None
        self._dlps: list[DualLinePair] | None = None
        self._dpps: list[DualPentagonPair] | None = None
        self._rcs: list[ReyeConfig] | None = None

    # lines ------------------------------------------------------------------

    def _plane(self, r1: int, r2: int) -> frozenset[int]:
        return frozenset([r1, r2] + [u for u in self.P.rays if u not in (r1, r2) and rank_below_3(self.P, r1, r2, u)])

    def is_line(self, r1: int, r2: int, r3: int) -> bool:
        """Rank-2 triple whose plane holds no fourth ray (pentagon triples excluded)."""
        if len({r1, r2, r3}) != 3:
            raise ValueError("line rays must be distinct")
        return rank_below_3(self.P, r1, r2, r3) and len(self._plane(r1, r2)) == 3

    def lines(self) -> list[Line]:
        if self._lines is None:
            planes = set()
            for r1, r2 in combinations(self.P.rays, 2):
                planes.add(self._plane(r1, r2))
            self._lines = sorted(Line(tuple(sorted(p))) for p in planes if len(p) == 3)
            if len(self._lines) != 200:
                raise GeometryError(f"found {len(self._lines)} lines, expected 200")
        return self._lines

    def dual_line(self, line: Line | Iterable[int]) -> Line:
        rays = line.rays if isinstance(line, Line) else tuple(sorted(line))
        common = set(self.P.rays)
        for r in rays:
            common &= self.P.neighbors[r]
        dual = Line(tuple(sorted(common)))
        if len(common) != 3 or dual not in set(self.lines()):
            raise GeometryError(f"{rays} does not have exactly one dual line (got {sorted(common)})")
        return dual

    def enumerate_dlps(self) -> list[DualLinePair]:
        if self._dlps is None:
            pairs = set()
            for l in self.lines():
                d = self.dual_line(l)
                pairs.add((min(l, d), max(l, d)))
            self._dlps = sorted(DualLinePair(a, b) for a, b in pairs)
            if len(self._dlps) != 100:
                raise GeometryError(f"found {len(self._dlps)} DLPs, expected 100")
            table = {frozenset([a.rays, b.rays]) for a, b in table9_dlps()}
            derived = {frozenset([d.line_a.rays, d.line_b.rays]) for d in self._dlps}
            if table != derived:
                raise GeometryError(f"Table 9 mismatch: {len(table ^ derived)} DLPs differ")
        return self._dlps

    def dlp_of(self, line: Iterable[int]) -> DualLinePair:
        l = Line(tuple(sorted(line)))
        d = self.dual_line(l)
        return DualLinePair(min(l, d), max(l, d))

    # pentagons --------------------------------------------------------------

    def is_pentagon(self, rays: Iterable[int]) -> bool:
        rs = tuple(rays)
        if len(set(rs)) != 5:
            return False
        vals = [abs(self.P.ip(a, b)) for a, b in combinations(rs, 2)]
        return vals.count(TWO_TAU) == 5 and vals.count(TWO_KAPPA) == 5

    def pentagons(self) -> list[Pentagon]:
        P = self.P
        near = {r: {s for s in P.rays if s != r and abs(P.ip(r, s)) in (TWO_TAU, TWO_KAPPA)} for r in P.rays}
        out = []

        def grow(clique: list[int], cand: set[int]) -> None:
            if len(clique) == 5:
                if self.is_pentagon(clique):
                    out.append(Pentagon(tuple(clique)))
                return
            for c in sorted(cand):
                if c > clique[-1]:
                    grow(clique + [c], cand & near[c])

        for r in P.rays:
            grow([r], near[r])
        return out

    def enumerate_dpps(self) -> list[DualPentagonPair]:
        if self._dpps is None:
            pents = self.pentagons()
            pset = {p.rays: p for p in pents}
            pairs = {}
            for p in pents:
                common = set(self.P.rays)
                for r in p.rays:
                    common &= self.P.neighbors[r]
                dual = tuple(sorted(common))
                if dual not in pset:
                    raise GeometryError(f"pentagon {p} has no dual pentagon")
                pairs[frozenset([p.rays, dual])] = (p, pset[dual])
            labels = {frozenset([tuple(sorted(a)), tuple(sorted(b))]): i + 1
                      for i, (a, b) in enumerate(table10_dpps())}
            if set(labels) != set(pairs) or len(pairs) != 36:
                raise GeometryError(f"Table 10 mismatch ({len(pairs)} DPPs derived)")
            out = []
            for key, lab in labels.items():
                a, b = table10_dpps()[lab - 1]
                out.append(DualPentagonPair(Pentagon(tuple(sorted(a))), Pentagon(tuple(sorted(b))), lab))
            self._dpps = sorted(out, key=lambda d: d.label)
        return self._dpps

    def enumerate_pentagons_and_dpps(self) -> list[DualPentagonPair]:
        return self.enumerate_dpps()

    def dpp(self, label: int) -> DualPentagonPair:
        return self.enumerate_dpps()[label - 1]

    # Reye configurations ----------------------------------------------------

    def unbiased(self, b1: int, b2: int) -> bool:
        P = self.P
        return all(abs(P.ip(r, s)) == TWO for r in P.bases[b1].rays for s in P.bases[b2].rays)

    def enumerate_rcs(self) -> list[ReyeConfig]:
        if self._rcs is None:
            P = self.P
            ids = list(P.bases)
            triads = [t for t in combinations(ids, 3)
                      if self.unbiased(t[0], t[1]) and self.unbiased(t[0], t[2]) and self.unbiased(t[1], t[2])]
            blocks = {}
            for b in ids:
                r, c, _ = basis_position(b)
                blocks.setdefault((r, c), []).append(b)
            if sorted(triads) != sorted(tuple(v) for v in blocks.values()):
                raise GeometryError("mutually unbiased triads differ from the basis-table blocks")
            all_lines = self.lines()
            out = []
            for t in sorted(triads):
                rays = tuple(sorted(r for b in t for r in P.bases[b].rays))
                rs = set(rays)
                ls = tuple(l for l in all_lines if rs.issuperset(l.rays))
                if len(ls) != 16:
                    raise GeometryError(f"RC {t} has {len(ls)} lines")
                for l in ls:
                    if sorted(sum(r in P.bases[b].rays for r in l.rays) for b in t) != [1, 1, 1]:
                        raise GeometryError(f"line {l} of RC {t} does not meet each basis once")
                out.append(ReyeConfig(t, rays, ls))
            if len(out) != 25:
                raise GeometryError(f"found {len(out)} RCs, expected 25")
            self._rcs = out
        return self._rcs

    # tilings ----------------------------------------------------------------

    def separation(self, d1: DualLinePair, d2: DualLinePair) -> int:
        """Number of orthogonal ray pairs between two DLPs (over all 36 cross pairs)."""
        return sum(self.P.orthogonal(a, b) for a in d1.rays for b in d2.rays)

    def exact_covers(self, kind: Literal["RC", "DLP", "DPP"]) -> list[tuple[int, ...]]:
        """Every partition of the 60 rays into disjoint facets of one kind.

        Each tiling is a sorted tuple of facet keys (RC: position in
        :meth:`enumerate_rcs`; DLP: position in :meth:`enumerate_dlps`;
        DPP: label).
        """
        if kind == "RC":
            facets = {i: rc.rays for i, rc in enumerate(self.enumerate_rcs())}
        elif kind == "DLP":
            facets = {i: d.rays for i, d in enumerate(self.enumerate_dlps())}
        elif kind == "DPP":
            facets = {d.label: d.rays for d in self.enumerate_dpps()}
        else:
            raise ValueError(f"unknown facet kind {kind!r}")
        return exact_covers(facets, range(1, NUM_RAYS + 1))

    def tilings(self, kind: Literal["RC", "DLP", "DPP"]) -> list[tuple[int, ...]]:
        """The tilings of the 600-cell by one facet kind.

        For RCs and DPPs these are all exact covers.  DLPs admit 520 exact
        covers; the tilings meant here are the 20 in which every two DLPs have
        separation 6 or 12 (never 8), which are exactly the rows and columns
        of the DLP table.
        """
        found = self.exact_covers(kind)
        if kind == "DLP":
            dl = self.enumerate_dlps()
            found = [t for t in found
                     if all(self.separation(dl[i], dl[j]) != 8 for i, j in combinations(t, 2))]
        expected = {"RC": 10, "DLP": 20, "DPP": 12}[kind]
        if len(found) != expected:
            raise GeometryError(f"{kind}: {len(found)} tilings, expected {expected}")
        return found

    def table_tilings(self, kind: Literal["RC", "DLP", "DPP"]) -> list[tuple[int, ...]]:
        """Tilings read off the rows and columns of the printed tables, same keys as :meth:`tilings`."""
        if kind == "RC":
            rcs = self.enumerate_rcs()
            key = {rc.bases: i for i, rc in enumerate(rcs)}
            def block(r, c):
                return key[tuple(15 * r + 3 * c + l + 1 for l in range(3))]
            rows = [tuple(sorted(block(r, c) for c in range(5))) for r in range(5)]
            cols = [tuple(sorted(block(r, c) for r in range(5))) for c in range(5)]
            return sorted(rows + cols)
        if kind == "DLP":
            dl = self.enumerate_dlps()
            key = {frozenset([d.line_a, d.line_b]): i for i, d in enumerate(dl)}
            grid = [[key[frozenset(pair)] for pair in row] for row in table9_grid()]
            rows = [tuple(sorted(r)) for r in grid]
            cols = [tuple(sorted(grid[i][j] for i in range(10))) for j in range(10)]
            return sorted(rows + cols)
        if kind == "DPP":
            return sorted(tuple(sorted(l)) for l in dpp_lines())
        raise ValueError(f"unknown facet kind {kind!r}")

    # mating -----------------------------------------------------------------

    def mate_dpps(self, d1: int, d2: int) -> list[int]:
        """The 5 bases with two rays from each of two DPPs sharing a Table-10 row or column."""
        if d1 == d2:
            raise ValueError("cannot mate a DPP with itself")
        (r1, c1), (r2, c2) = divmod(d1 - 1, 6), divmod(d2 - 1, 6)
        if r1 != r2 and c1 != c2:
            raise ValueError(f"DPP{d1} and DPP{d2} share no row or column of the DPP table")
        a, b = set(self.dpp(d1).rays), set(self.dpp(d2).rays)
        out = [bid for bid, basis in self.P.bases.items()
               if len(a.intersection(basis.rays)) == 2 and len(b.intersection(basis.rays)) == 2]
        if len(out) != 5:
            raise GeometryError(f"mating DPP{d1} with DPP{d2} gave {len(out)} bases")
        return out

    def reconstruct_bases(self, labels: Iterable[int]) -> list[int]:
        """All bases produced by the 15 matings of a row or column of DPPs."""
        labels = list(labels)
        out: list[int] = []
        for d1, d2 in combinations(labels, 2):
            out.extend(self.mate_dpps(d1, d2))
        return out


def dpp_lines() -> list[tuple[int, ...]]:
    """The 12 rows and columns of the DPP table, as label tuples."""
    rows = [tuple(6 * r + c + 1 for c in range(6)) for r in range(6)]
    cols = [tuple(6 * r + c + 1 for r in range(6)) for c in range(6)]
    return rows + cols


def exact_covers(facets: dict[int, tuple[int, ...]], universe: Iterable[int]) -> list[tuple[int, ...]]:
    """All ways to partition ``universe`` into members of ``facets`` (small exact cover)."""
    universe = set(universe)
    holders = {u: [k for k, rs in facets.items() if u in rs] for u in universe}
    found: list[tuple[int, ...]] = []

    def rec(uncovered: set[int], chosen: list[int], blocked: set[int]) -> None:
        if not uncovered:
            found.append(tuple(sorted(chosen)))
            return
        best = min(uncovered, key=lambda u: (sum(k not in blocked for k in holders[u]), u))
        for k in holders[best]:
            if k in blocked:
                continue
            rs = set(facets[k])
            if not rs <= uncovered:
                continue
            clash = {j for j, other in facets.items() if rs.intersection(other)}
            rec(uncovered - rs, chosen + [k], blocked | clash)

    rec(universe, [], set())
    return sorted(found)


@cache
def table9_dlps() -> list[tuple[Line, Line]]:
    out = []
    for rows in tables.DLP_TABLE:
        cols = [[int(x) for x in r.split()] for r in rows]
        for j in range(10):
            a = Line(tuple(sorted(c[2 * j] for c in cols)))
            b = Line(tuple(sorted(c[2 * j + 1] for c in cols)))
            out.append((a, b))
    return out


def table9_grid() -> list[list[tuple[Line, Line]]]:
    flat = table9_dlps()
    return [flat[10 * i : 10 * i + 10] for i in range(10)]


@cache
def table10_dpps() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """DPP label order (row-major): (left pentagon, right pentagon), printed order."""
    out = []
    for rows in tables.DPP_TABLE:
        cols = [[int(x) for x in r.split()] for r in rows]
        for j in range(6):
            out.append((tuple(c[2 * j] for c in cols), tuple(c[2 * j + 1] for c in cols)))
    return out


@cache
def default_facets() -> Facets:
    return Facets()
