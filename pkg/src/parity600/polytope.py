"""The 60 rays of the 600-cell, their orthogonality graph and the 75 bases."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .data import tables
from .golden import ZERO, GoldenNumber, sign

Vector4 = tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]

NUM_RAYS = 60
NUM_BASES = 75
BLOCK_ROWS = "ABCDE"  # primed in print: A'..E'
BLOCK_COLS = "ABCDE"


class GeometryError(RuntimeError):
    """The embedded tables and the derived geometry disagree."""


@dataclass(frozen=True)
class Ray:
    id: int
    vector: Vector4


@dataclass(frozen=True)
class Basis:
    id: int
    rays: tuple[int, int, int, int]


def inner_product(u: Vector4, v: Vector4) -> GoldenNumber:
    total = ZERO
    for x, y in zip(u, v):
        total = total + x * y
    return total


def parse_vector(text: str) -> Vector4:
    parts = text.split()
    if len(parts) != 4:
        raise ValueError(f"expected 4 components in {text!r}")
    return tuple(GoldenNumber.parse(p) for p in parts)  # type: ignore[return-value]


def basis_id(block_row: int, block_col: int, line: int) -> int:
    return 15 * block_row + 3 * block_col + line + 1


def basis_position(bid: int) -> tuple[int, int, int]:
    """Inverse of :func:`basis_id`: (block_row, block_col, line), zero-based."""
    k = bid - 1
    return k // 15, (k % 15) // 3, k % 3


def table2_bases(rows: tuple[str, ...] = tables.BASIS_TABLE) -> dict[int, tuple[int, ...]]:
    """Basis id -> rays as printed in the basis table (printed order kept)."""
    out: dict[int, tuple[int, ...]] = {}
    for i, row in enumerate(rows):
        nums = [int(x) for x in row.split()]
        if len(nums) != 20:
            raise ValueError(f"basis table row {i} has {len(nums)} entries")
        for c in range(5):
            out[basis_id(i // 3, c, i % 3)] = tuple(nums[4 * c : 4 * c + 4])
    return out


class Polytope:
    """Rays, orthogonality and bases; immutable after construction."""

    def __init__(self, ray_text: dict[int, str] | None = None,
                 basis_rows: tuple[str, ...] | None = None) -> None:
        ray_text = tables.RAYS if ray_text is None else ray_text
        basis_rows = tables.BASIS_TABLE if basis_rows is None else basis_rows
        self.rays: dict[int, Ray] = {i: Ray(i, parse_vector(t)) for i, t in sorted(ray_text.items())}
        self._check_rays()
        n = NUM_RAYS
        self.gram: dict[tuple[int, int], GoldenNumber] = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                g = inner_product(self.rays[i].vector, self.rays[j].vector)
                self.gram[i, j] = self.gram[j, i] = g
        self.neighbors: dict[int, frozenset[int]] = {
            i: frozenset(j for j in range(1, n + 1) if j != i and not self.gram[i, j])
            for i in range(1, n + 1)
        }
        bad = {i: len(v) for i, v in self.neighbors.items() if len(v) != 15}
        if bad:
            raise GeometryError(f"orthogonality degree != 15 for rays {bad}")
        self.table2 = table2_bases(basis_rows)
        self.bases: dict[int, Basis] = self._derive_bases()
        self.ray_bases: dict[int, tuple[int, ...]] = {
            r: tuple(b.id for b in self.bases.values() if r in b.rays) for r in self.rays
        }
        self.basis_of_quad: dict[frozenset[int], int] = {
            frozenset(b.rays): b.id for b in self.bases.values()
        }
        # bitmask forms used by the search kernels
        self.basis_mask: dict[int, int] = {
            b.id: sum(1 << r for r in b.rays) for b in self.bases.values()
        }
        self.neighbor_mask: dict[int, int] = {
            r: sum(1 << s for s in nb) for r, nb in self.neighbors.items()
        }

    def _check_rays(self) -> None:
        if sorted(self.rays) != list(range(1, NUM_RAYS + 1)):
            raise GeometryError("Table 1 must list rays 1..60")
        four = GoldenNumber(4, 0)
        for r in self.rays.values():
            if inner_product(r.vector, r.vector) != four:
                raise GeometryError(f"Table 1 entry {r.id}: squared norm is not 4")
            lead = next(x for x in r.vector if x)
            if sign(lead) <= 0:
                raise GeometryError(f"Table 1 entry {r.id}: first nonzero component not positive")

    def _derive_bases(self) -> dict[int, Basis]:
        found: set[tuple[int, ...]] = set()
        for i in range(1, NUM_RAYS + 1):
            for j, k, l in combinations(sorted(x for x in self.neighbors[i] if x > i), 3):
                if k in self.neighbors[j] and l in self.neighbors[j] and l in self.neighbors[k]:
                    found.add((i, j, k, l))
        if len(found) != NUM_BASES:
            raise GeometryError(f"derived {len(found)} bases, expected 75")
        printed = {tuple(sorted(v)): bid for bid, v in self.table2.items()}
        missing = set(printed) - found
        extra = found - set(printed)
        if missing or extra:
            raise GeometryError(f"Table 2 mismatch: not derived {sorted(missing)}, unlisted {sorted(extra)}")
        bases = {bid: Basis(bid, quad) for quad, bid in printed.items()}
        for r in range(1, NUM_RAYS + 1):
            if sum(r in b.rays for b in bases.values()) != 5:
                raise GeometryError(f"ray {r} is not in exactly 5 bases")
        return dict(sorted(bases.items()))

    def vector(self, rid: int) -> Vector4:
        return self.rays[rid].vector

    def ip(self, r: int, s: int) -> GoldenNumber:
        return self.gram[r, s]

    def orthogonal(self, r: int, s: int) -> bool:
        return s in self.neighbors[r]

    def degree(self, r: int) -> int:
        return len(self.neighbors[r])

    def orthogonality_graph(self) -> dict[int, frozenset[int]]:
        return dict(self.neighbors)

    def bases_containing(self, *rays: int) -> list[int]:
        return [b.id for b in self.bases.values() if all(r in b.rays for r in rays)]

    def basis_for(self, quad) -> int:
        """Basis id of a collection of 4 ray ids (KeyError if not a basis)."""
        return self.basis_of_quad[frozenset(quad)]

    def basis_ids(self, quads) -> tuple[int, ...]:
        """Parse quads written as text ("1 2 3 4") or tuples into sorted basis ids."""
        out = []
        for q in quads:
            rays = [int(x) for x in q.split()] if isinstance(q, str) else list(q)
            out.append(self.basis_for(rays))
        return tuple(sorted(out))


@cache
def default_polytope() -> Polytope:
    return Polytope()


def derive_bases() -> list[Basis]:
    return list(default_polytope().bases.values())


def orthogonality_graph() -> dict[int, frozenset[int]]:
    return default_polytope().orthogonality_graph()
