"""R-B sets: bases drawn from the 75, with their derived ray multiplicities."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .polytope import Polytope, default_polytope


@dataclass(frozen=True)
class MultiplicityProfile:
    count_twice: int
    count_four: int


@dataclass(frozen=True)
class RayBasisSet:
    """A set of basis ids; rays and multiplicities are always derived."""

    basis_ids: tuple[int, ...]
    polytope: Polytope = field(default_factory=default_polytope, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        ids = tuple(sorted(set(self.basis_ids)))
        if len(ids) != len(self.basis_ids):
            raise ValueError("duplicate basis ids")
        for b in ids:
            if b not in self.polytope.bases:
                raise ValueError(f"unknown basis id {b}")
        object.__setattr__(self, "basis_ids", ids)

    @classmethod
    def of(cls, ids: Iterable[int], polytope: Polytope | None = None) -> RayBasisSet:
        return cls(tuple(ids), polytope or default_polytope())

    @classmethod
    def full(cls, polytope: Polytope | None = None) -> RayBasisSet:
        P = polytope or default_polytope()
        return cls(tuple(P.bases), P)

    @classmethod
    def from_quads(cls, quads, polytope: Polytope | None = None) -> RayBasisSet:
        P = polytope or default_polytope()
        return cls(P.basis_ids(quads), P)

    @property
    def multiplicity(self) -> dict[int, int]:
        c = Counter(r for b in self.basis_ids for r in self.polytope.bases[b].rays)
        return dict(sorted(c.items()))

    @property
    def rays(self) -> tuple[int, ...]:
        return tuple(self.multiplicity)

    @property
    def R(self) -> int:
        return len(self.multiplicity)

    @property
    def B(self) -> int:
        return len(self.basis_ids)

    @property
    def size(self) -> str:
        return f"{self.R}-{self.B}"

    def quads(self) -> list[tuple[int, ...]]:
        return [self.polytope.bases[b].rays for b in self.basis_ids]

    def rays_with(self, mult: int) -> tuple[int, ...]:
        return tuple(r for r, m in self.multiplicity.items() if m == mult)

    def __len__(self) -> int:
        return len(self.basis_ids)

    def __contains__(self, bid: object) -> bool:
        return bid in self.basis_ids

    def __iter__(self):
        return iter(self.basis_ids)

    def __or__(self, other: RayBasisSet) -> RayBasisSet:
        return RayBasisSet(tuple(set(self.basis_ids) | set(other.basis_ids)), self.polytope)

    def __sub__(self, other: RayBasisSet) -> RayBasisSet:
        drop = set(other.basis_ids)
        return RayBasisSet(tuple(b for b in self.basis_ids if b not in drop), self.polytope)

    def without(self, bid: int) -> RayBasisSet:
        return RayBasisSet(tuple(b for b in self.basis_ids if b != bid), self.polytope)

    def issubset(self, other: RayBasisSet) -> bool:
        return set(self.basis_ids) <= set(other.basis_ids)

    def canonical(self) -> str:
        return " ".join(map(str, self.basis_ids))

    def to_json(self) -> dict:
        return {"bases": list(self.basis_ids), "R": self.R, "B": self.B, "mult4": list(self.rays_with(4))}

    @classmethod
    def from_json(cls, obj: dict | str, polytope: Polytope | None = None) -> RayBasisSet:
        if isinstance(obj, str):
            obj = json.loads(obj)
        s = cls.of(obj["bases"], polytope)
        for key in ("R", "B"):
            if key in obj and obj[key] != getattr(s, key):
                raise ValueError(f"{key} field {obj[key]} disagrees with bases ({getattr(s, key)})")
        return s


def is_parity_proof(s: RayBasisSet) -> bool:
    return s.B % 2 == 1 and all(m % 2 == 0 for m in s.multiplicity.values())


def profile(s: RayBasisSet) -> MultiplicityProfile:
    mult = s.multiplicity
    bad = {r: m for r, m in mult.items() if m % 2 or m > 4}
    if bad:
        raise ValueError(f"not a parity-proof multiplicity profile: {bad}")
    p = MultiplicityProfile(sum(m == 2 for m in mult.values()), sum(m == 4 for m in mult.values()))
    assert p.count_four == 2 * s.B - s.R and p.count_twice == 2 * s.R - 2 * s.B
    return p


def delete_rays(s: RayBasisSet, rays: Iterable[int]) -> RayBasisSet:
    """Drop every basis of ``s`` that involves any of ``rays``."""
    gone = set(rays)
    P = s.polytope
    return RayBasisSet(tuple(b for b in s.basis_ids if gone.isdisjoint(P.bases[b].rays)), P)


def basis_complement(ambient: RayBasisSet, s: RayBasisSet) -> RayBasisSet:
    """The bases of ``ambient`` not in ``s``; a parity proof when ``s`` is one.

    ``ambient`` must have every ray at multiplicity 4 and an even basis count.
    """
    if ambient.B % 2 or any(m != 4 for m in ambient.multiplicity.values()):
        raise ValueError("ambient set must have even B and every ray at multiplicity 4")
    if not s.issubset(ambient):
        raise ValueError("set is not contained in the ambient set")
    if not is_parity_proof(s):
        raise ValueError("set is not a parity proof")
    comp = ambient - s
    n = ambient.B
    assert comp.R == n - 2 * s.B + s.R
    return comp
