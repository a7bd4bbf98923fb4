"""Symmetries of the ray system: automorphism groups, canonical forms, orbits.

Three nested groups act on the 60 rays:

``graph``
    all permutations preserving orthogonality (order 14400);
``geometric``
    the subgroup that also preserves every absolute inner product, i.e. the
    orthogonal maps of 4-space carrying the ray set to itself, taken up to sign;
``rotation``
    the proper (determinant +1) part of ``geometric``.

Geometrically distinct varieties are orbits of the geometric group; with the
rotation group alone the single 26-13 variety would split in two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, product
from typing import Iterable

import numpy as np

from .golden import GoldenNumber, mul, sign
from .polytope import NUM_BASES, NUM_RAYS, Polytope, default_polytope
from .raybasis import RayBasisSet

GROUPS = ("graph", "geometric", "rotation")


@dataclass(frozen=True)
class RayPermutation:
    """A bijection of ray ids; ``image[i - 1]`` is the image of ray ``i``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError("not a permutation of 1..n")

    def __call__(self, ray: int) -> int:
        return self.image[ray - 1]

    def __matmul__(self, other: RayPermutation) -> RayPermutation:
        """Composition: ``(self @ other)(r) == self(other(r))``."""
        return RayPermutation(tuple(self.image[o - 1] for o in other.image))

    def inverse(self) -> RayPermutation:
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image, start=1):
            inv[j - 1] = i
        return RayPermutation(tuple(inv))

    def apply(self, s: RayBasisSet) -> RayBasisSet:
        P = s.polytope
        return RayBasisSet(tuple(P.basis_for(self(r) for r in P.bases[b].rays) for b in s.basis_ids), P)


@dataclass(frozen=True)
class OrbitReport:
    representative: RayBasisSet
    orbit_size: int
    stabilizer_order: int
    group_order: int
    group: str
    variety_key: tuple

    def to_json(self) -> dict:
        return {
            "representative": list(self.representative.basis_ids),
            "R": self.representative.R,
            "B": self.representative.B,
            "group": self.group,
            "group_order": self.group_order,
            "orbit_size": self.orbit_size,
            "stabilizer_order": self.stabilizer_order,
            "variety_key": _jsonable(self.variety_key),
        }


def _jsonable(key: tuple) -> list:
    return [[[g[0], g[1], n] for g, n in part] for part in key]


def _vertex_order(nbr: list[int]) -> list[int]:
    # greedy: next vertex has most adjacencies to those already placed
    order = [0]
    placed = 1
    while len(order) < len(nbr):
        best = max((v for v in range(len(nbr)) if not placed >> v & 1),
                   key=lambda v: ((nbr[v] & placed).bit_count(), -v))
        order.append(best)
        placed |= 1 << best
    return order


def graph_automorphisms(polytope: Polytope | None = None) -> np.ndarray:
    """All orthogonality-preserving ray permutations, as a (n, 60) array of 0-based images.

    Backtracking over vertices in a fixed order; the candidate set for each
    vertex is the intersection of the neighbourhoods (or non-neighbourhoods)
    of the images of already placed vertices.
    """
    P = polytope or default_polytope()
    n = NUM_RAYS
    nbr = [sum(1 << (s - 1) for s in P.neighbors[r + 1]) for r in range(n)]
    full = (1 << n) - 1
    order = _vertex_order(nbr)
    pos = {v: i for i, v in enumerate(order)}
    # for each depth, earlier vertices split into adjacent / non-adjacent
    before_adj = [[u for u in order[:k] if nbr[order[k]] >> u & 1] for k in range(n)]
    before_non = [[u for u in order[:k] if not nbr[order[k]] >> u & 1] for k in range(n)]
    img = [0] * n
    found: list[list[int]] = []

    def rec(k: int, used: int) -> None:
        if k == n:
            found.append(img.copy())
            return
        cand = full & ~used
        for u in before_adj[k]:
            cand &= nbr[img[u]]
        for u in before_non[k]:
            cand &= ~nbr[img[u]]
        v = order[k]
        while cand:
            low = cand & -cand
            img[v] = low.bit_length() - 1
            rec(k + 1, used | low)
            cand ^= low

    rec(0, 0)
    del pos
    arr = np.array(sorted(found), dtype=np.int16)
    return arr


def _abs_gram(P: Polytope) -> np.ndarray:
    keys: dict[tuple[int, int], int] = {}
    g = np.zeros((NUM_RAYS, NUM_RAYS), dtype=np.int16)
    for i in range(NUM_RAYS):
        for j in range(NUM_RAYS):
            v = abs(P.ip(i + 1, j + 1))
            g[i, j] = keys.setdefault((v.a, v.b), len(keys))
    return g


def _det4(m: list[list[GoldenNumber]]) -> GoldenNumber:
    def det3(a):
        return (mul(a[0][0], mul(a[1][1], a[2][2]) - mul(a[1][2], a[2][1]))
                - mul(a[0][1], mul(a[1][0], a[2][2]) - mul(a[1][2], a[2][0]))
                + mul(a[0][2], mul(a[1][0], a[2][1]) - mul(a[1][1], a[2][0])))

    total = GoldenNumber()
    for c in range(4):
        minor = [[m[r][k] for k in range(4) if k != c] for r in range(1, 4)]
        term = mul(m[0][c], det3(minor))
        total = total + term if c % 2 == 0 else total - term
    return total


def _orientation(P: Polytope, perm: np.ndarray) -> int:
    """+1 for a rotation, -1 for a reflection; ``perm`` must preserve |inner products|.

    Rays 1..4 are the coordinate axes (scaled by 2), so the linear map sends
    axis i to sign_i times the image of ray i; the signs are fixed by
    requiring ray 5 = (1,1,1,1) to land on plus or minus its image.
    """
    cols = [P.vector(int(perm[i]) + 1) for i in range(4)]
    target = P.vector(int(perm[4]) + 1)
    for eps in product((1, -1), repeat=3):
        signs = (1,) + eps
        # image of (1,1,1,1) is half the signed column sum; compare with +-target
        s = [sum((c[k] if e > 0 else -c[k] for c, e in zip(cols, signs)), GoldenNumber()) for k in range(4)]
        twice = [t + t for t in target]
        if s == twice or s == [-t for t in twice]:
            d = _det4([[c[k] for c in cols] for k in range(4)])
            return sign(d) * signs[1] * signs[2] * signs[3]
    raise RuntimeError("permutation is not induced by an orthogonal map")


class SymmetryGroup:
    """One of the groups acting on rays, with its induced action on bases."""

    def __init__(self, rays: np.ndarray, name: str, polytope: Polytope) -> None:
        self.name = name
        self.P = polytope
        self.rays = rays  # (order, 60), 0-based ray images
        quad_index = {frozenset(b.rays): b.id - 1 for b in polytope.bases.values()}
        bases = np.empty((len(rays), NUM_BASES), dtype=np.int16)
        quads = [tuple(r - 1 for r in polytope.bases[b].rays) for b in range(1, NUM_BASES + 1)]
        for gi, g in enumerate(rays):
            for bi, q in enumerate(quads):
                bases[gi, bi] = quad_index[frozenset(int(g[r]) + 1 for r in q)]
        self.bases = bases  # (order, 75), 0-based basis images

    @property
    def order(self) -> int:
        return len(self.rays)

    def elements(self) -> Iterable[RayPermutation]:
        for g in self.rays:
            yield RayPermutation(tuple(int(x) + 1 for x in g))

    def contains_identity(self) -> bool:
        ident = np.arange(NUM_RAYS)
        return bool((self.rays == ident).all(axis=1).any())

    def ray_orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for r in range(NUM_RAYS):
            if r in seen:
                continue
            orb = sorted(set(int(x) for x in self.rays[:, r]))
            seen.update(orb)
            out.append([x + 1 for x in orb])
        return out

    def generators(self) -> list[RayPermutation]:
        """A small generating set, chosen greedily in element order."""
        key = {g.tobytes(): i for i, g in enumerate(self.rays)}
        gens: list[np.ndarray] = []
        reached = {np.arange(NUM_RAYS, dtype=self.rays.dtype).tobytes()}
        for g in self.rays:
            if g.tobytes() in reached:
                continue
            gens.append(g)
            frontier = [np.frombuffer(x, dtype=self.rays.dtype) for x in reached]
            while frontier:
                nxt = []
                for h in frontier:
                    for s in gens:
                        c = s[h]
                        b = c.tobytes()
                        if b not in reached:
                            reached.add(b)
                            nxt.append(c)
                frontier = nxt
            if len(reached) == len(key):
                break
        return [RayPermutation(tuple(int(x) + 1 for x in g)) for g in gens]

    def _images(self, s: RayBasisSet) -> np.ndarray:
        idx = np.asarray(s.basis_ids, dtype=np.int64) - 1
        return np.sort(self.bases[:, idx], axis=1)

    def canonical_set(self, s: RayBasisSet) -> RayBasisSet:
        if not s.basis_ids:
            return s
        imgs = self._images(s)
        order = np.lexsort(imgs.T[::-1])
        return RayBasisSet(tuple(int(x) + 1 for x in imgs[order[0]]), s.polytope)

    def stabilizer_order(self, s: RayBasisSet) -> int:
        if not s.basis_ids:
            return self.order
        imgs = self._images(s)
        me = np.asarray(s.basis_ids) - 1
        return int((imgs == me).all(axis=1).sum())

    def orbit(self, s: RayBasisSet) -> list[tuple[int, ...]]:
        imgs = self._images(s) + 1
        return sorted(set(map(tuple, imgs.tolist())))

    def orbit_report(self, s: RayBasisSet) -> OrbitReport:
        stab = self.stabilizer_order(s)
        return OrbitReport(self.canonical_set(s), self.order // stab, stab, self.order, self.name,
                           variety_key(s))


def groups(polytope: Polytope | None = None) -> dict[str, SymmetryGroup]:
    """The three nested groups (graph ⊃ geometric ⊃ rotation), built once per polytope."""
    return _groups(polytope or default_polytope())


@cache
def _groups(P: Polytope) -> dict[str, SymmetryGroup]:
    graph = graph_automorphisms(P)
    gram = _abs_gram(P)
    keep = np.array([(gram[np.ix_(g, g)] == gram).all() for g in graph])
    geo = graph[keep]
    orient = np.array([_orientation(P, g) for g in geo])
    rot = geo[orient > 0]
    return {
        "graph": SymmetryGroup(graph, "graph", P),
        "geometric": SymmetryGroup(geo, "geometric", P),
        "rotation": SymmetryGroup(rot, "rotation", P),
    }


def automorphism_group(polytope: Polytope | None = None) -> SymmetryGroup:
    return groups(polytope)["graph"]


def rotation_group(polytope: Polytope | None = None) -> SymmetryGroup:
    return groups(polytope)["rotation"]


def inner_product_pattern(s: RayBasisSet) -> tuple:
    """Sorted multiset of absolute pairwise inner products among the set's rays."""
    aa, ab = _abs_gram_arrays(s.polytope)
    rs = np.asarray(s.rays, dtype=np.int64) - 1
    i, j = np.triu_indices(len(rs), 1)
    if not len(i):
        return ()
    return _multiset(aa[rs[i], rs[j]], ab[rs[i], rs[j]])


_PACK = 1 << 20


def _multiset(a: np.ndarray, b: np.ndarray) -> tuple:
    """Sorted (value, count) pairs for golden numbers a + b*tau given componentwise."""
    packed = a * _PACK + b  # |b| < 2**19 here, so packing preserves (a, b) order
    vals, counts = np.unique(packed, return_counts=True)
    out = []
    for v, n in zip(vals.tolist(), counts.tolist()):
        qa, qb = divmod(v, _PACK)
        if qb >= _PACK // 2:
            qa, qb = qa + 1, qb - _PACK
        out.append(((qa, qb), n))
    return tuple(out)


@cache
def _abs_gram_arrays(polytope: Polytope) -> tuple[np.ndarray, np.ndarray]:
    aa = np.zeros((NUM_RAYS, NUM_RAYS), dtype=np.int64)
    ab = np.zeros_like(aa)
    for i in range(NUM_RAYS):
        for j in range(NUM_RAYS):
            g = abs(polytope.ip(i + 1, j + 1))
            aa[i, j], ab[i, j] = g.a, g.b
    return aa, ab


@cache
def _gram_arrays(polytope: Polytope) -> tuple[np.ndarray, np.ndarray]:
    ga = np.zeros((NUM_RAYS, NUM_RAYS), dtype=np.int64)
    gb = np.zeros_like(ga)
    for i in range(NUM_RAYS):
        for j in range(NUM_RAYS):
            g = polytope.ip(i + 1, j + 1)
            ga[i, j], gb[i, j] = g.a, g.b
    return ga, gb


@cache
def _triples(n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), 3)), dtype=np.int64).reshape(-1, 3)


def triangle_pattern(s: RayBasisSet) -> tuple:
    """Sorted multiset of the products ``g(a,b) g(b,c) g(c,a)`` over ray triples.

    Each ray enters twice, so the product ignores the sign chosen for a ray;
    unlike the absolute pattern it also tells apart sets that only a
    non-geometric orthogonality-preserving permutation relates.
    """
    ga, gb = _gram_arrays(s.polytope)
    rs = np.asarray(s.rays, dtype=np.int64) - 1
    if len(rs) < 3:
        return ()
    t = rs[_triples(len(rs))]
    i, j, k = t[:, 0], t[:, 1], t[:, 2]
    a1, b1 = ga[i, j], gb[i, j]
    a2, b2 = ga[j, k], gb[j, k]
    a3, b3 = ga[k, i], gb[k, i]
    # (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1
    pa, pb = a1 * a2 + b1 * b2, a1 * b2 + b1 * a2 + b1 * b2
    qa, qb = pa * a3 + pb * b3, pa * b3 + pb * a3 + pb * b3
    return _multiset(qa, qb)


def variety_key(s: RayBasisSet) -> tuple:
    """Inner-product fingerprint separating geometrically distinct varieties.

    Pairs the absolute pairwise pattern with the signed triangle pattern; both
    are unchanged by any orthogonal map of 4-space, so the key is constant on
    orbits of the geometric group.
    """
    return inner_product_pattern(s), triangle_pattern(s)


def canonical_set(s: RayBasisSet, group: str = "graph") -> RayBasisSet:
    return groups(s.polytope)[group].canonical_set(s)


def orbit_report(s: RayBasisSet, group: str = "geometric") -> OrbitReport:
    return groups(s.polytope)[group].orbit_report(s)


def classify(sets: Iterable[RayBasisSet], group: str = "geometric") -> dict[tuple[int, ...], list[RayBasisSet]]:
    """Group sets by canonical representative (lexicographically least orbit member).

    Orbits are expanded once per new class, so large catalogs with few
    classes cost a handful of orbit computations.
    """
    sets = list(sets)
    G = groups(sets[0].polytope if sets else None)[group]
    index = {s.basis_ids: s for s in sets}
    out: dict[tuple[int, ...], list[RayBasisSet]] = {}
    done: set[tuple[int, ...]] = set()
    for s in sets:
        if s.basis_ids in done:
            continue
        orb = G.orbit(s)
        members = [index[x] for x in orb if x in index]
        done.update(m.basis_ids for m in members)
        out[orb[0]] = members
    return dict(sorted(out.items()))


def grand_total(representatives: Iterable[RayBasisSet], group: str = "geometric") -> int:
    """Sum of orbit sizes over distinct orbit representatives (a lower bound)."""
    G = groups()[group]
    seen: set[tuple[int, ...]] = set()
    total = 0
    for s in representatives:
        c = G.canonical_set(s).basis_ids
        if c not in seen:
            seen.add(c)
            total += G.order // G.stabilizer_order(s)
    return total
