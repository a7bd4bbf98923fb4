"""Noncontextual bounds for the parity inequality.

Each basis contributes the term ``-A1 A2 A3 A4``.  Under a noncontextual
assignment of +1/-1 to rays a term is +1 exactly when an odd number of its
rays carry -1; writing bit 1 for -1, every basis asks for "sum of its bits
is 1 mod 2".  A parity proof makes that system inconsistent, so maximizing
the sum is minimizing the number of violated (even) bases, which is a
minimum-weight coset problem over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polytope import Polytope, default_polytope
from .raybasis import RayBasisSet, is_parity_proof


class NotAParityProof(ValueError):
    pass


@dataclass(frozen=True)
class NhvAssignment:
    values: dict[int, int]

    def __post_init__(self) -> None:
        bad = {r: v for r, v in self.values.items() if v not in (1, -1)}
        if bad:
            raise ValueError(f"values must be +1 or -1, got {bad}")

    @classmethod
    def from_bits(cls, bits: int, rays: Iterable[int]) -> "NhvAssignment":
        return cls({r: -1 if bits >> (r - 1) & 1 else 1 for r in sorted(rays)})

    def minus_count(self, quad: Sequence[int]) -> int:
        return sum(self.values[r] == -1 for r in quad)

    def term(self, quad: Sequence[int]) -> int:
        """Value of -A1 A2 A3 A4 on one basis."""
        return 1 if self.minus_count(quad) % 2 else -1

    def F(self, s: RayBasisSet) -> int:
        return sum(self.term(q) for q in s.quads())

    def violated(self, s: RayBasisSet) -> list[int]:
        return [b for b, q in zip(s.basis_ids, s.quads()) if self.term(q) == -1]


@dataclass(frozen=True)
class InequalityReport:
    B: int
    F_max_nhv: int
    M_quantum: int
    witness: NhvAssignment
    n: int
    m: int
    violated: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "B": self.B,
            "F_max": self.F_max_nhv,
            "M_quantum": self.M_quantum,
            "n": self.n,
            "m": self.m,
            "violated": list(self.violated),
            "witness": {str(r): v for r, v in sorted(self.witness.values.items())},
        }


# GF(2) linear algebra on int bitmasks ----------------------------------------

def _ray_mask(quad: Iterable[int]) -> int:
    return sum(1 << (r - 1) for r in quad)


def solve_gf2(rows: Sequence[tuple[int, int]]) -> int | None:
    """Solve ``popcount(mask & x) % 2 == rhs`` for all rows; None if inconsistent.

    Free variables are set to 0, which makes the answer deterministic.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        while mask:
            h = mask.bit_length() - 1
            if h not in pivots:
                pivots[h] = (mask, rhs)
                break
            pm, pr = pivots[h]
            mask ^= pm
            rhs ^= pr
        else:
            if rhs:
                return None
    x = 0
    for h in sorted(pivots):
        mask, rhs = pivots[h]
        if (rhs ^ (mask & x & ~(1 << h)).bit_count()) & 1:
            x |= 1 << h
    return x


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h not in basis:
                basis[h] = v
                break
            v ^= basis[h]
    return len(basis)


def left_kernel(rows: Sequence[int]) -> list[int]:
    """Basis of {y : XOR of rows[i] over bits i of y is 0}, as masks over row indices."""
    reduced: dict[int, tuple[int, int]] = {}
    out = []
    for i, v in enumerate(rows):
        tag = 1 << i
        while v:
            h = v.bit_length() - 1
            if h not in reduced:
                reduced[h] = (v, tag)
                break
            pv, pt = reduced[h]
            v ^= pv
            tag ^= pt
        else:
            out.append(tag)
    return out


# per-proof bound -------------------------------------------------------------

def nhv_max(s: RayBasisSet) -> InequalityReport:
    """Exact maximum of F over noncontextual assignments, with a witness.

    The full parity system is inconsistent for a parity proof, so F = B is
    impossible.  Dropping one basis at a time and solving the rest gives an
    assignment violating only that basis whenever one exists; otherwise the
    general minimum-coset search decides.
    """
    if not is_parity_proof(s):
        raise NotAParityProof(f"{s.size} set is not a parity proof")
    rows = [(_ray_mask(q), 1) for q in s.quads()]
    if solve_gf2(rows) is not None:
        raise AssertionError("parity proof admits a full assignment")
    bits = None
    for i in range(len(rows)):
        bits = solve_gf2(rows[:i] + rows[i + 1:])
        if bits is not None:
            break
    if bits is None:
        e = min_weight_coset([m for m, _ in rows], proofs=None)
        bits = solve_gf2([(m, 1 ^ (e >> i & 1)) for i, (m, _) in enumerate(rows)])
    w = NhvAssignment.from_bits(bits, s.rays)
    counts = [w.minus_count(q) for q in s.quads()]
    return InequalityReport(
        B=s.B,
        F_max_nhv=w.F(s),
        M_quantum=s.B,
        witness=w,
        n=counts.count(1),
        m=counts.count(3),
        violated=tuple(w.violated(s)),
    )


# global bound over the 75 bases ---------------------------------------------

def _branch_bound(constraints: list[int], need_odd: list[bool], width: int,
                  root: int, cap: int) -> int | None:
    """Smallest e (bitmask over ``width`` positions) with e & c nonempty (need_odd
    False) or |e & c| odd (need_odd True) for every constraint, of size <= cap.

    Branching picks the unsatisfied constraint with fewest free positions and
    tries each in turn, excluding those already tried; the bound is a greedy
    packing of unsatisfied constraints over disjoint free positions.
    """
    full = (1 << width) - 1
    parity = any(need_odd)

    def unsatisfied(e: int) -> list[int]:
        if parity:
            return [c for c in constraints if not (c & e).bit_count() & 1]
        return [c for c in constraints if not c & e]

    best: list[int | None] = [None]
    limit = [cap]

    def rec(e: int, excl: int, size: int, open_: list[int]) -> None:
        if not open_:
            best[0] = e
            limit[0] = size - 1
            return
        free = full & ~excl & ~e
        used = 0
        need = 0
        pick = None
        fewest = width + 1
        for c in open_:
            a = c & free
            if not a:
                return
            k = a.bit_count()
            if k < fewest:
                fewest, pick = k, a
            if not a & used:
                used |= a
                need += 1
        if size + need > limit[0]:
            return
        a = pick
        while a and size + 1 <= limit[0]:
            low = a & -a
            a ^= low
            child = e | low
            if parity:
                nxt = [c for c in constraints if not (c & child).bit_count() & 1]
            else:
                nxt = [c for c in open_ if not c & low]
            rec(child, excl, size + 1, nxt)
            excl |= low

    rec(root, 0, root.bit_count(), unsatisfied(root))
    return best[0]


def _search_min(constraints: list[int], need_odd: bool, width: int, root: int) -> int:
    """Optimal solution; tries caps upward so the first hit is minimal."""
    cap = root.bit_count()
    while cap <= width:
        e = _branch_bound(constraints, [need_odd] * len(constraints), width, root, cap)
        if e is not None:
            return e
        cap += 1
    raise AssertionError("constraints cannot be satisfied")


def min_weight_coset(rows: Sequence[int], proofs: Sequence[int] | None = None,
                     root: int = 0) -> int:
    """Minimum set of rows to drop so that "each row sums to 1" becomes solvable.

    ``proofs`` may supply odd dependency vectors (masks over row indices) to
    drive the search; they are completed to span the whole dependency space.
    """
    kernel = left_kernel(list(rows))
    cons = list(proofs or [])
    if gf2_rank(cons) < len(kernel):
        cons += kernel
    # even dependencies need even overlap: add an odd one to make them odd
    odd = next((y for y in cons if y.bit_count() & 1), None)
    if odd is None:
        return 0
    cons = [y if y.bit_count() & 1 else y ^ odd for y in cons]
    return _search_min(sorted(set(cons)), True, len(rows), root)


@dataclass(frozen=True)
class GlobalBound:
    """Result of the all-bases analysis; ``hitting_set`` and ``min_violated`` are exact minima."""

    n_proofs: int
    hitting_set: tuple[int, ...]
    min_violated: tuple[int, ...]
    witness: NhvAssignment = field(repr=False)

    @property
    def hitting_set_bound(self) -> int:
        return len(self.hitting_set)

    @property
    def nhv_max_sum(self) -> int:
        return 75 - 2 * len(self.min_violated)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.nhv_max_sum, 75)

    @property
    def hitting_set_ratio(self) -> Fraction:
        return Fraction(75 - 2 * self.hitting_set_bound, 75)

    def to_json(self) -> dict:
        return {
            "proofs": self.n_proofs,
            "hitting_set_bound": self.hitting_set_bound,
            "hitting_set": list(self.hitting_set),
            "hitting_set_ratio": str(self.hitting_set_ratio),
            "min_violated": len(self.min_violated),
            "violated_bases": list(self.min_violated),
            "nhv_max_sum": self.nhv_max_sum,
            "ratio": str(self.ratio),
            "witness": {str(r): v for r, v in sorted(self.witness.values.items())},
        }


def _bits_to_ids(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def min_hitting_set(proofs: Sequence[RayBasisSet], root_basis: int | None = None) -> tuple[int, ...]:
    """Smallest set of basis ids meeting every proof.

    ``root_basis`` forces one basis into the set, which is harmless when the
    symmetry group is transitive on bases and cuts the tree substantially.
    """
    masks = sorted({sum(1 << (b - 1) for b in p.basis_ids) for p in proofs})
    root = 1 << (root_basis - 1) if root_basis else 0
    return _bits_to_ids(_search_min(masks, False, 75, root))


def global_bound(proofs: Sequence[RayBasisSet], polytope: Polytope | None = None,
                 use_symmetry: bool = True) -> GlobalBound:
    """Exact minimum number of violated bases over all 75, plus the hitting-set bound.

    Every proof in ``proofs`` forces an odd number of violated bases among its
    own; if the proofs span all dependencies among the 75 basis constraints
    this condition is also sufficient, which is checked and repaired here.
    """
    P = polytope or default_polytope()
    root_basis = None
    if use_symmetry:
        from .symmetry import groups

        g = groups(P)["graph"]
        if len(set(g.bases[:, 0].tolist())) == 75:
            root_basis = 1
    rows = [_ray_mask(P.bases[b].rays) for b in range(1, 76)]
    hs = min_hitting_set(proofs, root_basis)
    pmasks = [sum(1 << (b - 1) for b in p.basis_ids) for p in proofs]
    e = min_weight_coset(rows, pmasks, root=1 if root_basis else 0)
    bits = solve_gf2([(m, 1 ^ (e >> i & 1)) for i, m in enumerate(rows)])
    w = NhvAssignment.from_bits(bits, range(1, 61))
    full = RayBasisSet.full(P)
    viol = tuple(w.violated(full))
    if viol != _bits_to_ids(e):
        raise AssertionError("witness does not realize the optimal violation pattern")
    return GlobalBound(len(proofs), hs, viol, w)
