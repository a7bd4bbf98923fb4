"""Exhaustive branching search for R-B parity proofs, plus colorability checks.

The branching rule follows the published method: pick a ray that occurs an odd
number of times among the chosen bases and add one of its other bases.  Two
refinements make every proof come out exactly once:

* the root of every branch is the smallest basis id of the final set, so the
  75 roots partition the work;
* when branching on the options ``b1, b2, ...`` of a ray, the branch that adds
  ``bi`` forbids ``b1 .. b(i-1)``.

Pruning uses the published rules (ray count above R, more than 2B-R rays at
multiplicity three or four, any ray at five) and one extra bound that follows
from them: the final multiplicity total ``4B`` must leave room for every odd ray
to become even and for every missing ray to appear twice.
"""

from __future__ import annotations

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .polytope import NUM_BASES, NUM_RAYS, Polytope, default_polytope
from .raybasis import RayBasisSet, is_parity_proof

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchTarget:
    R: int
    B: int

    def __post_init__(self) -> None:
        if self.B % 2 == 0:
            raise ValueError(f"B must be odd, got {self.B}")
        if not (2 * self.B - self.R >= 0 and 2 * self.R - 2 * self.B >= 0):
            raise ValueError(f"{self.R}-{self.B} has a negative multiplicity class")
        if not 0 < self.B <= NUM_BASES or self.R > NUM_RAYS:
            raise ValueError(f"{self.R}-{self.B} is out of range")

    @property
    def fours(self) -> int:
        return 2 * self.B - self.R


class _Kernel:
    """Bitmask tables shared by all roots of one search (read-only)."""

    def __init__(self, polytope: Polytope, universe: Iterable[int] | None = None) -> None:
        self.P = polytope
        self.brays = [tuple(r - 1 for r in polytope.bases[b + 1].rays) for b in range(NUM_BASES)]
        self.rmask = [0] * NUM_RAYS
        for b, rays in enumerate(self.brays):
            for r in rays:
                self.rmask[r] |= 1 << b
        ids = range(1, NUM_BASES + 1) if universe is None else universe
        self.allowed = sum(1 << (b - 1) for b in set(ids))

    def run_root(self, root: int, R: int, B: int, limit: int | None = None,
                 complete: bool = True) -> list[tuple[int, ...]]:
        """All R-B parity proofs whose smallest basis id is ``root`` (1-based)."""
        r0 = root - 1
        if not self.allowed >> r0 & 1:
            return []
        brays, rmask = self.brays, self.rmask
        max_high = 2 * B - R
        cnt = [0] * NUM_RAYS
        chosen: list[int] = []
        out: list[tuple[int, ...]] = []
        st = [0, 0, 0]  # distinct, high, odd-mask

        def add(b: int) -> bool:
            ok = True
            odd = st[2]
            for r in brays[b]:
                c = cnt[r] + 1
                cnt[r] = c
                odd ^= 1 << r
                if c == 1:
                    st[0] += 1
                elif c == 3:
                    st[1] += 1
                elif c == 5:
                    ok = False
            st[2] = odd
            chosen.append(b)
            n = len(chosen)
            d = st[0]
            return (ok and d <= R and st[1] <= max_high and n <= B
                    and 4 * n + odd.bit_count() + 2 * (R - d) <= 4 * B)

        def undo(b: int) -> None:
            odd = st[2]
            for r in brays[b]:
                c = cnt[r]
                cnt[r] = c - 1
                odd ^= 1 << r
                if c == 1:
                    st[0] -= 1
                elif c == 3:
                    st[1] -= 1
            st[2] = odd
            chosen.pop()

        def rec(avail: int) -> bool:
            # returns True to abort (limit reached)
            odd = st[2]
            if len(chosen) == B:
                if odd == 0 and st[0] == R:
                    out.append(tuple(sorted(x + 1 for x in chosen)))
                    return limit is not None and len(out) >= limit
                return False
            if odd:
                best_opts = 0
                best_n = 99
                m = odd
                while m:
                    low = m & -m
                    r = low.bit_length() - 1
                    opts = avail & rmask[r]
                    k = opts.bit_count()
                    if k < best_n:
                        best_n, best_opts = k, opts
                        if k <= 1:
                            break
                    m ^= low
                if best_n == 0:
                    return False
                opts = best_opts
            else:
                if not complete:
                    return False
                opts = avail
            excl = 0
            while opts:
                low = opts & -opts
                b = low.bit_length() - 1
                if add(b):
                    if rec(avail & ~excl & ~low):
                        undo(b)
                        return True
                undo(b)
                excl |= low
                opts ^= low
            return False

        avail = self.allowed & ~((1 << (r0 + 1)) - 1)
        if add(r0):
            rec(avail)
        return out


def _worker(args):
    kernel, root, R, B, limit, complete = args
    return kernel.run_root(root, R, B, limit, complete)


def search(target: SearchTarget | tuple[int, int], *, universe: Iterable[int] | None = None,
           limit: int | None = None, workers: int = 1, roots: Iterable[int] | None = None,
           complete: bool = True, polytope: Polytope | None = None,
           progress: Callable[[int, int, int], None] | None = None) -> list[RayBasisSet]:
    """Every R-B parity proof among the bases of ``universe`` (default: all 75).

    Results are sorted by canonical form and identical for any ``workers``.
    ``limit`` stops early once that many proofs are known (the returned prefix
    is then deterministic only for ``workers == 1``).  ``complete`` also
    extends branches whose multiplicities are all even before B is reached;
    such branches can only lead to non-critical proofs.
    """
    if not isinstance(target, SearchTarget):
        target = SearchTarget(*target)
    P = polytope or default_polytope()
    kernel = _Kernel(P, universe)
    root_list = sorted(roots) if roots is not None else list(range(1, NUM_BASES + 1))
    found: set[tuple[int, ...]] = set()
    jobs = [(kernel, r, target.R, target.B, limit, complete) for r in root_list]
    if workers > 1 and limit is None:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for i, res in enumerate(ex.map(_worker, jobs)):
                found.update(res)
                if progress:
                    progress(i + 1, len(jobs), len(found))
    else:
        for i, job in enumerate(jobs):
            left = None if limit is None else limit - len(found)
            found.update(kernel.run_root(job[1], job[2], job[3], left, complete))
            if progress:
                progress(i + 1, len(jobs), len(found))
            if limit is not None and len(found) >= limit:
                break
    return [RayBasisSet(ids, P) for ids in sorted(found)]


def stderr_progress(done: int, total: int, found: int) -> None:
    print(f"\rroots {done}/{total}  found {found}", end="" if done < total else "\n", file=sys.stderr)


def is_colorable(s: RayBasisSet, full_orthogonality: bool = False) -> dict[int, int] | None:
    """A 0/1 assignment with exactly one ray valued 1 in every basis of ``s``.

    Only orthogonalities inside the bases of ``s`` constrain the values unless
    ``full_orthogonality`` is set, in which case any two orthogonal rays of the
    set may not both be 1.  Returns ``None`` when no assignment exists.  The
    search branches on rays in ascending id order, so the answer is the
    lexicographically first valid choice.
    """
    P = s.polytope
    rays = s.rays
    if not rays:
        return {}
    quads = [tuple(P.bases[b].rays) for b in s.basis_ids]
    present = sum(1 << r for r in rays)
    bmasks = [sum(1 << r for r in q) for q in quads]
    kill = {r: 0 for r in rays}
    if full_orthogonality:
        for r in rays:
            kill[r] = P.neighbor_mask[r] & present
    else:
        for q, m in zip(quads, bmasks):
            for r in q:
                kill[r] |= m & ~(1 << r)

    def rec(ones: int, zeros: int) -> int | None:
        best = None
        best_k = 5
        for m in bmasks:
            if m & ones:
                continue
            free = m & ~zeros
            k = free.bit_count()
            if k == 0:
                return None
            if k < best_k:
                best, best_k = free, k
                if k == 1:
                    break
        if best is None:
            return ones
        opts = best
        while opts:
            low = opts & -opts
            r = low.bit_length() - 1
            got = rec(ones | low, zeros | kill[r])
            if got is not None:
                return got
            zeros |= low
            opts ^= low
        return None

    ones = rec(0, 0)
    if ones is None:
        return None
    return {r: (ones >> r) & 1 for r in rays}


def is_basis_critical(s: RayBasisSet, full_orthogonality: bool = False) -> bool:
    """True iff dropping any single basis of the parity proof makes it colorable."""
    if not is_parity_proof(s):
        raise ValueError(f"{s.size} set is not a parity proof")
    return all(is_colorable(s.without(b), full_orthogonality) is not None for b in s.basis_ids)


def critical_only(sets: Iterable[RayBasisSet]) -> list[RayBasisSet]:
    return [s for s in sets if is_basis_critical(s)]
