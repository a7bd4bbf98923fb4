"""Independent reference implementations used only by the tests."""

from itertools import combinations

from parity600.polytope import Polytope


def ray_driven_proofs(P: Polytope, R: int, B: int) -> list[tuple[int, ...]]:
    """All R-B sets with every ray at even multiplicity, enumerated ray by ray.

    Unlike the package search (which branches on bases from an odd ray),
    this walks the rays in a fixed order and, for each, picks an even-parity
    completion among its still-undecided bases.
    """
    order = [1]
    decided_b = set(P.ray_bases[1])
    while len(order) < 60:
        nxt = max((r for r in P.rays if r not in order),
                  key=lambda r: (sum(b in decided_b for b in P.ray_bases[r]), -r))
        order.append(nxt)
        decided_b |= set(P.ray_bases[nxt])
    first: dict[int, int] = {}
    for i, r in enumerate(order):
        for b in P.ray_bases[r]:
            first.setdefault(b, i)
    finish: dict[int, list[int]] = {}
    for x in P.rays:
        finish.setdefault(max(first[b] for b in P.ray_bases[x]), []).append(x)

    out = []
    decided = [False] * 76
    cnt = [0] * 61
    chosen: list[int] = []
    used = [0]

    def add(b: int, d: int) -> None:
        for x in P.bases[b].rays:
            if d < 0:
                cnt[x] -= 1
                used[0] -= cnt[x] == 0
            else:
                used[0] += cnt[x] == 0
                cnt[x] += 1

    def rec(i: int) -> None:
        n = len(chosen)
        if i == 60:
            if n == B and used[0] == R:
                out.append(tuple(sorted(chosen)))
            return
        r = order[i]
        und = [b for b in P.ray_bases[r] if not decided[b]]
        for b in und:
            decided[b] = True
        for k in range(cnt[r] % 2, len(und) + 1, 2):
            if n + k > B:
                break
            for sub in combinations(und, k):
                for b in sub:
                    chosen.append(b)
                    add(b, 1)
                if used[0] <= R and all(cnt[x] % 2 == 0 for x in finish.get(i, ())):
                    rec(i + 1)
                for b in sub:
                    chosen.pop()
                    add(b, -1)
        for b in und:
            decided[b] = False

    rec(0)
    return sorted(out)


def brute_colorable(quads: list[tuple[int, ...]]) -> bool:
    """Exactly-one-1-per-basis colouring by plain recursion over bases."""
    assign: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == len(quads):
            return True
        q = quads[i]
        ones = [r for r in q if assign.get(r) == 1]
        if len(ones) > 1:
            return False
        if len(ones) == 1:
            free = [r for r in q if r not in assign]
            for r in free:
                assign[r] = 0
            ok = rec(i + 1)
            for r in free:
                del assign[r]
            return ok
        for pick in q:
            if assign.get(pick) == 0:
                continue
            free = [r for r in q if r not in assign]
            for r in free:
                assign[r] = 1 if r == pick else 0
            ok = rec(i + 1)
            for r in free:
                del assign[r]
            if ok:
                return True
        return False

    return rec(0)
