"""Re-derive the tabulated structures and diff them against the golden data."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from .data import tables
from .golden import ONE, TAU, KAPPA, ZERO, GoldenNumber
from .polytope import GeometryError, Polytope, basis_position, inner_product, parse_vector, table2_bases


@dataclass
class VerificationReport:
    checks: dict[str, int] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def text(self) -> str:
        out = [f"{k}: {v}" for k, v in self.checks.items()]
        out += [f"MISMATCH {e}" for e in self.errors]
        out.append("all tables verified" if self.ok else f"{len(self.errors)} mismatches")
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "errors": self.errors}


def _even(p: tuple[int, ...]) -> bool:
    return sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4)) % 2 == 0


def cell_vertices() -> set[tuple[GoldenNumber, ...]]:
    """The 120 vertices of the 600-cell at radius 2, built from scratch."""
    two = GoldenNumber(2, 0)
    out: set[tuple[GoldenNumber, ...]] = set()
    for i in range(4):
        for s in (two, -two):
            v = [ZERO] * 4
            v[i] = s
            out.add(tuple(v))
    for signs in product((ONE, -ONE), repeat=4):
        out.add(signs)
    base = (TAU, ONE, KAPPA, ZERO)
    for p in permutations(range(4)):
        if not _even(p):
            continue
        for signs in product((1, -1), repeat=3):
            v = [ZERO] * 4
            for i in range(3):
                v[p[i]] = base[i] if signs[i] > 0 else -base[i]
            v[p[3]] = ZERO
            out.add(tuple(v))
    return out


def verify_tables(ray_text: dict[int, str] | None = None,
                  basis_rows: tuple[str, ...] | None = None) -> VerificationReport:
    ray_text = tables.RAYS if ray_text is None else ray_text
    basis_rows = tables.BASIS_TABLE if basis_rows is None else basis_rows
    rep = VerificationReport()

    # Table 1: each entry is a 600-cell vertex, sign-normalized, no repeats
    verts = cell_vertices()
    seen: dict[tuple, int] = {}
    for rid in range(1, 61):
        if rid not in ray_text:
            rep.errors.append(f"Table 1 entry {rid}: missing")
            continue
        try:
            v = parse_vector(ray_text[rid])
        except ValueError as exc:
            rep.errors.append(f"Table 1 entry {rid}: {exc}")
            continue
        if v not in verts:
            rep.errors.append(f"Table 1 entry {rid}: ({ray_text[rid]}) is not a 600-cell vertex")
            continue
        if next(x for x in v if x).sign() < 0:
            rep.errors.append(f"Table 1 entry {rid}: first nonzero component is negative")
        key = min(v, tuple(-x for x in v))
        if key in seen:
            rep.errors.append(f"Table 1 entry {rid}: same ray as entry {seen[key]}")
        seen[key] = rid
    rep.checks["rays"] = len(seen)
    if rep.errors:
        rep.errors.append("Tables 2, 9, 10 not checked (Table 1 invalid)")
        return rep

    vecs = {r: parse_vector(t) for r, t in ray_text.items()}
    nbr = {r: {s for s in vecs if s != r and not inner_product(vecs[r], vecs[s])} for r in vecs}
    found = set()
    for a in vecs:
        for b in nbr[a]:
            for c in nbr[a] & nbr[b]:
                for d in nbr[a] & nbr[b] & nbr[c]:
                    found.add(frozenset((a, b, c, d)))
    rep.checks["bases derived"] = len(found)

    # Table 2: every printed cell is a derived basis, and nothing is left over
    try:
        printed = table2_bases(basis_rows)
    except ValueError as exc:
        rep.errors.append(f"Table 2: {exc}")
        return rep
    hits = set()
    for bid, quad in sorted(printed.items()):
        q = frozenset(quad)
        row, col, line = basis_position(bid)
        if len(q) != 4 or q not in found:
            rep.errors.append(f"Table 2 cell row {3 * row + line + 1} block {col + 1} (basis {bid}): "
                              f"{' '.join(map(str, quad))} is not a basis")
        elif q in hits:
            rep.errors.append(f"Table 2 cell row {3 * row + line + 1} block {col + 1} (basis {bid}): repeated")
        hits.add(q)
    for q in sorted(found - hits, key=sorted):
        rep.errors.append(f"Table 2: derived basis {' '.join(map(str, sorted(q)))} not printed")
    rep.checks["bases printed"] = len(printed)
    if rep.errors:
        return rep

    # Tables 9 and 10 via the facet machinery (it cross-checks internally)
    from .facets import Facets, dpp_lines

    try:
        F = Facets(Polytope(ray_text, basis_rows))
        rep.checks["DLPs"] = len(F.enumerate_dlps())
        rep.checks["DPPs"] = len(F.enumerate_dpps())
        rep.checks["RCs"] = len(F.enumerate_rcs())
        for kind in ("RC", "DLP", "DPP"):
            til, tab = F.tilings(kind), F.table_tilings(kind)
            rep.checks[f"{kind} tilings"] = len(til)
            if kind != "RC" and sorted(til) != sorted(tab):
                rep.errors.append(f"{kind} tilings differ from the table rows/columns")
        for line in dpp_lines():
            if sorted(F.reconstruct_bases(line)) != list(range(1, 76)):
                rep.errors.append(f"Table 10 line {line}: matings do not recover the 75 bases")
    except GeometryError as exc:
        rep.errors.append(str(exc))
    return rep
