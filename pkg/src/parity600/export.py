"""Text exports: MMP hypergraph strings, DOT incidence graphs and JSON catalogs.

MMP grammar used here::

    document := edge ("," edge)* "." "\\n"      (or just ".\\n" when empty)
    edge     := vertex vertex vertex vertex
    vertex   := CHAR | "+" CHAR CHAR

``CHAR`` runs over ``1-9A-Za-z`` (61 symbols).  Rays get symbols in ascending
id order; the 62nd distinct ray onward is written ``+`` followed by two
symbols encoding its overflow index in base 61.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass
from typing import Iterable

from .polytope import Polytope
from .raybasis import RayBasisSet

ALPHABET = string.digits[1:] + string.ascii_uppercase + string.ascii_lowercase
ESCAPE = "+"
SCHEMA = 1


class MmpError(ValueError):
    pass


def vertex_token(index: int) -> str:
    if index < len(ALPHABET):
        return ALPHABET[index]
    k = index - len(ALPHABET)
    n = len(ALPHABET)
    if k >= n * n:
        raise MmpError(f"vertex index {index} beyond the escape range")
    return ESCAPE + ALPHABET[k // n] + ALPHABET[k % n]


def _tokens(edge: str) -> list[str]:
    out, i = [], 0
    while i < len(edge):
        if edge[i] == ESCAPE:
            tok = edge[i:i + 3]
            if len(tok) != 3 or any(c not in ALPHABET for c in tok[1:]):
                raise MmpError(f"bad escape in edge {edge!r}")
            out.append(tok)
            i += 3
        else:
            if edge[i] not in ALPHABET:
                raise MmpError(f"unexpected character {edge[i]!r}")
            out.append(edge[i])
            i += 1
    return out


def token_index(tok: str) -> int:
    if tok[0] == ESCAPE:
        n = len(ALPHABET)
        return n + ALPHABET.index(tok[1]) * n + ALPHABET.index(tok[2])
    return ALPHABET.index(tok)


@dataclass(frozen=True)
class MmpDocument:
    alphabet: dict[int, str]
    edges: tuple[str, ...]

    @property
    def text(self) -> str:
        return ",".join(self.edges) + ".\n"

    def quads(self) -> list[tuple[int, ...]]:
        back = {v: k for k, v in self.alphabet.items()}
        return [tuple(back[t] for t in _tokens(e)) for e in self.edges]

    def to_set(self, polytope: Polytope | None = None) -> RayBasisSet:
        return RayBasisSet.from_quads(self.quads(), polytope)


def export_mmp(s: RayBasisSet) -> MmpDocument:
    if not s.basis_ids:
        raise MmpError("cannot export an empty set")
    alphabet = {r: vertex_token(i) for i, r in enumerate(s.rays)}
    edges = tuple("".join(alphabet[r] for r in sorted(q)) for q in s.quads())
    return MmpDocument(alphabet, edges)


def parse_mmp(text: str, rays: Iterable[int] | None = None) -> MmpDocument:
    """Parse an MMP string; ``rays`` (ascending) restores the vertex labels.

    Without ``rays`` vertices are numbered 1, 2, ... in alphabet order.
    """
    body = text.strip()
    if not body.endswith("."):
        raise MmpError("MMP document must end with '.'")
    body = body[:-1]
    edges = tuple(e.strip() for e in body.split(",")) if body else ()
    used: set[str] = set()
    for e in edges:
        toks = _tokens(e)
        if len(toks) != 4:
            raise MmpError(f"edge {e!r} has {len(toks)} vertices, expected 4")
        used.update(toks)
    ordered = sorted(used, key=token_index)
    labels = list(rays) if rays is not None else [token_index(t) + 1 for t in ordered]
    if rays is not None:
        if len(labels) != len(ordered):
            raise MmpError(f"{len(ordered)} vertices but {len(labels)} ray labels")
        labels = [labels[token_index(t)] for t in ordered]
    return MmpDocument(dict(zip(labels, ordered)), edges)


def export_dot(s: RayBasisSet) -> str:
    """Bipartite ray/basis incidence graph."""
    lines = ["graph proof {"]
    for r in s.rays:
        lines.append(f"  r{r} [label=\"{r}\"];")
    for b in s.basis_ids:
        lines.append(f"  b{b} [shape=box, label=\"B{b}\"];")
    for b, q in zip(s.basis_ids, s.quads()):
        for r in sorted(q):
            lines.append(f"  r{r} -- b{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def catalog_json(sets: Iterable[RayBasisSet], kind: str, **extra) -> str:
    sets = list(sets)
    doc = {"schema": SCHEMA, "kind": kind, "count": len(sets), **extra,
           "sets": [s.to_json() for s in sets]}
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def load_sets(text: str, polytope: Polytope | None = None) -> list[RayBasisSet]:
    """Read either a catalog document or a single set object."""
    obj = json.loads(text)
    if isinstance(obj, dict) and "sets" in obj:
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported catalog schema {obj.get('schema')!r}")
        return [RayBasisSet.from_json(x, polytope) for x in obj["sets"]]
    if isinstance(obj, list):
        return [RayBasisSet.from_json(x, polytope) for x in obj]
    return [RayBasisSet.from_json(obj, polytope)]
