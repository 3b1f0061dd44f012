"""Book embeddings: a circular vertex order plus a page per edge.

Two edges on the same page conflict when their chords cross, i.e. when
exactly one endpoint of one edge lies on the open arc strictly between the
other edge's endpoints.  Cutting the circle anywhere turns that into a plain
interval-interleaving test, which is what everything below uses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, _norm_edge


@dataclass(frozen=True, eq=True)
class BookEmbedding:
    """Circular order, edge -> page map (pages numbered 1..page_count)."""

    order: tuple[int, ...]
    pages: dict[tuple[int, int], int]
    page_count: int

    def pages_used(self) -> int:
        return len(set(self.pages.values()))

    def to_json_dict(self) -> dict:
        return {
            "order": list(self.order),
            "pages": [[u, v, p] for (u, v), p in sorted(self.pages.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BookEmbedding":
        pages = {_norm_edge(u, v): p for u, v, p in data["pages"]}
        page_count = max(pages.values(), default=0)
        return cls(order=tuple(data["order"]), pages=pages, page_count=page_count)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "BookEmbedding":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class ValidationResult:
    """ok iff there is no finding and no same-page crossing.

    `finding` reports structural problems (bad order, wrong edge coverage,
    page numbers out of range); `first_conflict` reports the first same-page
    crossing pair met in a deterministic sweep.
    """

    ok: bool
    pages_used: int
    first_conflict: tuple[tuple[int, int], tuple[int, int]] | None = None
    finding: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "pages_used": self.pages_used,
            "first_conflict": [list(e) for e in self.first_conflict]
            if self.first_conflict
            else None,
            "finding": self.finding,
        }


def crosses(order: Sequence[int], e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True iff chords e and f cross when the vertices sit on a circle in
    this order.  Edges sharing an endpoint never cross."""
    if len({e[0], e[1], f[0], f[1]}) < 4:
        return False
    pos = {v: i for i, v in enumerate(order)}
    a1, b1 = sorted((pos[e[0]], pos[e[1]]))
    a2, b2 = sorted((pos[f[0]], pos[f[1]]))
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def _intervals(edges: Sequence[tuple[int, int]], pos: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for u, v in edges:
        a, b = pos[u], pos[v]
        out.append((a, b) if a < b else (b, a))
    return out


def _interleave(i1: tuple[int, int], i2: tuple[int, int]) -> bool:
    a1, b1 = i1
    a2, b2 = i2
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def crossing_masks(edges: Sequence[tuple[int, int]], order: Sequence[int]) -> list[int]:
    """Crossing graph over `edges` as adjacency bitmasks, under `order`."""
    pos = [0] * (max(order) + 1 if order else 0)
    for i, v in enumerate(order):
        pos[v] = i
    iv = _intervals(edges, pos)
    m = len(edges)
    masks = [0] * m
    for i in range(m):
        a1, b1 = iv[i]
        for j in range(i + 1, m):
            a2, b2 = iv[j]
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def validate_embedding(g: Graph, emb: BookEmbedding) -> ValidationResult:
    """Check an embedding against its graph; never raises.

    Structural problems (order not a permutation of the vertex set, page map
    not covering exactly the edge set, page numbers outside 1..page_count)
    come back as ok=False with a `finding`.  Otherwise same-page pairs are
    swept page by page in sorted edge order and the first crossing pair, if
    any, is reported.
    """
    used = len(set(emb.pages.values()))
    if sorted(emb.order) != list(range(g.n)):
        return ValidationResult(False, used, finding="order is not a permutation of the vertices")
    got = {_norm_edge(u, v) for u, v in emb.pages}
    if got != set(g.edges):
        missing = sorted(set(g.edges) - got)
        extra = sorted(got - set(g.edges))
        detail = []
        if missing:
            detail.append(f"uncovered edges {missing[:3]}")
        if extra:
            detail.append(f"unknown edges {extra[:3]}")
        return ValidationResult(False, used, finding="; ".join(detail))
    for e, p in sorted(emb.pages.items()):
        if not (1 <= p <= emb.page_count):
            return ValidationResult(
                False, used, finding=f"edge {e} on page {p}, outside 1..{emb.page_count}"
            )

    pos = [0] * g.n
    for i, v in enumerate(emb.order):
        pos[v] = i
    by_page: dict[int, list[tuple[int, int]]] = {}
    for e in sorted(emb.pages):
        by_page.setdefault(emb.pages[e], []).append(e)
    for p in sorted(by_page):
        page_edges = by_page[p]
        iv = _intervals(page_edges, pos)
        for i in range(len(page_edges)):
            for j in range(i + 1, len(page_edges)):
                if _interleave(iv[i], iv[j]):
                    return ValidationResult(
                        False, used, first_conflict=(page_edges[i], page_edges[j])
                    )
    return ValidationResult(True, used)


def density_lower_bound(g: Graph) -> int:
    """Smallest p >= 0 with |E| < (p+1)|V|; every embedding needs this many
    pages because a single page holds under |V| edges of an n-vertex graph."""
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    return -(-(g.m + 1) // g.n) - 1


def _greedy_clique_mask(masks: list[int], universe: int) -> int:
    # grow from the highest-degree vertex, always adding the candidate with
    # most neighbors inside the shrinking candidate set; ties to lowest id
    clique = 0
    cand = universe
    while cand:
        best_v, best_deg = -1, -1
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            d = (masks[v] & cand).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        clique |= 1 << best_v
        cand &= masks[best_v]
    return clique


def _max_clique_size(masks: list[int], m: int) -> int:
    # branch and bound over candidate bitmasks; exact
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            sub = cand & masks[v]
            if sub:
                expand(sub, size + 1)
            elif size + 1 > best:
                best = size + 1

    if m:
        expand((1 << m) - 1, 0)
    return best


def crossing_clique_lower_bound(g: Graph, order: Sequence[int]) -> int:
    """Largest set of pairwise-crossing edges under this order: a lower bound
    on the pages any assignment needs *for this order*.

    Exact by branch and bound up to 64 edges, greedy beyond that.
    """
    edges = list(g.edges)
    if not edges:
        return 0
    masks = crossing_masks(edges, order)
    if len(edges) <= 64:
        return _max_clique_size(masks, len(edges))
    return _greedy_clique_mask(masks, (1 << len(edges)) - 1).bit_count()
