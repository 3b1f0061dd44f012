"""Exact book thickness for small graphs.

Searches circular orders depth-first, filling positions 1..n-1 left to right
with vertex 0 pinned at position 0 and reflected orders skipped, so exactly
(n-1)!/2 orders are considered.  Once both endpoints of an edge are placed
its crossings with other completed edges are final, so every node carries a
partial crossing graph that only grows toward the leaves; a prefix is
abandoned as soon as that partial graph already needs as many pages as the
best embedding found so far.  At a leaf the order's exact page count is the
chromatic number of its crossing graph, computed by backtracking coloring
seeded with a maximal pairwise-crossing set.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .embedding import (
    BookEmbedding,
    _greedy_clique_mask,
    crossing_masks,
    density_lower_bound,
)
from .graph import Graph
from .heuristics import first_fit_pages


class SolverStatus(Enum):
    EXACT = "exact"
    LOWER_BOUND_ONLY = "lower-bound-only"
    TIMEOUT = "timeout"


@dataclass
class SolverOptions:
    max_pages: int | None = None  # stop distinguishing values above this
    time_budget: float | None = None  # seconds of wall clock
    node_limit: int | None = None  # search nodes (placements)
    threads: int = 1  # position-1 branches searched concurrently


@dataclass
class SolverReport:
    status: SolverStatus
    book_thickness: int  # exact when status is EXACT, else best upper bound
    lower_bound: int  # always <= true book thickness
    witness: BookEmbedding | None
    nodes_explored: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "status": self.status.value,
            "book_thickness": self.book_thickness,
            "lower_bound": self.lower_bound,
            "nodes_explored": self.nodes_explored,
            "elapsed": self.elapsed,
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


# ---- coloring engine ----


def _try_color(masks: list[int], p: int, seed: Sequence[int]) -> list[int] | None:
    """Proper p-coloring of the conflict graph, or None.  Backtracking with
    most-saturated-first selection; `seed` (a clique) gets colors 0,1,2,...
    fixed up front, and fresh colors are only opened one at a time."""
    m = len(masks)
    if m == 0:
        return []
    if p <= 0 or len(seed) > p:
        return None
    color = [-1] * m
    forb = [0] * m
    deg = [mk.bit_count() for mk in masks]
    full = (1 << p) - 1

    def place(v: int, c: int) -> list[int]:
        color[v] = c
        bit = 1 << c
        changed = []
        mk = masks[v]
        while mk:
            u = (mk & -mk).bit_length() - 1
            mk &= mk - 1
            if color[u] < 0 and not forb[u] & bit:
                forb[u] |= bit
                changed.append(u)
        return changed

    def unplace(v: int, c: int, changed: list[int]) -> None:
        color[v] = -1
        bit = ~(1 << c)
        for u in changed:
            forb[u] &= bit

    for i, v in enumerate(seed):
        place(v, i)

    def rec(n_colored: int, max_used: int) -> bool:
        if n_colored == m:
            return True
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(m):
            if color[v] < 0:
                key = (forb[v].bit_count(), deg[v], -v)
                if key > best_key:
                    best_key = key
                    best_v = v
        v = best_v
        allowed = full & ~forb[v]
        cap = max_used + 1
        while allowed:
            c = (allowed & -allowed).bit_length() - 1
            if c > cap:
                break
            allowed &= allowed - 1
            changed = place(v, c)
            if rec(n_colored + 1, max_used if c <= max_used else c):
                return True
            unplace(v, c, changed)
        return False

    if rec(len(seed), len(seed) - 1):
        return color
    return None


def _bipartite(masks: list[int]) -> bool:
    m = len(masks)
    side = [-1] * m
    for s in range(m):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            mk = masks[v]
            while mk:
                u = (mk & -mk).bit_length() - 1
                mk &= mk - 1
                if side[u] < 0:
                    side[u] = side[v] ^ 1
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def _clique_bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def min_pages_for_order(g: Graph, order: Sequence[int]) -> int:
    """Fewest pages any assignment needs under this fixed circular order:
    the chromatic number of the order's crossing graph.  Exact."""
    edges = list(g.edges)
    if not edges:
        return 0
    masks = crossing_masks(edges, order)
    seed = _clique_bits(_greedy_clique_mask(masks, (1 << len(edges)) - 1))
    p = max(1, len(seed))
    while True:
        if _try_color(masks, p, seed) is not None:
            return p
        p += 1


# ---- order search ----


class _Shared:
    """Best-so-far state; shared across branch workers."""

    __slots__ = (
        "lock", "best", "witness", "lb", "stop", "budget_hit",
        "nodes", "deadline", "node_limit",
    )

    def __init__(self, best: int, witness: BookEmbedding, lb: int,
                 deadline: float | None, node_limit: int | None) -> None:
        self.lock = threading.Lock()
        self.best = best
        self.witness = witness
        self.lb = lb
        self.stop = best <= lb
        self.budget_hit = False
        self.nodes = 0
        self.deadline = deadline
        self.node_limit = node_limit

    def cap(self, max_pages: int | None) -> int:
        # prune prefixes that already need at least this many pages
        return self.best if max_pages is None else min(self.best, max_pages + 1)

    def offer(self, pages: int, witness: BookEmbedding) -> None:
        with self.lock:
            if pages < self.best:
                self.best = pages
                self.witness = witness
                if pages <= self.lb:
                    self.stop = True

    def hit_budget(self) -> None:
        with self.lock:
            self.budget_hit = True
            self.stop = True


def _run_branch(g: Graph, first: int, shared: _Shared, max_pages: int | None,
                batch_nodes: bool) -> None:
    n = g.n
    neigh = [sorted(g.neighbors(v)) for v in range(n)]
    order = [0] * n
    pos = [-1] * n
    order[0] = 0
    pos[0] = 0
    edges: list[tuple[int, int]] = []
    ivs: list[tuple[int, int]] = []
    masks: list[int] = []
    local = 0  # nodes not yet flushed to shared

    def flush() -> None:
        nonlocal local
        if local:
            with shared.lock:
                shared.nodes += local
            local = 0

    def over_budget() -> bool:
        if shared.node_limit is not None:
            flush()
            if shared.nodes >= shared.node_limit:
                return True
        if shared.deadline is not None and time.monotonic() >= shared.deadline:
            return True
        return False

    def place(v: int, d: int) -> int:
        order[d] = v
        pos[v] = d
        added = 0
        for u in neigh[v]:
            a = pos[u]
            if 0 <= a < d:
                t = len(edges)
                mk = 0
                for j in range(t):
                    aj, bj = ivs[j]
                    if aj < a < bj < d or a < aj < d < bj:
                        mk |= 1 << j
                        masks[j] |= 1 << t
                edges.append((u, v) if u < v else (v, u))
                ivs.append((a, d))
                masks.append(mk)
                added += 1
        return added

    def unplace(v: int, added: int) -> None:
        pos[v] = -1
        for _ in range(added):
            t = len(edges) - 1
            mk = masks.pop()
            edges.pop()
            ivs.pop()
            bit = ~(1 << t)
            while mk:
                j = (mk & -mk).bit_length() - 1
                mk &= mk - 1
                masks[j] &= bit

    def pruned(cap: int) -> bool:
        t = cap - 1
        if t <= 0:
            return bool(edges)
        if all(mk == 0 for mk in masks):
            return False
        if t == 1:
            return True
        if t == 2:
            return not _bipartite(masks)
        clique = _greedy_clique_mask(masks, (1 << len(masks)) - 1)
        return clique.bit_count() > t

    def leaf() -> None:
        if n >= 3 and order[1] > order[n - 1]:
            return  # reflected twin of an order already counted
        cap = shared.cap(max_pages)
        clique_mask = _greedy_clique_mask(masks, (1 << len(masks)) - 1)
        seed = _clique_bits(clique_mask)
        for p in range(max(1, len(seed)), cap):
            colors = _try_color(masks, p, seed)
            if colors is not None:
                pages = {e: colors[i] + 1 for i, e in enumerate(edges)}
                shared.offer(p, BookEmbedding(tuple(order), pages, p))
                return

    def dfs(d: int) -> None:
        nonlocal local
        for v in range(1, n):
            if pos[v] >= 0:
                continue
            if shared.stop:
                return
            added = place(v, d)
            local += 1
            if not batch_nodes or local >= 64:
                flush()
            if (local & 63) == 0 and over_budget():
                shared.hit_budget()
            if not pruned(shared.cap(max_pages)):
                if d == n - 1:
                    leaf()
                else:
                    dfs(d + 1)
            unplace(v, added)

    added0 = place(first, 1)
    local += 1
    if not pruned(shared.cap(max_pages)):
        if n == 2:
            pass  # single order, incumbent already covers it
        elif n - 1 == 1:
            leaf()
        else:
            dfs(2)
    unplace(first, added0)
    flush()


def book_thickness_exact(g: Graph, opts: SolverOptions | None = None) -> SolverReport:
    """Exact book thickness by exhaustive order search with pruning.

    Budgets never raise: blowing the time or node budget yields status
    TIMEOUT with the best bounds found.  With max_pages set, a graph needing
    more pages comes back LOWER_BOUND_ONLY with lower_bound = max_pages + 1.
    With identical inputs and budgets and threads=1 the report is
    deterministic, and the book_thickness value is thread-count invariant.
    """
    opts = opts or SolverOptions()
    start = time.monotonic()
    n, m = g.n, g.m

    if m == 0:
        emb = BookEmbedding(tuple(range(n)), {}, 0)
        return SolverReport(SolverStatus.EXACT, 0, 0, emb, 0, time.monotonic() - start)

    lb = max(1, density_lower_bound(g))
    incumbent = first_fit_pages(g, tuple(range(n)))
    deadline = start + opts.time_budget if opts.time_budget is not None else None
    shared = _Shared(incumbent.page_count, incumbent, lb, deadline, opts.node_limit)

    if n > 2 and not shared.stop:
        branches = list(range(1, n))
        if opts.threads <= 1:
            for first in branches:
                if shared.stop:
                    break
                _run_branch(g, first, shared, opts.max_pages, batch_nodes=False)
        else:
            with ThreadPoolExecutor(max_workers=opts.threads) as pool:
                for _ in pool.map(
                    lambda f: _run_branch(g, f, shared, opts.max_pages, batch_nodes=True),
                    branches,
                ):
                    pass

    best = shared.best
    elapsed = time.monotonic() - start
    if shared.budget_hit and best > lb:
        status, lower = SolverStatus.TIMEOUT, lb
    elif opts.max_pages is not None and best > opts.max_pages:
        status, lower = SolverStatus.LOWER_BOUND_ONLY, max(opts.max_pages + 1, lb)
    else:
        status, lower = SolverStatus.EXACT, best
    return SolverReport(status, best, lower, shared.witness, shared.nodes, elapsed)


def is_outerplanar(g: Graph) -> bool:
    """True iff the graph fits on one page (edgeless graphs count)."""
    return book_thickness_exact(g).book_thickness <= 1
