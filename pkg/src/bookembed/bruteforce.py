"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is written independently of the solver and embedding modules:
crossings are decided by literally counting endpoints inside an arc of the
order, page assignments are enumerated by plain backtracking in static edge
order, and k-trees are checked against the recursive definition.  Slow on
purpose; only meant for small inputs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .graph import Graph


# ---- book thickness by exhaustive search ----


def _arc_crossing(order: tuple[int, ...], e: tuple[int, int], f: tuple[int, int]) -> bool:
    # e and f cross iff exactly one endpoint of f lies on the open arc of the
    # order strictly between e's endpoints (walking clockwise)
    if len({e[0], e[1], f[0], f[1]}) < 4:
        return False
    n = len(order)
    idx = order.index(e[0])
    inside = set()
    j = (idx + 1) % n
    while order[j] != e[1]:
        inside.add(order[j])
        j = (j + 1) % n
    return (f[0] in inside) + (f[1] in inside) == 1


def _crossing_pairs(order: tuple[int, ...], edges: list[tuple[int, int]]) -> list[list[int]]:
    m = len(edges)
    adj: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if _arc_crossing(order, edges[i], edges[j]):
                adj[i].append(j)
                adj[j].append(i)
    return adj

def _assignable(adj: list[list[int]], pages: int) -> bool:
    # try every page for every edge in static order, pruning on first conflict
    m = len(adj)
    assign = [0] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        for p in range(1, pages + 1):
            if all(assign[j] != p for j in adj[i] if j < i):
                assign[i] = p
                if rec(i + 1):
                    return True
        assign[i] = 0
        return False

    return rec(0)


def canonical_orders(n: int):
    """All circular orders up to rotation and reflection: (n-1)!/2 of them.

    Vertex 0 is pinned to position 0; reflections are skipped by requiring the
    vertex after 0 to be smaller than the vertex before 0.
    """
    if n <= 2:
        yield tuple(range(n))
        return
    for rest in permutations(range(1, n)):
        if rest[0] < rest[-1]:
            yield (0,) + rest


def book_thickness_brute(g: Graph, page_cap: int = 4) -> int:
    """Minimum pages over every order and every page assignment, by enumeration.

    Raises ValueError if the answer would exceed page_cap.  page_cap=4 is
    enough for every graph on at most 8 vertices.
    """
    edges = list(g.edges)
    if not edges:
        return 0
    orders = list(canonical_orders(g.n))
    adjs = [_crossing_pairs(o, edges) for o in orders]
    for p in range(1, page_cap + 1):
        for adj in adjs:
            if _assignable(adj, p):
                return p
    raise ValueError(f"book thickness exceeds page cap {page_cap}")


# ---- k-trees by the recursive definition ----


def is_k_tree_brute(g: Graph, k: int) -> bool:
    """Recursive definition check: K_{k+1}, or some k-simplicial vertex whose
    removal leaves a k-tree.  Exponential; fine for n <= 8."""
    verts = frozenset(range(g.n))
    adj = {v: set(g.neighbors(v)) for v in verts}
    memo: dict[frozenset[int], bool] = {}

    def clique(vs: list[int]) -> bool:
        return all(b in adj[a] for a, b in combinations(vs, 2))

    def rec(live: frozenset[int]) -> bool:
        if live in memo:
            return memo[live]
        if len(live) == k + 1:
            out = clique(sorted(live))
        else:
            out = False
            for v in sorted(live):
                nb = [u for u in adj[v] if u in live]
                if len(nb) == k and clique(nb):
                    if rec(live - {v}):
                        out = True
                        break
        memo[live] = out
        return out

    if g.n < k + 1:
        return False
    return rec(verts)


# ---- small-graph enumeration and sampling ----


def _is_connected_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def enumerate_graphs(n: int, connected_only: bool = True) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (n <= 7 is practical).

    Walks every edge mask once; each unseen mask donates its whole relabeling
    orbit to the seen set, so the cost is orbits x n! rather than masks x n!.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for perm in permutations(range(n)):
        perms.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    reps: list[Graph] = []
    seen = bytearray(1 << len(pairs))
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        for remap in perms:
            img = 0
            rest = mask
            while rest:
                i = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                img |= 1 << remap[i]
            seen[img] = 1
        if connected_only and not _is_connected_mask(n, mask, pairs):
            continue
        reps.append(Graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1)))
    return reps


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    pairs = list(combinations(range(n), 2))
    while True:
        mask = 0
        for i in range(len(pairs)):
            if rng.random() < p:
                mask |= 1 << i
        if _is_connected_mask(n, mask, pairs):
            return Graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


# ---- equivalence suites ----


def oracle_suite(max_n: int = 5, samples: int = 50, seed: int = 0) -> dict:
    """Compare the exact solver and the k-tree recognizer against brute force.

    Exhaustive over connected graphs up to max_n vertices (up to isomorphism),
    plus `samples` random connected graphs on max_n + 1 vertices.  Returns a
    summary dict; mismatch lists are empty iff everything agrees.
    """
    from .graph import is_k_tree
    from .solver import book_thickness_exact

    bt_checked = 0
    bt_mismatches: list[dict] = []
    kt_checked = 0
    kt_mismatches: list[dict] = []

    def check_bt(g: Graph) -> None:
        nonlocal bt_checked
        bt_checked += 1
        want = book_thickness_brute(g)
        got = book_thickness_exact(g).book_thickness
        if got != want:
            bt_mismatches.append({"n": g.n, "edges": list(g.edges), "brute": want, "solver": got})

    def check_ktree(g: Graph) -> None:
        nonlocal kt_checked
        for k in range(1, min(5, max(2, g.n))):
            kt_checked += 1
            cert = is_k_tree(g, k)
            want = is_k_tree_brute(g, k)
            got = cert is not None
            if got != want or (cert is not None and not cert.is_valid_for(g)):
                kt_mismatches.append({"n": g.n, "edges": list(g.edges), "k": k,
                                      "brute": want, "recognizer": got})

    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n, connected_only=True):
            check_bt(g)
            check_ktree(g)
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_connected_graph(max_n + 1, rng)
        check_bt(g)
        check_ktree(g)

    return {
        "bt_checked": bt_checked,
        "bt_mismatches": bt_mismatches,
        "ktree_checked": kt_checked,
        "ktree_mismatches": kt_mismatches,
        "ok": not bt_mismatches and not kt_mismatches,
    }
