"""Undirected simple graphs with dense integer vertex ids, plus k-tree machinery.

A k-tree is either the complete graph on k+1 vertices or a k-tree with one more
vertex whose neighborhood is a k-clique of the rest.  Membership is witnessed by
a `KTreeCertificate`: a base clique and an ordered list of simplicial additions
that replays to the graph exactly.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import InvalidCertificate, InvalidSize, NotAClique


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices 0..n-1 with optional string labels."""

    __slots__ = ("n", "edges", "labels", "_adj", "_edge_set")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            seen.add(_norm_edge(u, v))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._edge_set = frozenset(self.edges)
        lab = dict(labels) if labels else {}
        for v in lab:
            if not (0 <= v < n):
                raise ValueError(f"label on unknown vertex {v}")
        self.labels: dict[int, str] = lab
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    # ---- basic queries ----

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edge_set

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def without_edge(self, u: int, v: int) -> "Graph":
        """Copy with one edge removed (no-op if the edge is absent)."""
        e = _norm_edge(u, v)
        return Graph(self.n, (f for f in self.edges if f != e), self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._edge_set == other._edge_set
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # ---- serialization ----

    def to_text(self) -> str:
        """Plain text: `n m` header, one `u v` line per edge, label trailer lines."""
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        lines.extend(f"# label {v} {self.labels[v]}" for v in sorted(self.labels))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        header: tuple[int, int] | None = None
        edges: list[tuple[int, int]] = []
        labels: dict[int, str] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line.split()
                if len(parts) >= 4 and parts[1] == "label":
                    labels[int(parts[2])] = parts[3]
                continue
            nums = line.split()
            if header is None:
                if len(nums) != 2:
                    raise ValueError(f"bad header line: {raw!r}")
                header = (int(nums[0]), int(nums[1]))
            else:
                if len(nums) != 2:
                    raise ValueError(f"bad edge line: {raw!r}")
                edges.append((int(nums[0]), int(nums[1])))
        if header is None:
            raise ValueError("empty graph text")
        n, m = header
        if len(edges) != m:
            raise ValueError(f"header says {m} edges, found {len(edges)}")
        return cls(n, edges, labels)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "labels": {str(v): self.labels[v] for v in sorted(self.labels)},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        labels = {int(v): role for v, role in data.get("labels", {}).items()}
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]], labels)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_dict(json.loads(text))


# ---- construction primitives ----


def complete_graph(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, combinations(range(n), 2))


def add_simplicial(g: Graph, clique: Iterable[int], label: str | None = None) -> tuple[Graph, int]:
    """Add a new vertex adjacent to exactly `clique`; returns (graph, new id).

    Raises NotAClique unless the attachment set is pairwise adjacent in g.
    """
    cs = sorted(set(clique))
    if not cs:
        raise NotAClique("attachment clique is empty")
    for v in cs:
        if not (0 <= v < g.n):
            raise ValueError(f"attachment vertex {v} not in graph")
    for a, b in combinations(cs, 2):
        if not g.has_edge(a, b):
            raise NotAClique(f"attachment set {cs} misses edge ({a}, {b})")
    new = g.n
    edges = list(g.edges) + [(v, new) for v in cs]
    labels = dict(g.labels)
    if label is not None:
        labels[new] = label
    return Graph(g.n + 1, edges, labels), new


@dataclass(frozen=True)
class KTreeCertificate:
    """Witness that a graph is a k-tree.

    `base_clique` lists the k+1 starting vertices; each entry of `additions`
    is (vertex, attachment clique) in construction order.  Replaying the
    certificate rebuilds the graph edge for edge.
    """

    k: int
    base_clique: tuple[int, ...]
    additions: tuple[tuple[int, frozenset[int]], ...]

    def vertex_count(self) -> int:
        return len(self.base_clique) + len(self.additions)

    def replay(self) -> Graph:
        """Rebuild the graph this certificate describes.

        Raises InvalidCertificate if any step is malformed (wrong clique size,
        unknown attachment vertex, attachment set not a clique so far, or a
        non-dense vertex id space).
        """
        k = self.k
        if k < 1:
            raise InvalidCertificate("k must be positive")
        if len(self.base_clique) != k + 1 or len(set(self.base_clique)) != k + 1:
            raise InvalidCertificate("base clique must have k+1 distinct vertices")
        placed = set(self.base_clique)
        edges: set[tuple[int, int]] = {
            _norm_edge(a, b) for a, b in combinations(self.base_clique, 2)
        }
        for v, clique in self.additions:
            if v in placed:
                raise InvalidCertificate(f"vertex {v} added twice")
            if len(clique) != k:
                raise InvalidCertificate(f"attachment clique for {v} must have size {k}")
            if not clique <= placed:
                raise InvalidCertificate(f"attachment clique for {v} uses unplaced vertices")
            for a, b in combinations(sorted(clique), 2):
                if _norm_edge(a, b) not in edges:
                    raise InvalidCertificate(
                        f"attachment set for {v} is not a clique: missing ({a}, {b})"
                    )
            placed.add(v)
            edges.update(_norm_edge(v, u) for u in clique)
        n = len(placed)
        if placed != set(range(n)):
            raise InvalidCertificate("certificate vertex ids are not dense 0..n-1")
        return Graph(n, edges)

    def is_valid_for(self, g: Graph) -> bool:
        """True iff replaying reproduces g's vertex set and edges exactly."""
        try:
            h = self.replay()
        except InvalidCertificate:
            return False
        return h.n == g.n and h._edge_set == g._edge_set


def ktree_edge_count(n: int, k: int) -> int:
    """Edge count of any k-tree on n vertices: k*n - k*(k+1)/2."""
    if k < 1:
        raise InvalidSize("k must be positive")
    if n < k + 1:
        raise InvalidSize(f"a {k}-tree needs at least {k + 1} vertices, got {n}")
    return k * n - k * (k + 1) // 2


def is_k_tree(g: Graph, k: int) -> KTreeCertificate | None:
    """Recognize k-trees by greedy simplicial elimination; None if g is not one.

    Repeatedly removes the lowest-id vertex whose degree is exactly k and whose
    neighborhood is a clique, until k+1 vertices remain; succeeds iff those
    form a complete graph.  Success is self-certifying: the reversed removal
    sequence is returned as a replayable certificate.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    if n < k + 1:
        return None
    if g.m != ktree_edge_count(n, k):
        return None
    if n == k + 1:
        return KTreeCertificate(k, tuple(range(n)), ())

    adj: list[set[int]] = [set(g.neighbors(v)) for v in range(n)]
    removed = [False] * n
    heap = [v for v in range(n) if len(adj[v]) == k]
    heapq.heapify(heap)
    removals: list[tuple[int, frozenset[int]]] = []
    alive = n
    while alive > k + 1:
        pick = -1
        while heap:
            v = heapq.heappop(heap)
            if removed[v] or len(adj[v]) != k:
                continue
            nb = sorted(adj[v])
            # degree never increases, so a degree-k vertex with a non-clique
            # neighborhood can be dropped for good
            if all(b in adj[a] for a, b in combinations(nb, 2)):
                pick = v
                break
        if pick < 0:
            return None
        nbrs = frozenset(adj[pick])
        removals.append((pick, nbrs))
        removed[pick] = True
        adj[pick] = set()
        alive -= 1
        for u in nbrs:
            adj[u].discard(pick)
            if not removed[u] and len(adj[u]) == k:
                heapq.heappush(heap, u)

    rest = sorted(v for v in range(n) if not removed[v])
    for a, b in combinations(rest, 2):
        if b not in adj[a]:
            return None
    return KTreeCertificate(k=k, base_clique=tuple(rest), additions=tuple(reversed(removals)))
