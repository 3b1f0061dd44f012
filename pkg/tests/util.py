"""Small helpers shared across test modules."""

import random

from bookembed import Graph


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph(n, [(rng.randrange(0, v), v) for v in range(1, n)])


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
