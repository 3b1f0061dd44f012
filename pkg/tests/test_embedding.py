"""Crossing tests, embedding validation, and page lower bounds."""

import random

import pytest

from bookembed import (
    BookEmbedding,
    Graph,
    complete_graph,
    crosses,
    crossing_clique_lower_bound,
    density_lower_bound,
    validate_embedding,
)
from bookembed.constructions import build_q, complete_split
from bookembed.embedding import crossing_masks
from bookembed.solver import min_pages_for_order
from util import cycle, random_graph, random_tree


# ---- crossing predicate ----


def test_crosses_basic_cases():
    order = (0, 1, 2, 3)
    assert crosses(order, (0, 2), (1, 3))
    assert not crosses(order, (0, 1), (2, 3))  # disjoint arcs
    assert not crosses(order, (0, 3), (1, 2))  # nested
    assert not crosses(order, (0, 2), (0, 3))  # shared endpoint


def test_crosses_symmetry_and_rotation_invariance():
    rng = random.Random(13)
    n = 8
    for _ in range(60):
        order = list(range(n))
        rng.shuffle(order)
        e = tuple(rng.sample(range(n), 2))
        f = tuple(rng.sample(range(n), 2))
        base = crosses(order, e, f)
        assert base == crosses(order, f, e)
        shift = rng.randrange(n)
        rotated = order[shift:] + order[:shift]
        assert base == crosses(rotated, e, f)
        assert base == crosses(list(reversed(order)), e, f)


def test_crossing_masks_agree_with_crosses():
    rng = random.Random(19)
    for _ in range(15):
        g = random_graph(7, rng)
        order = list(range(7))
        rng.shuffle(order)
        masks = crossing_masks(g.edges, order)
        for i, e in enumerate(g.edges):
            for j, f in enumerate(g.edges):
                if i != j:
                    assert bool(masks[i] >> j & 1) == crosses(order, e, f)


# ---- validation ----


def _emb(g, order, pages, page_count=None):
    pc = max(pages.values(), default=0) if page_count is None else page_count
    return BookEmbedding(order=tuple(order), pages=dict(pages), page_count=pc)


def test_validate_accepts_one_page_cycle():
    g = cycle(4)
    res = validate_embedding(g, _emb(g, range(4), {e: 1 for e in g.edges}))
    assert res.ok and res.pages_used == 1
    assert res.first_conflict is None and res.finding is None


def test_validate_catches_crossing():
    g = complete_graph(4)
    pages = {e: 1 for e in g.edges}
    res = validate_embedding(g, _emb(g, range(4), pages))
    assert not res.ok
    assert res.first_conflict == ((0, 2), (1, 3))
    pages[(1, 3)] = 2
    assert validate_embedding(g, _emb(g, range(4), pages)).ok


def test_validate_structural_findings():
    g = complete_graph(3)
    good = {e: 1 for e in g.edges}
    res = validate_embedding(g, _emb(g, (0, 1, 1), good))
    assert not res.ok and "permutation" in res.finding

    res = validate_embedding(g, _emb(g, range(3), {(0, 1): 1, (1, 2): 1}))
    assert not res.ok and "uncovered" in res.finding

    extra = dict(good)
    extra[(0, 5)] = 1
    res = validate_embedding(g, _emb(g, range(3), extra))
    assert not res.ok and "unknown" in res.finding

    res = validate_embedding(g, _emb(g, range(3), good, page_count=0))
    assert not res.ok and "outside" in res.finding

    bad_page = dict(good)
    bad_page[(0, 1)] = 7
    res = validate_embedding(g, _emb(g, range(3), bad_page, page_count=2))
    assert not res.ok and "outside" in res.finding


def test_embedding_json_round_trip():
    g = complete_graph(4)
    emb = _emb(g, (2, 0, 3, 1), {e: 1 + i % 2 for i, e in enumerate(g.edges)})
    back = BookEmbedding.from_json(emb.to_json())
    assert back.order == emb.order
    assert back.pages == emb.pages
    assert back.page_count == emb.page_count


# ---- lower bounds ----


def test_density_lower_bound_values():
    rng = random.Random(3)
    assert density_lower_bound(random_tree(6, rng)) == 0
    assert density_lower_bound(cycle(5)) == 1
    assert density_lower_bound(complete_graph(5)) == 2
    assert density_lower_bound(Graph(4)) == 0
    assert density_lower_bound(build_q(4).graph) == 3
    with pytest.raises(ValueError):
        density_lower_bound(Graph(0))


def test_crossing_clique_fixed_cases():
    assert crossing_clique_lower_bound(complete_graph(4), range(4)) == 2
    star = Graph(5, [(0, v) for v in range(1, 5)])
    assert crossing_clique_lower_bound(star, range(5)) == 1
    assert crossing_clique_lower_bound(cycle(4), range(4)) == 1
    assert crossing_clique_lower_bound(Graph(3), range(3)) == 0


def test_fan_edges_cross_pairwise():
    g = complete_split(4, 9)
    order = [0] + list(range(4, 13)) + [3, 2, 1]
    fan = [(0, 7), (1, 6), (2, 5), (3, 4)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert crosses(order, fan[i], fan[j])
    assert crossing_clique_lower_bound(g, order) == 4


def test_crossing_clique_never_exceeds_best_assignment():
    rng = random.Random(37)
    for _ in range(20):
        n = rng.randint(4, 7)
        g = random_graph(n, rng)
        order = list(range(n))
        rng.shuffle(order)
        lb = crossing_clique_lower_bound(g, order)
        assert lb <= min_pages_for_order(g, order)
