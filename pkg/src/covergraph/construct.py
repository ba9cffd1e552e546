"""Graph constructions: pendant attachments and test-family generators."""
from __future__ import annotations

import itertools
import random

from .covers import DEFAULT_BUDGET
from .errors import BudgetExceededError
from .graph import Graph, adjacency, reduced

ALL_GRAPHS_LIMIT = 6


def pendant_all(g: Graph):
    """Attach one pendant to every vertex; pendant of v gets label n + v.

    Returns (graph, pendant map).
    """
    pendants = {v: g.n + v for v in g.vertices()}
    edges = set(g.edges) | {(v, pendants[v]) for v in g.vertices()}
    return Graph.of(2 * g.n, edges), pendants


def pendant_g01_isolated(g: Graph, budget: int = DEFAULT_BUDGET) -> Graph:
    """Attach pendants exactly at the vertices isolated in the derived graph."""
    from .classify import _g01_edges

    kept = _g01_edges(g, "cross-check", budget)
    adj = adjacency(g)
    touched = {v for e in kept for v in e}
    bare = sorted(v for v in g.vertices() if adj[v] and v not in touched)
    edges = set(g.edges)
    for offset, v in enumerate(bare, start=1):
        edges.add((v, g.n + offset))
    return Graph.of(g.n + len(bare), edges)


# ---------------------------------------------------------------------------
# Families


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.of(n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.of(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.of(n, itertools.combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    edges = [(u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)]
    return Graph.of(a + b, edges)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        e
        for e in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < edge_probability
    ]
    return Graph.of(n, edges)


def random_bipartite(a: int, b: int, edge_probability: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, a + v)
        for u in range(1, a + 1)
        for v in range(1, b + 1)
        if rng.random() < edge_probability
    ]
    return Graph.of(a + b, edges)


def all_graphs(n: int):
    """Every labeled simple graph on n vertices, in binary counting order
    over the lexicographically sorted vertex pairs."""
    if n > ALL_GRAPHS_LIMIT:
        raise BudgetExceededError(
            f"exhaustive graph iteration limited to {ALL_GRAPHS_LIMIT} vertices"
        )
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = frozenset(
            pairs[i] for i in range(len(pairs)) if mask & (1 << i)
        )
        yield Graph(n, edges)
