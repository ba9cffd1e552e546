"""k-cover arithmetic: validity, lopping, basicness, exhaustive enumeration
of basic k-covers, sums, norms, and 2-cover decomposability.

A k-cover is a nonzero assignment of nonnegative integer prices to the
vertices such that every edge's endpoint prices sum to at least k. It is
basic when no single price can be decremented while staying a cover
("lopping").
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BudgetExceededError
from .graph import Graph, adjacency

# Hard cap for k=1 enumeration and default budget for k >= 2, measured as
# the raw (k+1)^n assignment space before pruning.
COVER_N_LIMIT_K1 = 20
DEFAULT_BUDGET = 1 << 24
# Below this assignment-space size the enumeration runs vectorized.
_VECTOR_LIMIT = 1 << 20


@dataclass(frozen=True)
class Cover:
    """Price assignment at a level. prices[i] is the price of vertex i+1."""

    k: int
    prices: tuple

    def price(self, v: int) -> int:
        return self.prices[v - 1]


@dataclass(frozen=True)
class CoverSet:
    """All covers of one level, deduplicated and in lexicographic order."""

    k: int
    covers: tuple

    def __len__(self):
        return len(self.covers)

    def __iter__(self):
        return iter(self.covers)


def norm(c: Cover) -> int:
    """Sum of all prices."""
    return sum(c.prices)


def is_cover(g: Graph, prices, k: int) -> bool:
    """True iff prices is nonzero and every edge sums to at least k."""
    prices = tuple(prices)
    if len(prices) != g.n:
        raise ValueError(f"expected {g.n} prices, got {len(prices)}")
    if any(p < 0 for p in prices):
        raise ValueError("prices must be nonnegative")
    if not any(prices):
        return False
    return all(prices[u - 1] + prices[v - 1] >= k for u, v in g.edges)


def loppable_vertices(g: Graph, c: Cover) -> frozenset:
    """Vertices whose price can drop by 1 with the result still a cover."""
    adj = adjacency(g)
    total = sum(c.prices)
    out = []
    for v in g.vertices():
        pv = c.price(v)
        if pv < 1:
            continue
        if total == 1:
            continue  # decrementing the last positive price leaves zero
        if all(pv - 1 + c.price(u) >= c.k for u in adj[v]):
            out.append(v)
    return frozenset(out)


def is_basic(g: Graph, c: Cover) -> bool:
    return not loppable_vertices(g, c)


def reduce_to_basic(g: Graph, c: Cover):
    """Lop the smallest-labeled loppable vertex until none remains.

    Returns (basic cover, residue) with basic + residue == c pointwise.
    """
    prices = list(c.prices)
    current = Cover(c.k, tuple(prices))
    while True:
        lop = loppable_vertices(g, current)
        if not lop:
            break
        v = min(lop)
        prices[v - 1] -= 1
        current = Cover(c.k, tuple(prices))
    residue = tuple(a - b for a, b in zip(c.prices, current.prices))
    return current, residue


def cover_sum(covers) -> Cover:
    """Pointwise sum; the level is the sum of the levels."""
    covers = list(covers)
    if not covers:
        raise ValueError("cover_sum needs at least one cover")
    size = len(covers[0].prices)
    if any(len(c.prices) != size for c in covers):
        raise ValueError("covers live on different vertex counts")
    prices = tuple(sum(c.prices[i] for c in covers) for i in range(size))
    return Cover(sum(c.k for c in covers), prices)


# ---------------------------------------------------------------------------
# Enumeration of basic k-covers.
#
# Every basic k-cover has all prices in [0, k], and price 0 on isolated
# vertices whenever the graph has an edge: a price above k, or a positive
# price on an isolated vertex, can always be lopped. The search therefore
# ranges over [0, k]^n with isolated vertices pinned to 0.


def enumerate_basic_covers(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> CoverSet:
    if k < 1:
        raise ValueError("enumeration level must be >= 1")
    if not g.edges:
        return CoverSet(k, ())
    return CoverSet(k, tuple(Cover(k, row) for row in _basic_rows(g, k, budget)))


@lru_cache(maxsize=262144)
def _basic_rows(g: Graph, k: int, budget: int):
    if k == 1:
        if g.n > COVER_N_LIMIT_K1:
            raise BudgetExceededError(
                f"basic 1-cover enumeration limited to {COVER_N_LIMIT_K1} vertices, "
                f"got {g.n}"
            )
    else:
        space = (k + 1) ** g.n
        if space > budget:
            raise BudgetExceededError(
                f"basic {k}-cover search space {(k + 1)}^{g.n} = {space} exceeds "
                f"budget {budget}"
            )
    if (k + 1) ** g.n <= _VECTOR_LIMIT:
        return _basic_rows_vectorized(g, k)
    return _basic_rows_dfs(g, k)


@lru_cache(maxsize=16)
def _price_table(n: int, k: int):
    """(k+1)^n x n table of all price rows in lexicographic order."""
    base = k + 1
    rows = base**n
    table = np.empty((rows, n), dtype=np.int8)
    powers = [base ** (n - 1 - i) for i in range(n)]
    chunk = 1 << 16
    for start in range(0, rows, chunk):
        r = np.arange(start, min(start + chunk, rows), dtype=np.int64)
        for i, p in enumerate(powers):
            table[start : start + len(r), i] = (r // p) % base
    table.setflags(write=False)
    return table


def _basic_rows_vectorized(g: Graph, k: int):
    table = _price_table(g.n, k)
    adj = adjacency(g)
    edges = g.sorted_edges()
    eu = np.array([u - 1 for u, _ in edges])
    ev = np.array([v - 1 for _, v in edges])
    sums = table[:, eu].astype(np.int16) + table[:, ev]
    valid = (sums >= k).all(axis=1)
    iso = [v - 1 for v in g.vertices() if not adj[v]]
    if iso:
        valid &= (table[:, iso] == 0).all(axis=1)
    valid &= table.any(axis=1)
    loppable = np.zeros(len(table), dtype=bool)
    for v in g.vertices():
        if not adj[v]:
            continue
        incident = [i for i, (a, b) in enumerate(edges) if v in (a, b)]
        loppable |= (table[:, v - 1] >= 1) & (
            sums[:, incident].min(axis=1) >= k + 1
        )
    rows = table[valid & ~loppable]
    return tuple(tuple(row) for row in rows.tolist())


def _basic_rows_dfs(g: Graph, k: int):
    n = g.n
    adj = adjacency(g)
    earlier = [
        [u - 1 for u in adj[v] if u < v] for v in g.vertices()
    ]
    iso = [not adj[v] for v in g.vertices()]
    prices = [0] * n
    out = []

    def basic(row):
        for v in g.vertices():
            pv = row[v - 1]
            if pv >= 1 and adj[v] and all(
                pv - 1 + row[u - 1] >= k for u in adj[v]
            ):
                return False
        return True

    def rec(i):
        if i == n:
            if any(prices) and basic(prices):
                out.append(tuple(prices))
            return
        if iso[i]:
            prices[i] = 0
            rec(i + 1)
            return
        floor = 0
        for u in earlier[i]:
            floor = max(floor, k - prices[u])
        for p in range(floor, k + 1):
            prices[i] = p
            rec(i + 1)
        prices[i] = 0

    rec(0)
    return tuple(out)


# ---------------------------------------------------------------------------
# 2-cover decomposability


def decompose_2cover(g: Graph, c: Cover):
    """Split a 2-cover into two 1-covers summing to it, or None.

    Deterministic: returns the lexicographically smallest valid first
    component.
    """
    if c.k != 2:
        raise ValueError(f"expected a 2-cover, got level {c.k}")
    if not is_cover(g, c.prices, 2):
        raise ValueError("not a valid 2-cover")
    n = g.n
    adj = adjacency(g)
    earlier = [[u - 1 for u in adj[v] if u < v] for v in g.vertices()]
    total = c.prices
    first = [0] * n

    def rec(i):
        if i == n:
            if not any(first):
                return False
            if not any(t - f for t, f in zip(total, first)):
                return False
            return True
        for x in range(0, total[i] + 1):
            ok = True
            for u in earlier[i]:
                if first[u] + x < 1:
                    ok = False
                    break
                if (total[u] - first[u]) + (total[i] - x) < 1:
                    ok = False
                    break
            if ok:
                first[i] = x
                if rec(i + 1):
                    return True
        first[i] = 0
        return False

    if not rec(0):
        return None
    rest = tuple(t - f for t, f in zip(total, first))
    return Cover(1, tuple(first)), Cover(1, rest)


def indecomposable_2covers(g: Graph, budget: int = DEFAULT_BUDGET) -> CoverSet:
    """Basic 2-covers with no decomposition into two 1-covers."""
    basic2 = enumerate_basic_covers(g, 2, budget)
    kept = tuple(c for c in basic2 if decompose_2cover(g, c) is None)
    return CoverSet(2, kept)


# ---------------------------------------------------------------------------
# Serialization


def cover_to_dict(c: Cover) -> dict:
    return {"k": c.k, "prices": list(c.prices)}


def cover_from_dict(data: dict) -> Cover:
    return Cover(int(data["k"]), tuple(int(p) for p in data["prices"]))
