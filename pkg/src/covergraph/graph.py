"""Simple undirected graphs on vertices 1..n: parsing, serialization and
structural queries (components, bipartitions, complete-bipartite tests,
desk-scale perfect matching)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import GraphParseError

Edge = tuple[int, int]
Matching = frozenset  # of normalized edges, pairwise disjoint

# Exact perfect-matching search is exponential; refuse anything bigger.
MATCHING_VERTEX_LIMIT = 24


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as (u, v) with u < v."""

    n: int
    edges: frozenset

    @staticmethod
    def of(n: int, pairs) -> "Graph":
        """Build a graph from unordered vertex pairs, validating them."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            e = _norm_edge(u, v)
            if e in edges:
                raise ValueError(f"duplicate edge {e}")
            edges.add(e)
        return Graph(n, frozenset(edges))

    def vertices(self):
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)


@lru_cache(maxsize=65536)
def adjacency(g: Graph) -> dict:
    """vertex -> frozenset of neighbors."""
    nbrs = {v: set() for v in g.vertices()}
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return {v: frozenset(s) for v, s in nbrs.items()}


def isolated_vertices(g: Graph) -> frozenset:
    adj = adjacency(g)
    return frozenset(v for v in g.vertices() if not adj[v])


# ---------------------------------------------------------------------------
# Parsing and serialization


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown graph format: {fmt!r}")


def _parse_edge_list(text: str) -> Graph:
    n = None
    pairs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate header")
            if len(tokens) != 2:
                raise GraphParseError(f"line {lineno}: expected 'n <count>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: vertex count {tokens[1]!r} is not an integer"
                ) from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before 'n' header")
            if len(tokens) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: non-integer vertex label"
                ) from None
            if u == v:
                raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(
                    f"line {lineno}: vertex label out of range 1..{n}"
                )
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphParseError(f"line {lineno}: duplicate edge {e}")
            seen.add(e)
            pairs.append(e)
        else:
            raise GraphParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph(n, frozenset(pairs))


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphParseError('expected an object with "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphParseError('"n" must be a nonnegative integer')
    seen = set()
    pairs = []
    for entry in data["edges"]:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(x, int) for x in entry)
        ):
            raise GraphParseError(f"bad edge entry {entry!r}")
        u, v = entry
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"edge ({u},{v}) out of range 1..{n}")
        e = _norm_edge(u, v)
        if e in seen:
            raise GraphParseError(f"duplicate edge {e}")
        seen.add(e)
        pairs.append(e)
    return Graph(n, frozenset(pairs))


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        lines = [f"n {g.n}"]
        lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})
    raise ValueError(f"unknown graph format: {fmt!r}")


# ---------------------------------------------------------------------------
# Structural queries


def reduced(g: Graph) -> tuple:
    """Delete isolated vertices and relabel contiguously.

    Returns (graph, relabeling) where relabeling maps old labels to new ones.
    """
    keep = sorted(v for v in g.vertices() if adjacency(g)[v])
    relabel = {old: new for new, old in enumerate(keep, start=1)}
    edges = frozenset((relabel[u], relabel[v]) for u, v in g.edges)
    return Graph(len(keep), edges), relabel


def connected_components(g: Graph) -> list:
    """Partition of all vertices into components, ordered by smallest member."""
    adj = adjacency(g)
    unseen = set(g.vertices())
    parts = []
    for start in g.vertices():
        if start not in unseen:
            continue
        comp = set()
        stack = [start]
        unseen.discard(start)
        while stack:
            v = stack.pop()
            comp.add(v)
            for u in adj[v]:
                if u in unseen:
                    unseen.discard(u)
                    stack.append(u)
        parts.append(frozenset(comp))
    parts.sort(key=min)
    return parts


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset
    side_b: frozenset


def _two_color(adj, comp):
    """Proper 2-coloring of one component; None if it has an odd cycle.

    The side containing the smallest vertex comes first.
    """
    start = min(comp)
    color = {start: 0}
    queue = [start]
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                return None
    return (
        frozenset(v for v in comp if color[v] == 0),
        frozenset(v for v in comp if color[v] == 1),
    )


def bipartition(g: Graph):
    """Bipartition of the non-isolated vertices, or None if g has an odd cycle.

    Per component, the side containing the smallest vertex label goes to side_a.
    """
    adj = adjacency(g)
    side_a, side_b = set(), set()
    for comp in connected_components(g):
        if len(comp) == 1 and not adj[min(comp)]:
            continue
        colored = _two_color(adj, comp)
        if colored is None:
            return None
        side_a |= colored[0]
        side_b |= colored[1]
    return Bipartition(frozenset(side_a), frozenset(side_b))


def is_complete_bipartite(g: Graph, component) :
    """(a, b) with a <= b if the component induces a K_{a,b}, else None.

    A single vertex is not a K_{a,b}.
    """
    comp = frozenset(component)
    if len(comp) < 2:
        return None
    adj = adjacency(g)
    colored = _two_color(adj, comp)
    if colored is None:
        return None
    first, second = colored
    for u in first:
        if adj[u] & comp != second:
            return None
    for u in second:
        if adj[u] & comp != first:
            return None
    a, b = sorted((len(first), len(second)))
    return (a, b)


def perfect_matching(g: Graph):
    """A perfect matching of g, or None when there is none.

    Exact search with memoization over vertex subsets, run per component.
    Deterministic: the lowest free vertex is matched to its smallest
    available neighbor first.
    """
    if g.n > MATCHING_VERTEX_LIMIT:
        raise ValueError(
            f"perfect matching limited to {MATCHING_VERTEX_LIMIT} vertices, got {g.n}"
        )
    if g.n % 2 != 0:
        return None
    pairs = []
    for comp in connected_components(g):
        if len(comp) % 2 != 0:
            return None
        matched = _match_component(g, comp)
        if matched is None:
            return None
        pairs.extend(matched)
    return frozenset(pairs)


def _match_component(g: Graph, comp):
    verts = sorted(comp)
    if len(verts) == 0:
        return []
    idx = {v: i for i, v in enumerate(verts)}
    adj = adjacency(g)
    nbr_idx = [sorted(idx[u] for u in adj[v] if u in comp) for v in verts]
    full = (1 << len(verts)) - 1
    memo = {}

    def solve(mask):
        if mask == full:
            return ()
        if mask in memo:
            return memo[mask]
        i = (~mask & -~mask).bit_length() - 1  # lowest unmatched vertex
        result = None
        for j in nbr_idx[i]:
            if not mask & (1 << j):
                rest = solve(mask | (1 << i) | (1 << j))
                if rest is not None:
                    result = ((i, j),) + rest
                    break
        memo[mask] = result
        return result

    res = solve(0)
    if res is None:
        return None
    return [_norm_edge(verts[i], verts[j]) for i, j in res]


def is_perfect_matching(g: Graph, m) -> bool:
    """True iff m is a set of disjoint edges of g covering every vertex."""
    touched = set()
    for u, v in m:
        if not g.has_edge(u, v):
            return False
        if u in touched or v in touched:
            return False
        touched.update((u, v))
    return len(touched) == g.n
