"""Classification predicates: square conditions SC/WSC/MSC, unmixedness,
the domain property, the derived graph built from edges priced 0-1 by every
minimal vertex cover, witness construction, and structural audits."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .covers import (
    DEFAULT_BUDGET,
    Cover,
    cover_sum,
    enumerate_basic_covers,
    is_basic,
    loppable_vertices,
    norm,
)
from .errors import ConsistencyError
from .graph import (
    Graph,
    adjacency,
    connected_components,
    is_complete_bipartite,
    perfect_matching,
    reduced,
    _norm_edge,
    _two_color,
)

DEFAULT_K_MAX = 3


# ---------------------------------------------------------------------------
# Local square conditions


def edge_square_condition(g: Graph, i: int, j: int) -> bool:
    """True iff every neighbor pair (i', j') of (i, j) is distinct and adjacent."""
    if not g.has_edge(i, j):
        raise ValueError(f"({i},{j}) is not an edge")
    adj = adjacency(g)
    ni, nj = adj[i], adj[j]
    if ni & nj:
        return False  # a common neighbor gives i' == j'
    for u in ni:
        if not nj <= adj[u]:
            return False
    return True


def check_sc(g: Graph) -> bool:
    """Every three-edge walk i'-i-j-j' closes: i' != j' and {i',j'} is an edge.

    Vacuously true when no such walk exists.
    """
    adj = adjacency(g)
    for i, j in g.edges:
        left = adj[i] - {j}
        right = adj[j] - {i}
        if left & right:
            return False
        for u in left:
            if not right <= adj[u]:
                return False
    return True


def check_wsc(g: Graph) -> bool:
    """At least one edge, and every non-isolated vertex has a square-partner edge."""
    if not g.edges:
        return False
    adj = adjacency(g)
    for i in g.vertices():
        if adj[i] and not any(edge_square_condition(g, i, j) for j in adj[i]):
            return False
    return True


# ---------------------------------------------------------------------------
# The derived graph


def _g01_edges(g: Graph, strategy: str = "cross-check", budget: int = DEFAULT_BUDGET):
    """Edges of the derived graph, in the original vertex labels."""
    if not g.edges:
        raise ValueError("the derived graph needs at least one edge")
    if strategy not in ("by-covers", "by-local", "cross-check"):
        raise ValueError(f"unknown strategy {strategy!r}")
    local = covers = None
    if strategy in ("by-local", "cross-check"):
        local = frozenset(
            e for e in g.edges if edge_square_condition(g, *e)
        )
    if strategy in ("by-covers", "cross-check"):
        basic1 = enumerate_basic_covers(g, 1, budget)
        covers = frozenset(
            (u, v)
            for u, v in g.edges
            if all(c.price(u) + c.price(v) == 1 for c in basic1)
        )
    if strategy == "by-local":
        return local
    if strategy == "by-covers":
        return covers
    if local != covers:
        raise ConsistencyError(
            f"derived-graph strategies disagree: local={sorted(local)} "
            f"covers={sorted(covers)}"
        )
    return local


def g01(
    g: Graph, strategy: str = "cross-check", budget: int = DEFAULT_BUDGET
) -> Graph:
    """The derived graph on the vertices of the reduced graph.

    Vertices follow the relabeling returned by reduced(g); for a graph
    without isolated vertices the labels coincide with g's.
    """
    kept = _g01_edges(g, strategy, budget)
    _, relabel = reduced(g)
    return Graph(
        len(relabel), frozenset((relabel[u], relabel[v]) for u, v in kept)
    )


# ---------------------------------------------------------------------------
# Unmixedness, domains, MSC


def is_unmixed(g: Graph, budget: int = DEFAULT_BUDGET):
    """(True, None) when all basic 1-covers share one norm, else (False, pair)."""
    if not g.edges:
        raise ValueError("unmixedness needs at least one edge")
    basic1 = enumerate_basic_covers(g, 1, budget)
    first = basic1.covers[0]
    for c in basic1.covers[1:]:
        if norm(c) != norm(first):
            return False, (first, c)
    return True, None


def is_domain(
    g: Graph, strategy: str = "cross-check", budget: int = DEFAULT_BUDGET
) -> bool:
    """Every sum of basic 1- and 2-covers stays basic.

    by-wsc uses the local square-partner characterization; by-covers checks,
    for each non-isolated vertex, for a neighbor priced complementarily by
    every basic 1-cover and every basic 2-cover.
    """
    if strategy not in ("by-wsc", "by-covers", "cross-check"):
        raise ValueError(f"unknown strategy {strategy!r}")
    by_wsc = by_covers = None
    if strategy in ("by-wsc", "cross-check"):
        by_wsc = check_wsc(g)
    if strategy in ("by-covers", "cross-check"):
        by_covers = _is_domain_via_covers(g, budget)
    if strategy == "by-wsc":
        return by_wsc
    if strategy == "by-covers":
        return by_covers
    if by_wsc != by_covers:
        raise ConsistencyError(
            f"domain strategies disagree: wsc={by_wsc} covers={by_covers}"
        )
    return by_wsc


def _is_domain_via_covers(g: Graph, budget: int) -> bool:
    if not g.edges:
        return False
    adj = adjacency(g)
    basic1 = enumerate_basic_covers(g, 1, budget)
    basic2 = enumerate_basic_covers(g, 2, budget)
    for i in g.vertices():
        if not adj[i]:
            continue
        found = False
        for j in adj[i]:
            if all(c.price(i) + c.price(j) == 1 for c in basic1) and all(
                c.price(i) + c.price(j) == 2 for c in basic2
            ):
                found = True
                break
        if not found:
            return False
    return True


def check_msc(g: Graph, budget: int = DEFAULT_BUDGET):
    """A perfect matching of the reduced graph whose pairs all satisfy the
    square condition, or None. The matching is found on the derived graph
    and reported in g's vertex labels."""
    if not g.edges:
        raise ValueError("MSC needs at least one edge")
    derived = g01(g, "cross-check", budget)
    matching = perfect_matching(derived)
    if matching is None:
        return None
    _, relabel = reduced(g)
    back = {new: old for old, new in relabel.items()}
    return frozenset(_norm_edge(back[u], back[v]) for u, v in matching)


def verify_msc_witness(g: Graph, m) -> bool:
    """True iff m is a perfect matching of the reduced graph and every pair
    passes the square condition in g."""
    adj = adjacency(g)
    non_isolated = {v for v in g.vertices() if adj[v]}
    touched = set()
    for u, v in m:
        if not g.has_edge(u, v):
            return False
        if u in touched or v in touched:
            return False
        touched.update((u, v))
        if not edge_square_condition(g, u, v):
            return False
    return touched == non_isolated


# ---------------------------------------------------------------------------
# Counterexample search


@dataclass(frozen=True)
class DomainCounterexample:
    """A sum of basic covers that fails to be basic."""

    summands: tuple
    total: Cover
    lop_vertex: int


def domain_counterexample_search(
    g: Graph, max_level: int, budget: int = DEFAULT_BUDGET
):
    """First multiset of s basic 1-covers and t basic 2-covers (s + 2t <=
    max_level) whose sum is loppable; None when no bounded witness exists.

    Candidates are ordered by (s, t), then lexicographically by summands.
    """
    basic1 = enumerate_basic_covers(g, 1, budget).covers
    basic2 = enumerate_basic_covers(g, 2, budget).covers
    for s in range(0, max_level + 1):
        for t in range(0, (max_level - s) // 2 + 1):
            if s + t < 1:
                continue
            for ones in itertools.combinations_with_replacement(basic1, s):
                for twos in itertools.combinations_with_replacement(basic2, t):
                    summands = ones + twos
                    total = cover_sum(summands)
                    lop = loppable_vertices(g, total)
                    if lop:
                        return DomainCounterexample(summands, total, min(lop))
    return None


# ---------------------------------------------------------------------------
# Structural audits of domains


def _g01_components(g: Graph, budget: int = DEFAULT_BUDGET):
    """Components of the derived graph in original labels, with bipartitions.

    Returns a list of (component, side_a, side_b); isolated derived vertices
    get empty sides. side_a holds the smallest label of its component.
    """
    kept = _g01_edges(g, "cross-check", budget)
    adj = adjacency(g)
    vertices = [v for v in g.vertices() if adj[v]]
    derived = Graph.of(g.n, kept) if kept else Graph(g.n, frozenset())
    derived_adj = adjacency(derived)
    out = []
    seen = set()
    for start in vertices:
        if start in seen:
            continue
        comp = set()
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.add(v)
            for u in derived_adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comp = frozenset(comp)
        if len(comp) == 1:
            out.append((comp, frozenset(comp), frozenset()))
        else:
            sides = _two_color(derived_adj, comp)
            if sides is None:
                raise ConsistencyError(
                    "derived graph component is not bipartite"
                )
            out.append((comp, sides[0], sides[1]))
    out.sort(key=lambda item: min(item[0]))
    return out


def structural_domain_audit(g: Graph, budget: int = DEFAULT_BUDGET) -> list:
    """Check the five structural constraints that hold between the derived
    graph's components of any domain. Returns a list of violation messages,
    empty when all constraints hold."""
    if not is_domain(g, "cross-check", budget):
        raise ValueError("structural audit requires a domain")
    comps = _g01_components(g, budget)
    kept = _g01_edges(g, "cross-check", budget)
    violations = []

    adj = adjacency(g)
    # (1) no triangle edge survives in the derived graph; no same-side
    # adjacency in g.
    for i, j in g.edges:
        for w in adj[i] & adj[j]:
            for e in (_norm_edge(i, j), _norm_edge(i, w), _norm_edge(j, w)):
                if e in kept:
                    violations.append(
                        f"rule 1: triangle {{{i},{j},{w}}} has derived edge {e}"
                    )
    for comp, side_a, side_b in comps:
        for side in (side_a, side_b):
            for u, v in itertools.combinations(sorted(side), 2):
                if g.has_edge(u, v):
                    violations.append(
                        f"rule 1: same-side vertices {u},{v} adjacent in g"
                    )

    def cross_edges(xs, ys):
        return [
            (u, v) for u in xs for v in ys if g.has_edge(u, v)
        ]

    pairs = list(itertools.combinations(range(len(comps)), 2))
    # (2) and (3): an A-A edge between two components forces all A-A pairs
    # and forbids every B-B edge.
    for ci, cj in itertools.permutations(range(len(comps)), 2):
        _, a_i, b_i = comps[ci]
        _, a_j, b_j = comps[cj]
        if not cross_edges(a_i, a_j):
            continue
        missing = [
            (u, v) for u in a_i for v in a_j if not g.has_edge(u, v)
        ]
        if missing:
            violations.append(
                f"rule 2: components {ci},{cj} missing A-A edges {sorted(missing)}"
            )
        bad = cross_edges(b_i, b_j)
        if bad:
            violations.append(
                f"rule 3: components {ci},{cj} have B-B edges {sorted(bad)}"
            )
    # (4) an A_i-A_j edge plus a B_i-B_k edge forces an A_j-B_k edge.
    for ci in range(len(comps)):
        _, a_i, b_i = comps[ci]
        for cj in range(len(comps)):
            if cj == ci or not cross_edges(a_i, comps[cj][1]):
                continue
            for ck in range(len(comps)):
                if ck == ci:
                    continue
                if cross_edges(b_i, comps[ck][2]) and not cross_edges(
                    comps[cj][1], comps[ck][2]
                ):
                    violations.append(
                        f"rule 4: components {ci},{cj},{ck} missing A-B edge"
                    )
    # (5) A_h-A_i and A_h-A_j edges forbid B_i-B_j edges.
    for ch in range(len(comps)):
        _, a_h, _ = comps[ch]
        linked = [
            ci
            for ci in range(len(comps))
            if ci != ch and cross_edges(a_h, comps[ci][1])
        ]
        for ci, cj in itertools.combinations(linked, 2):
            bad = cross_edges(comps[ci][2], comps[cj][2])
            if bad:
                violations.append(
                    f"rule 5: components {ch};{ci},{cj} have B-B edges {sorted(bad)}"
                )
    return violations


def component_flip_covers(g: Graph, component, budget: int = DEFAULT_BUDGET):
    """For one derived-graph component with bipartition A and B, the basic
    1-cover priced 1 on A, 0 on B, together with its in-component flip.

    Both returned covers are basic 1-covers of g.
    """
    if not is_domain(g, "cross-check", budget):
        raise ValueError("flip covers require a domain")
    component = frozenset(component)
    comps = _g01_components(g, budget)
    match = [item for item in comps if item[0] == component]
    if not match:
        raise ValueError(
            f"{sorted(component)} is not a component of the derived graph"
        )
    comp, side_a, side_b = match[0]

    adj = adjacency(g)
    prices = [1] * g.n
    for v in side_b:
        prices[v - 1] = 0
    for other, a_i, b_i in comps:
        if other == comp:
            continue
        if any(g.has_edge(u, v) for u in side_a for v in a_i):
            for v in b_i:
                prices[v - 1] = 0

    # Reduce to a basic cover, never lopping inside A so the 1-on-A,
    # 0-on-B pattern survives.
    current = Cover(1, tuple(prices))
    while True:
        allowed = loppable_vertices(g, current) - side_a
        if not allowed:
            break
        v = min(allowed)
        prices[v - 1] -= 1
        current = Cover(1, tuple(prices))

    flipped = list(current.prices)
    for v in comp:
        flipped[v - 1] = 1 - flipped[v - 1]
    return current, Cover(1, tuple(flipped))


def norm_spectrum(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list:
    """Sorted multiset of norms of all basic k-covers."""
    return sorted(norm(c) for c in enumerate_basic_covers(g, k, budget))


# ---------------------------------------------------------------------------
# Full report


@dataclass(frozen=True)
class Witnesses:
    matching: frozenset | None = None
    domain_counterexample: DomainCounterexample | None = None
    mixed_norm_pair: tuple | None = None


@dataclass(frozen=True)
class ClassificationReport:
    sc: bool
    wsc: bool
    msc: bool
    unmixed: bool
    domain: bool
    msc_conditions: dict
    witnesses: Witnesses
    consistent: bool
    k_max: int
    reduced_map: dict = field(default_factory=dict)


def classify_full(
    g: Graph,
    k_max: int = DEFAULT_K_MAX,
    budget: int = DEFAULT_BUDGET,
    counterexample_max_level: int = 0,
) -> ClassificationReport:
    """Evaluate each equivalence-theorem condition independently.

    Conditions quantifying over every level k are bounded by k_max.
    Isolated vertices are dropped first; reduced_map records the relabeling.
    Condition 5 (the ring-theoretic restatement) is recorded as equal to
    condition 4 by definition.
    """
    if not g.edges:
        raise ValueError("classification needs at least one edge")
    gred, relabel = reduced(g)
    m = gred.n

    unmixed, mixed_pair = is_unmixed(gred, budget)
    domain = is_domain(gred, "cross-check", budget)
    sc = check_sc(gred)
    wsc = check_wsc(gred)
    matching_red = check_msc(gred, budget)
    derived = g01(gred, "cross-check", budget)

    conditions = {}
    conditions[1] = matching_red is not None
    per_level_norms = {
        k: norm_spectrum(gred, k, budget) for k in range(1, k_max + 1)
    }
    conditions[2] = all(
        2 * value == k * m
        for k, norms in per_level_norms.items()
        for value in norms
    )
    conditions[3] = all(
        len(set(norms)) == 1 for norms in per_level_norms.values()
    )
    conditions[4] = unmixed and domain
    conditions[5] = conditions[4]
    sizes = [
        is_complete_bipartite(derived, comp)
        for comp in connected_components(derived)
    ]
    conditions[6] = all(s is not None and s[0] == s[1] for s in sizes)
    conditions[7] = perfect_matching(derived) is not None
    conditions[8] = perfect_matching(gred) is not None and all(
        2 * value == m for value in per_level_norms[1]
    )

    applicable = [conditions[i] for i in (1, 2, 3, 4, 6, 7, 8)]
    consistent = len(set(applicable)) == 1 and wsc == domain

    back = {new: old for old, new in relabel.items()}
    matching = None
    if matching_red is not None:
        matching = frozenset(
            _norm_edge(back[u], back[v]) for u, v in matching_red
        )
    counterexample = None
    if not domain and counterexample_max_level >= 1:
        counterexample = domain_counterexample_search(
            gred, counterexample_max_level, budget
        )
    witnesses = Witnesses(
        matching=matching,
        domain_counterexample=counterexample,
        mixed_norm_pair=mixed_pair,
    )
    return ClassificationReport(
        sc=sc,
        wsc=wsc,
        msc=conditions[1],
        unmixed=unmixed,
        domain=domain,
        msc_conditions=conditions,
        witnesses=witnesses,
        consistent=consistent,
        k_max=k_max,
        reduced_map=relabel,
    )


def report_to_dict(report: ClassificationReport) -> dict:
    """Stable JSON-ready rendering of a report."""
    from .covers import cover_to_dict

    witnesses = {
        "matching": (
            sorted([list(e) for e in report.witnesses.matching])
            if report.witnesses.matching is not None
            else None
        ),
        "domain_counterexample": None,
        "mixed_norm_pair": None,
    }
    ce = report.witnesses.domain_counterexample
    if ce is not None:
        witnesses["domain_counterexample"] = {
            "summands": [cover_to_dict(c) for c in ce.summands],
            "total": cover_to_dict(ce.total),
            "lop_vertex": ce.lop_vertex,
        }
    if report.witnesses.mixed_norm_pair is not None:
        witnesses["mixed_norm_pair"] = [
            cover_to_dict(c) for c in report.witnesses.mixed_norm_pair
        ]
    return {
        "sc": report.sc,
        "wsc": report.wsc,
        "msc": report.msc,
        "unmixed": report.unmixed,
        "domain": report.domain,
        "msc_conditions": {
            str(i): report.msc_conditions[i] for i in range(1, 9)
        },
        "witnesses": witnesses,
        "consistent": report.consistent,
        "k_max": report.k_max,
        "reduced_map": {str(old): new for old, new in report.reduced_map.items()},
    }
