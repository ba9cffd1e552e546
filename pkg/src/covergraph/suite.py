"""Batch verification: runs the quantified invariants of every module over
an exhaustive small-graph corpus plus seeded random samples.

Each check is independent of the code path it validates: basic 1-covers are
cross-checked against a maximal-independent-set enumerator, matchings and
decompositions are re-verified from scratch, and the derived graph is always
built by both strategies.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classify import (
    check_msc,
    check_sc,
    check_wsc,
    classify_full,
    domain_counterexample_search,
    edge_square_condition,
    g01,
    is_domain,
    structural_domain_audit,
    verify_msc_witness,
    _g01_components,
    component_flip_covers,
)
from .construct import all_graphs, pendant_all, pendant_g01_isolated, random_graph
from .covers import (
    DEFAULT_BUDGET,
    Cover,
    cover_sum,
    enumerate_basic_covers,
    is_basic,
    is_cover,
    loppable_vertices,
    norm,
)
from .graph import (
    Graph,
    adjacency,
    bipartition,
    connected_components,
    is_complete_bipartite,
    perfect_matching,
    parse_graph,
    reduced,
    serialize_graph,
)


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)

    def fail(self, g: Graph, message: str):
        self.passed = False
        if len(self.failures) < 10:
            self.failures.append(
                {"graph": serialize_graph(g, "json"), "message": message}
            )


def maximal_independent_sets(g: Graph):
    """Bron-Kerbosch on the complement graph; the oracle for basic 1-covers."""
    adj = adjacency(g)
    everyone = frozenset(g.vertices())
    co = {v: everyone - adj[v] - {v} for v in g.vertices()}
    out = []

    def extend(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(co[v] & p))
        for v in sorted(p - co[pivot]):
            extend(r | {v}, p & co[v], x & co[v])
            p = p - {v}
            x = x | {v}

    extend(frozenset(), frozenset(g.vertices()), frozenset())
    return out


def run_suite(
    max_n: int = 6,
    seed: int = 0,
    samples: int = 100,
    budget: int = DEFAULT_BUDGET,
) -> list:
    """Run every invariant; returns a list of CheckResult."""
    corpus = [g for n in range(1, max_n + 1) for g in all_graphs(n)]
    with_edge = [g for g in corpus if g.edges]
    no_isolated = [
        g for g in with_edge if all(adjacency(g)[v] for v in g.vertices())
    ]
    rng = random.Random(seed)
    sampled = []
    while len(sampled) < samples:
        g = random_graph(rng.randint(2, 10), rng.uniform(0.1, 0.8), rng.getrandbits(31))
        if g.edges:
            sampled.append(g)

    checks = [
        _check_roundtrip(corpus),
        _check_reduced(corpus),
        _check_bipartition(corpus),
        _check_matching(corpus),
        _check_cover_oracle(with_edge),
        _check_cover_arithmetic(with_edge, rng),
        _check_lemma_edge_conditions(with_edge),
        _check_derived_graph(with_edge + sampled, budget),
        _check_sc_structure(corpus),
        _check_wsc_equivalence(with_edge, budget),
        _check_msc_equivalence(no_isolated, budget),
        _check_domain_witnesses([g for g in with_edge if g.n <= 5], budget),
        _check_pendants(sampled, budget),
        _check_indecomposables(with_edge, budget),
    ]
    return checks


def _check_roundtrip(corpus):
    res = CheckResult("serialization round-trip")
    for g in corpus:
        res.checked += 1
        for fmt in ("edge-list", "json"):
            text = serialize_graph(g, fmt)
            if parse_graph(text, fmt) != g:
                res.fail(g, f"round-trip mismatch in {fmt}")
            if serialize_graph(parse_graph(text, fmt), fmt) != text:
                res.fail(g, f"re-serialization differs in {fmt}")
    return res


def _check_reduced(corpus):
    res = CheckResult("reduced graph idempotence")
    for g in corpus:
        res.checked += 1
        once, _ = reduced(g)
        twice, _ = reduced(once)
        if once != twice:
            res.fail(g, "reduced is not idempotent")
    return res


def _check_bipartition(corpus):
    res = CheckResult("bipartition certificates")
    for g in corpus:
        res.checked += 1
        parts = bipartition(g)
        if parts is None:
            continue
        for u, v in g.edges:
            if (u in parts.side_a) == (v in parts.side_a):
                res.fail(g, f"edge ({u},{v}) does not cross sides")
    return res


def _check_matching(corpus):
    res = CheckResult("perfect matching soundness")
    for g in corpus:
        res.checked += 1
        m = perfect_matching(g)
        if m is None:
            continue
        touched = [v for e in m for v in e]
        if sorted(touched) != list(g.vertices()):
            res.fail(g, "matching does not cover each vertex once")
        if any(not g.has_edge(u, v) for u, v in m):
            res.fail(g, "matching uses a non-edge")
    return res


def _check_cover_oracle(graphs):
    res = CheckResult("basic 1-covers equal minimal vertex covers")
    for g in graphs:
        res.checked += 1
        enumerated = {
            c.prices for c in enumerate_basic_covers(g, 1)
        }
        adj = adjacency(g)
        expected = set()
        for mis in maximal_independent_sets(g):
            cover = tuple(
                0 if v in mis or not adj[v] else 1 for v in g.vertices()
            )
            if any(cover):
                expected.add(cover)
        if enumerated != expected:
            res.fail(g, "enumeration disagrees with the independent-set oracle")
    return res


def _check_cover_arithmetic(graphs, rng):
    res = CheckResult("cover arithmetic laws")
    for g in graphs:
        res.checked += 1
        basic1 = enumerate_basic_covers(g, 1).covers
        no_isolated = all(adjacency(g)[v] for v in g.vertices())
        for c in basic1:
            if any(p not in (0, 1) for p in c.prices):
                res.fail(g, f"entry bound violated by {c.prices}")
            if not is_basic(g, c):
                res.fail(g, f"{c.prices} enumerated but loppable")
        if len(basic1) >= 2:
            a, b = rng.choice(basic1), rng.choice(basic1)
            total = cover_sum([a, b])
            if total.k != 2 or not is_cover(g, total.prices, 2):
                res.fail(g, "sum of two 1-covers is not a 2-cover")
        if no_isolated:
            for k in (2, 3, 4):
                for c in basic1[:3]:
                    scaled = Cover(k, tuple(k * p for p in c.prices))
                    if not is_basic(g, scaled):
                        res.fail(g, f"{k} * {c.prices} is not basic")
    return res


def _check_lemma_edge_conditions(graphs):
    res = CheckResult("edge square condition matches cover prices")
    for g in graphs:
        res.checked += 1
        by_level = {
            k: enumerate_basic_covers(g, k).covers for k in (1, 2, 3)
        }
        for u, v in g.edges:
            local = edge_square_condition(g, u, v)
            by_one = all(c.price(u) + c.price(v) == 1 for c in by_level[1])
            by_all = all(
                c.price(u) + c.price(v) == k
                for k, covers in by_level.items()
                for c in covers
            )
            if not (local == by_one == by_all):
                res.fail(g, f"edge ({u},{v}): local={local} k1={by_one} k123={by_all}")
    return res


def _check_derived_graph(graphs, budget):
    res = CheckResult("derived graph cross-check and square condition")
    for g in graphs:
        res.checked += 1
        derived = g01(g, "cross-check", budget)  # raises on disagreement
        if not check_sc(derived):
            res.fail(g, "derived graph violates the square condition")
    return res


def _check_sc_structure(corpus):
    res = CheckResult("connected square-condition graphs are complete bipartite")
    for g in corpus:
        res.checked += 1
        if not check_sc(g):
            continue
        for comp in connected_components(g):
            if len(comp) == 1:
                continue
            if is_complete_bipartite(g, comp) is None:
                res.fail(g, f"component {sorted(comp)} is not complete bipartite")
    return res


def _check_wsc_equivalence(graphs, budget):
    res = CheckResult("weak square condition equals the domain property")
    for g in graphs:
        res.checked += 1
        wsc = check_wsc(g)
        dom = is_domain(g, "by-covers", budget)
        derived = g01(g, "cross-check", budget)
        no_isolated = all(adjacency(derived)[v] for v in derived.vertices())
        if not (wsc == dom == no_isolated):
            res.fail(g, f"wsc={wsc} domain={dom} derived-no-isolated={no_isolated}")
    return res


def _check_msc_equivalence(graphs, budget):
    res = CheckResult("matching-square-condition equivalences")
    for g in graphs:
        res.checked += 1
        report = classify_full(g, k_max=3, budget=budget)
        values = [report.msc_conditions[i] for i in (1, 2, 3, 4, 6, 7, 8)]
        if len(set(values)) != 1:
            res.fail(g, f"conditions disagree: {report.msc_conditions}")
        if report.msc and (
            report.witnesses.matching is None
            or not verify_msc_witness(g, report.witnesses.matching)
        ):
            res.fail(g, "missing or invalid matching witness")
    return res


def _check_domain_witnesses(graphs, budget):
    res = CheckResult("domain witnesses, audits and flip covers")
    for g in graphs:
        res.checked += 1
        if is_domain(g, "cross-check", budget):
            if structural_domain_audit(g, budget):
                res.fail(g, "structural audit reported violations")
            for comp, side_a, side_b in _g01_components(g, budget):
                if not side_b:
                    continue
                a, b = component_flip_covers(g, comp, budget)
                if not (is_basic(g, a) and is_basic(g, b)):
                    res.fail(g, "flip covers are not basic")
                if any(a.price(v) != 1 for v in side_a) or any(
                    a.price(v) != 0 for v in side_b
                ):
                    res.fail(g, "flip cover pattern broken")
        else:
            witness = domain_counterexample_search(g, 4, budget)
            if witness is None:
                res.fail(g, "no bounded counterexample for a non-domain")
            else:
                total = cover_sum(witness.summands)
                if total != witness.total or witness.lop_vertex not in (
                    loppable_vertices(g, total)
                ):
                    res.fail(g, "counterexample does not verify")
    return res


def _check_pendants(graphs, budget):
    res = CheckResult("pendant constructions")
    for g in graphs:
        res.checked += 1
        plus, _ = pendant_all(g)
        if check_msc(plus, budget) is None:
            res.fail(g, "pendant-everywhere graph fails MSC")
        if (bipartition(g) is None) != (bipartition(plus) is None):
            res.fail(g, "pendants changed bipartiteness")
        prime = pendant_g01_isolated(g, budget)
        if not check_wsc(prime):
            res.fail(g, "pendant-at-isolated graph fails WSC")
    return res


def _check_indecomposables(graphs, budget):
    from .covers import indecomposable_2covers

    res = CheckResult("bipartite graphs have no indecomposable 2-covers")
    for g in graphs:
        if bipartition(g) is None:
            continue
        res.checked += 1
        if len(indecomposable_2covers(g, budget)) != 0:
            res.fail(g, "bipartite graph has an indecomposable 2-cover")
    return res


def suite_to_dict(checks) -> dict:
    return {
        "passed": all(c.passed for c in checks),
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "checked": c.checked,
                "failures": c.failures,
            }
            for c in checks
        ],
    }
