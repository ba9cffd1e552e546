import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covergraph.construct import all_graphs, complete, cycle, random_graph
from covergraph.covers import (
    Cover,
    cover_sum,
    decompose_2cover,
    enumerate_basic_covers,
    indecomposable_2covers,
    is_basic,
    is_cover,
    loppable_vertices,
    norm,
    reduce_to_basic,
)
from covergraph.errors import BudgetExceededError
from covergraph.graph import Graph, adjacency

from oracles import basic_by_decomposition, is_valid_cover, minimal_vertex_covers

K2 = Graph.of(2, [(1, 2)])


class TestIsCover:
    def test_single_priced_endpoint(self):
        assert is_cover(K2, (1, 0), 1)

    def test_zero_assignment_is_never_a_cover(self):
        assert not is_cover(K2, (0, 0), 0)

    def test_all_ones_on_pentagon(self):
        assert is_cover(cycle(5), (1, 1, 1, 1, 1), 2)

    def test_cheap_edge(self):
        assert not is_cover(cycle(4), (1, 0, 0, 1), 1)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_cover(K2, (1,), 1)


class TestLopping:
    def test_both_endpoints_loppable(self):
        assert loppable_vertices(K2, Cover(1, (1, 1))) == frozenset({1, 2})

    def test_tight_edge(self):
        assert loppable_vertices(K2, Cover(1, (1, 0))) == frozenset()

    def test_all_ones_two_cover_tight(self):
        assert loppable_vertices(cycle(5), Cover(2, (1, 1, 1, 1, 1))) == frozenset()

    def test_soundness_exhaustive(self):
        for g in all_graphs(4):
            if not g.edges:
                continue
            for prices in itertools.product(range(3), repeat=4):
                for k in (1, 2):
                    if not is_valid_cover(g, prices, k):
                        continue
                    c = Cover(k, prices)
                    lop = loppable_vertices(g, c)
                    for v in g.vertices():
                        if prices[v - 1] < 1:
                            assert v not in lop
                            continue
                        dec = list(prices)
                        dec[v - 1] -= 1
                        assert (v in lop) == is_valid_cover(g, dec, k)


class TestBasic:
    def test_slack_edge_not_basic(self):
        assert not is_basic(K2, Cover(1, (1, 1)))

    def test_all_ones_on_pentagon_basic(self):
        assert is_basic(cycle(5), Cover(2, (1, 1, 1, 1, 1)))

    def test_minimal_cover_basic(self, example6):
        assert is_basic(example6, Cover(1, (1, 0, 1, 0, 1, 0)))

    def test_matches_decomposition_definition(self):
        # lop criterion vs the sum-decomposition definition, exhaustively
        for g in all_graphs(4):
            if not g.edges:
                continue
            for k in (1, 2):
                for prices in itertools.product(range(3), repeat=4):
                    if not is_valid_cover(g, prices, k):
                        continue
                    assert is_basic(g, Cover(k, prices)) == (
                        basic_by_decomposition(g, prices, k)
                    )

    def test_matches_decomposition_definition_sampled(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(6, rng.uniform(0.2, 0.9), rng.getrandbits(31))
            if not g.edges:
                continue
            for _ in range(20):
                prices = tuple(rng.randint(0, 2) for _ in range(6))
                k = rng.randint(1, 2)
                if not is_valid_cover(g, prices, k):
                    continue
                assert is_basic(g, Cover(k, prices)) == (
                    basic_by_decomposition(g, prices, k)
                )


class TestReduceToBasic:
    def test_lops_smallest_label_first(self):
        basic, residue = reduce_to_basic(K2, Cover(1, (1, 1)))
        assert basic == Cover(1, (0, 1))
        assert residue == (1, 0)

    def test_already_basic(self):
        basic, residue = reduce_to_basic(K2, Cover(1, (1, 0)))
        assert basic == Cover(1, (1, 0))
        assert residue == (0, 0)

    def test_square_two_cover(self):
        basic, residue = reduce_to_basic(cycle(4), Cover(2, (2, 1, 2, 1)))
        assert basic == Cover(2, (1, 1, 1, 1))
        assert residue == (1, 0, 1, 0)
        assert is_basic(cycle(4), basic)

    def test_sum_invariant_sampled(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(6, rng.uniform(0.2, 0.9), rng.getrandbits(31))
            if not g.edges:
                continue
            k = rng.randint(1, 3)
            prices = tuple(rng.randint(0, k + 1) for _ in range(6))
            if not is_valid_cover(g, prices, k):
                continue
            basic, residue = reduce_to_basic(g, Cover(k, prices))
            assert is_basic(g, basic)
            assert all(r >= 0 for r in residue)
            assert tuple(b + r for b, r in zip(basic.prices, residue)) == prices


class TestEnumeration:
    def test_worked_example_has_three(self, example6):
        covers = enumerate_basic_covers(example6, 1)
        assert {c.prices for c in covers} == {
            (1, 0, 1, 0, 1, 0),  # {1,3,5}
            (0, 1, 0, 1, 1, 0),  # {2,4,5}
            (0, 1, 0, 1, 0, 1),  # {2,4,6}
        }

    def test_complete_graph_covers(self):
        covers = enumerate_basic_covers(complete(4), 1)
        assert len(covers) == 4
        assert all(sum(c.prices) == 3 for c in covers)

    def test_hexagon_norms(self):
        covers = enumerate_basic_covers(cycle(6), 1)
        assert sorted(norm(c) for c in covers) == [3, 3, 4, 4, 4]

    def test_canonical_order(self, example6):
        covers = enumerate_basic_covers(example6, 1)
        assert [c.prices for c in covers] == sorted(c.prices for c in covers)

    def test_matches_minimal_vertex_covers(self):
        rng = random.Random(3)
        graphs = [g for g in all_graphs(5) if g.edges]
        graphs += [
            random_graph(n, rng.uniform(0.2, 0.8), rng.getrandbits(31))
            for n in (7, 8)
            for _ in range(20)
        ]
        for g in graphs:
            if not g.edges:
                continue
            enumerated = {c.prices for c in enumerate_basic_covers(g, 1)}
            expected = {
                tuple(1 if v in mvc else 0 for v in g.vertices())
                for mvc in minimal_vertex_covers(g)
            }
            assert enumerated == expected

    def test_entry_bound_and_isolated_zero(self):
        g = Graph.of(5, [(1, 2), (2, 3), (3, 1)])
        for k in (1, 2, 3):
            for c in enumerate_basic_covers(g, k):
                assert all(0 <= p <= k for p in c.prices)
                assert c.prices[3] == 0 and c.prices[4] == 0

    def test_budget_error_names_bound(self):
        with pytest.raises(BudgetExceededError, match="budget 100"):
            enumerate_basic_covers(cycle(8), 2, budget=100)

    def test_scaling_basic_one_covers(self):
        for g in all_graphs(5):
            if not g.edges:
                continue
            if any(not adjacency(g)[v] for v in g.vertices()):
                continue
            for c in enumerate_basic_covers(g, 1):
                for k in (2, 3, 4):
                    scaled = Cover(k, tuple(k * p for p in c.prices))
                    assert is_basic(g, scaled)


class TestSumAndNorm:
    def test_pointwise(self):
        total = cover_sum([Cover(1, (1, 0, 1, 0)), Cover(1, (0, 1, 0, 1))])
        assert total == Cover(2, (1, 1, 1, 1))

    def test_pentagon_pair(self):
        total = cover_sum([Cover(1, (1, 1, 0, 1, 0)), Cover(1, (0, 1, 1, 0, 1))])
        assert total == Cover(2, (1, 2, 1, 1, 1))

    def test_identity(self):
        c = Cover(1, (1, 0))
        assert cover_sum([c]) == c

    def test_shape_error(self):
        with pytest.raises(ValueError):
            cover_sum([Cover(1, (1, 0)), Cover(1, (1, 0, 0))])

    def test_norm(self):
        assert norm(Cover(1, (1, 0, 1, 0))) == 2

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_sum_of_covers_is_cover(self, data):
        g = data.draw(
            st.builds(
                random_graph,
                n=st.integers(2, 7),
                edge_probability=st.floats(0.2, 0.9),
                seed=st.integers(0, 2**31),
            )
        )
        if not g.edges:
            return
        b1 = enumerate_basic_covers(g, 1).covers
        picks = data.draw(st.lists(st.sampled_from(b1), min_size=1, max_size=4))
        total = cover_sum(picks)
        assert is_cover(g, total.prices, total.k)
        assert total.k == len(picks)


class TestDecomposition:
    def test_square_all_ones(self):
        first, second = decompose_2cover(cycle(4), Cover(2, (1, 1, 1, 1)))
        # lexicographically smallest valid first component
        assert first == Cover(1, (0, 1, 0, 1))
        assert second == Cover(1, (1, 0, 1, 0))

    def test_pentagon_all_ones_indecomposable(self):
        assert decompose_2cover(cycle(5), Cover(2, (1, 1, 1, 1, 1))) is None

    def test_double_price(self):
        first, second = decompose_2cover(K2, Cover(2, (2, 0)))
        assert first == Cover(1, (1, 0))
        assert second == Cover(1, (1, 0))

    def test_split_verifies(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_graph(6, rng.uniform(0.2, 0.8), rng.getrandbits(31))
            if not g.edges:
                continue
            for c in enumerate_basic_covers(g, 2):
                split = decompose_2cover(g, c)
                if split is None:
                    continue
                a, b = split
                assert is_cover(g, a.prices, 1) and is_cover(g, b.prices, 1)
                assert cover_sum([a, b]).prices == c.prices


class TestIndecomposables:
    def test_bipartite_has_none(self):
        assert len(indecomposable_2covers(cycle(6))) == 0

    def test_pentagon(self):
        covers = indecomposable_2covers(cycle(5))
        assert Cover(2, (1, 1, 1, 1, 1)) in covers.covers

    def test_pentagon_with_tail(self):
        g = Graph.of(7, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7)])
        covers = indecomposable_2covers(g)
        assert Cover(2, (1, 1, 1, 1, 1, 2, 0)) in covers.covers
