from itertools import combinations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tripart import (
    CapacityError,
    Graph,
    count_brute,
    count_ie,
    count_lex,
    enumerate_partitions,
    generate,
    ie_term,
    ie_terms_by_size,
    parse_graph,
    triangle_count_within,
    triangle_table,
    validate_partition,
)
from tripart.graphs import mask_of
from tripart.oracles import _ie_sum_tabulated


def random_graphs() -> st.SearchStrategy[Graph]:
    def build(n: int, bits: int) -> Graph:
        pairs = list(combinations(range(1, n + 1), 2))
        return Graph.from_edges(
            n, [e for i, e in enumerate(pairs) if bits >> i & 1])

    return st.integers(min_value=1, max_value=9).flatmap(
        lambda n: st.builds(
            build, st.just(n),
            st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1)))


class TestEnumerate:
    def test_k6_lex_order_and_limit(self, k6):
        first = enumerate_partitions(k6, limit=3)
        assert len(first) == 3
        assert first[0] == ((1, 2, 3), (4, 5, 6))
        everything = enumerate_partitions(k6)
        assert len(everything) == 10
        assert everything == sorted(everything)
        assert everything[:3] == first
        for p in everything:
            assert validate_partition(k6, p) is None

    def test_c6_empty(self, c6):
        assert enumerate_partitions(c6, limit=10) == []

    def test_dt9_unique(self, dt9):
        assert enumerate_partitions(dt9, limit=10) == [
            ((1, 2, 3), (4, 5, 6), (7, 8, 9))]

    def test_limit_zero(self, k6):
        assert enumerate_partitions(k6, limit=0) == []

    def test_non_multiple_of_3(self):
        assert enumerate_partitions(generate("complete", 7)) == []


class TestCountBrute:
    def test_fixtures(self, k6, k9, prism, octahedron, c6):
        assert count_brute(k6) == 10
        assert count_brute(k9) == 280
        assert count_brute(prism) == 1
        assert count_brute(octahedron) == 4
        assert count_brute(c6) == 0

    def test_gnp_7_is_zero(self):
        assert count_brute(generate("gnp", 7, p=0.9, seed=4)) == 0


class TestIeTerm:
    def test_k6_full_set(self, k6):
        assert ie_term(k6, k6.full_mask, 2) == 400

    def test_k6_five_sets(self, k6):
        for drop in range(1, 7):
            s = k6.full_mask & ~(1 << (drop - 1))
            assert ie_term(k6, s, 2) == -100

    def test_empty_set(self, k6, prism):
        assert ie_term(k6, 0, 2) == 0
        assert ie_term(prism, 0, 2) == 0


class TestCountIe:
    def test_fixtures_both_modes(self, k6, k9, prism, octahedron, c6):
        for g, expect in ((k6, 10), (k9, 280), (prism, 1),
                          (octahedron, 4), (c6, 0)):
            assert count_ie(g, "tabulated") == expect
            assert count_ie(g, "poly-space") == expect

    def test_k6_terms_by_size(self, k6):
        terms = ie_terms_by_size(k6)
        assert terms == {0: 0, 1: 0, 2: 0, 3: -20, 4: 240, 5: -600, 6: 400}
        signed = sum(terms.values())
        assert signed == 20
        assert signed // factorial(2) == 10

    def test_divisibility_on_corpus(self, corpus_files):
        for path in corpus_files:
            g = parse_graph(path.read_text())
            if g.n % 3:
                continue
            signed = _ie_sum_tabulated(g, threads=1)
            assert signed % factorial(g.n // 3) == 0
            assert signed >= 0

    def test_non_multiple_of_3(self):
        assert count_ie(generate("complete", 7)) == 0

    def test_empty_graph(self):
        assert count_ie(Graph.from_edges(0, [])) == 1

    def test_threads_bit_identical(self, k9):
        g = generate("planted", 12, p=0.5, seed=2)
        for graph in (k9, g):
            one = count_ie(graph, threads=1)
            assert count_ie(graph, threads=4) == one
            assert count_ie(graph, threads=7) == one

    def test_mode_underscore_alias(self, k6):
        assert count_ie(k6, "poly_space") == 10

    def test_unknown_mode(self, k6):
        with pytest.raises(ValueError):
            count_ie(k6, "fancy")

    def test_tabulated_capacity_guard(self):
        g = Graph.from_edges(27, [])
        with pytest.raises(CapacityError):
            count_ie(g, "tabulated")

    def test_mode_agreement_on_sweep_sample(self, sweep_graphs):
        for name, g in sweep_graphs[::7]:
            assert count_ie(g, "tabulated") == count_ie(g, "poly-space"), name


class TestTriangleTable:
    def test_matches_from_scratch(self, k6, prism, octahedron):
        for g in (k6, prism, octahedron,
                  generate("gnp", 10, p=0.5, seed=8)):
            table = triangle_table(g)
            for s in range(1 << g.n):
                assert table[s] == triangle_count_within(g, s)

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            triangle_table(Graph.from_edges(30, []))

    def test_k6_known_values(self, k6):
        table = triangle_table(k6)
        assert table[k6.full_mask] == 20
        assert table[mask_of([1, 2, 3])] == 1
        assert table[mask_of([1, 2])] == 0


class TestOracleAgreement:
    @given(random_graphs())
    def test_three_way(self, g):
        brute = count_brute(g)
        assert count_lex(g)[0] == brute
        assert count_ie(g, "tabulated") == brute
