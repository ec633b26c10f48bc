import json

import pytest

from idemgraph.graphs import (
    Graph,
    build_idempotent_graph,
    complete_bipartite_graph,
    complete_graph,
    component_census,
    components,
    cycle_graph,
    empty_graph,
    export_dot,
    export_json,
    graph_from_edges,
    graph_from_json,
    is_bipartite,
    is_path_graph,
    path_graph,
)
from idemgraph.rings import RingSizeError, build_ring, idempotents


def census_set(g):
    return sorted((c.size, c.shape) for c in component_census(g))


class TestGraphType:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            graph_from_edges(2, [(0, 0)])

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, [0b10, 0b00])

    def test_degree_sum_is_twice_edges(self):
        g = complete_bipartite_graph(2, 3)
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count()


class TestBuildIdempotentGraph:
    def test_z2xz2_is_k4(self):
        g = build_idempotent_graph(build_ring("Z2 * Z2"))
        assert g.n == 4 and g.edge_count() == 6

    def test_z4_is_the_path_0_1_3_2(self):
        g = build_idempotent_graph(build_ring("Z4"))
        assert sorted(g.edges()) == [(0, 1), (1, 3), (2, 3)]
        assert is_path_graph(g)

    def test_z3x_quotient_components(self):
        r = build_ring("Z3[x]/(x^2)")
        g = build_idempotent_graph(r)
        assert census_set(g) == [(3, "path"), (6, "even-cycle")]
        # the paper's 6-cycle: x ~ 2x ~ x+1 ~ 2x+2 ~ x+2 ~ 2x+1 ~ x
        idx = {r.label(e): i for i, e in enumerate(r.elements)}
        cyc = ["x", "2x", "x + 1", "2x + 2", "x + 2", "2x + 1"]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.has_edge(idx[a], idx[b]), (a, b)

    def test_no_loops_even_in_char_2(self):
        g = build_idempotent_graph(build_ring("Z2 * Z2"))
        assert all(not (g.rows[i] >> i) & 1 for i in range(g.n))

    def test_adjacency_definition_against_pair_scan(self):
        # independent oracle: O(n^2) scan of x + y over the raw elements
        r = build_ring("Z12")
        ids = idempotents(r)
        g = build_idempotent_graph(r)
        for i, x in enumerate(r.elements):
            for j, y in enumerate(r.elements):
                expected = i != j and r.add(x, y) in ids
                assert g.has_edge(i, j) == expected

    def test_size_bound(self):
        r = build_ring("Z100", max_size=4096)
        with pytest.raises(RingSizeError):
            build_idempotent_graph(r, max_size=50)


class TestDegrees:
    def test_z6_degrees_match_idempotent_count(self):
        r = build_ring("Z6")
        g = build_idempotent_graph(r)
        # 2*1 = 2 is not idempotent -> degree |Id| = 4; 2*0 = 0 is -> |Id| - 1
        assert g.degree(1) == 4
        assert g.degree(0) == 3

    def test_k4_degrees(self):
        g = complete_graph(4)
        assert all(g.degree(v) == 3 for v in range(4))


class TestComponents:
    def test_z6_connected(self):
        assert len(components(build_idempotent_graph(build_ring("Z6")))) == 1

    def test_gf4_two_matching_edges(self):
        g = build_idempotent_graph(build_ring("GF(4)"))
        assert census_set(g) == [(2, "path"), (2, "path")]

    def test_empty_graph(self):
        assert components(empty_graph(0)) == []

    def test_partition_property(self):
        g = graph_from_edges(7, [(0, 1), (2, 3), (3, 4)])
        comps = components(g)
        assert sorted(v for c in comps for v in c) == list(range(7))


class TestCensus:
    def test_z9_single_path(self):
        g = build_idempotent_graph(build_ring("Z9"))
        assert census_set(g) == [(9, "path")]

    def test_complete_component(self):
        assert census_set(complete_graph(4)) == [(4, "complete")]

    def test_odd_cycle_and_other(self):
        assert census_set(cycle_graph(5)) == [(5, "odd-cycle")]
        k4_minus = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        assert census_set(k4_minus) == [(4, "other")]

    def test_triangle_counts_as_complete(self):
        assert census_set(cycle_graph(3)) == [(3, "complete")]


class TestBipartite:
    @pytest.mark.parametrize(
        "g,expected",
        [
            (cycle_graph(6), True),
            (complete_graph(4), False),
            (cycle_graph(5), False),
            (path_graph(9), True),
        ],
    )
    def test_examples(self, g, expected):
        assert is_bipartite(g) is expected

    def test_z9_path_bipartite(self):
        assert is_bipartite(build_idempotent_graph(build_ring("Z9")))


class TestExport:
    def test_k2_labeled(self):
        g = build_idempotent_graph(build_ring("Z2"))
        dot = export_dot(g, labels=True)
        assert '"0" -- "1";' in dot

    def test_z4_dot_counts(self):
        dot = export_dot(build_idempotent_graph(build_ring("Z4")))
        assert dot.count(";") == 4 + 3
        assert dot.index('"0" -- "1"') < dot.index('"1" -- "3"') < dot.index('"2" -- "3"')

    def test_empty_graph_dot(self):
        assert export_dot(empty_graph(0)) == "graph G {\n}\n"

    def test_dot_deterministic(self):
        g = build_idempotent_graph(build_ring("Z6"))
        assert export_dot(g) == export_dot(g)

    def test_json_round_trip(self):
        g = build_idempotent_graph(build_ring("Z6"))
        h = graph_from_json(export_json(g))
        assert h.rows == g.rows

    def test_json_edges_ascending(self):
        g = complete_graph(3)
        data = json.loads(export_json(g))
        assert data == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
