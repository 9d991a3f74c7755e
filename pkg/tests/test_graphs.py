"""Graph core: deletion subgraphs, distances, connectivities, mixed
connectivity, generators, and the edge-list format."""

import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bundlefd import (
    INFINITE,
    EdgeListFormatError,
    FaultSet,
    Graph,
    InvalidFaultSetError,
    PathSeq,
    circulant,
    complete,
    complete_minus_edge,
    cycle,
    delete_elements,
    diameter,
    distance,
    edge_connectivity,
    format_edge_list,
    generate,
    hypercube,
    is_connected,
    is_connectivity_pair,
    is_mixed_connected,
    min_edge_cut,
    min_vertex_cut,
    minimum_degree,
    parse_edge_list,
    path_graph,
    shortest_path,
    surviving_vertices,
    vertex_connectivity,
)
from conftest import BRIDGED_K4S, GLUED_K4S


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs),
                         max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


class TestGraphBasics:
    def test_construction_normalizes_edges(self):
        g = Graph(3, [(2, 0), (0, 2), (1, 2)])
        assert g.edges == ((0, 2), (1, 2))
        assert g.neighbors(2) == (0, 1)

    def test_rejects_self_loops_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_equality_and_hash(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(0, 1)]))
        assert Graph(3, [(0, 1)]) != Graph(4, [(0, 1)])


class TestDeletion:
    def test_cycle_minus_vertex_is_path(self):
        p3 = delete_elements(cycle(4), FaultSet.of(vertices=[0]))
        assert p3 == path_graph(3) or (p3.n == 3 and p3.edge_count == 2)
        assert diameter(p3) == 2

    def test_complete_minus_edge(self):
        g = delete_elements(complete(4), FaultSet.of(edges=[(0, 1)]))
        assert distance(g, 0, 1) == 2
        assert g == complete_minus_edge(4)

    def test_removing_both_common_neighbors_disconnects(self):
        # the only neighbors shared by the nonadjacent pair of K4-e
        g = delete_elements(complete_minus_edge(4), FaultSet.of(vertices=[2, 3]))
        assert not is_connected(g)
        assert diameter(g) == INFINITE

    def test_unknown_elements_rejected(self):
        with pytest.raises(InvalidFaultSetError):
            delete_elements(cycle(4), FaultSet.of(vertices=[7]))
        with pytest.raises(InvalidFaultSetError):
            delete_elements(cycle(4), FaultSet.of(edges=[(0, 2)]))

    def test_covered_edge_fault_is_redundant(self):
        g = complete(4)
        with_both = delete_elements(g, FaultSet.of(vertices=[0], edges=[(0, 1)]))
        dropped = delete_elements(g, FaultSet.of(vertices=[0]))
        assert with_both == dropped

    def test_surviving_vertices_order(self):
        assert surviving_vertices(cycle(5), FaultSet.of(vertices=[1, 3])) == (0, 2, 4)


class TestDistances:
    def test_examples(self):
        assert distance(cycle(4), 0, 2) == 2
        assert distance(complete_minus_edge(4), 0, 1) == 2
        two_parts = Graph(4, [(0, 1), (2, 3)])
        assert distance(two_parts, 0, 3) == INFINITE
        assert distance(cycle(4), 3, 3) == 0

    def test_diameters(self):
        for n in (2, 3, 5):
            assert diameter(complete(n)) == 1
        assert diameter(cycle(4)) == 2
        assert diameter(Graph(1)) == INFINITE
        assert diameter(Graph(3, [(0, 1)])) == INFINITE

    @settings(max_examples=120, deadline=None)
    @given(graphs())
    def test_distance_symmetry_and_triangle(self, g):
        for u in g.vertices():
            for v in g.vertices():
                duv = distance(g, u, v)
                assert duv == distance(g, v, u)
                for w in g.vertices():
                    assert duv <= distance(g, u, w) + distance(g, w, v)

    @settings(max_examples=80, deadline=None)
    @given(graphs())
    def test_diameter_matches_networkx(self, g):
        if is_connected(g):
            assert diameter(g) == nx.diameter(to_nx(g))

    def test_shortest_path_is_deterministic_and_valid(self):
        g = cycle(6)
        p = shortest_path(g, 0, 3)
        assert p == PathSeq((0, 1, 2, 3))  # ascending tie-break
        p = shortest_path(g, 0, 3, forbidden_vertices=[1])
        assert p == PathSeq((0, 5, 4, 3))
        assert shortest_path(g, 0, 3, forbidden_edges=[(0, 1), (0, 5)]) is None
        with pytest.raises(ValueError):
            shortest_path(g, 0, 3, forbidden_vertices=[0])


class TestConnectivity:
    @pytest.mark.parametrize("g,kappa", [
        (complete(4), 3),
        (cycle(4), 2),
        (complete_minus_edge(4), 2),
        (Graph(1), 0),
        (Graph(4, [(0, 1), (2, 3)]), 0),
        (hypercube(3), 3),
    ])
    def test_vertex_connectivity(self, g, kappa):
        assert vertex_connectivity(g) == kappa

    @pytest.mark.parametrize("g,lam", [
        (cycle(5), 2),
        (complete(4), 3),
        (Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]), 1),
        (hypercube(3), 3),
    ])
    def test_edge_connectivity(self, g, lam):
        assert edge_connectivity(g) == lam

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=2, max_n=7))
    def test_connectivities_match_networkx(self, g):
        h = to_nx(g)
        expected_kappa = nx.node_connectivity(h) if nx.is_connected(h) and g.n > 1 else 0
        expected_lambda = nx.edge_connectivity(h) if nx.is_connected(h) and g.n > 1 else 0
        if g.n == 1:
            expected_kappa = expected_lambda = 0
        assert vertex_connectivity(g) == expected_kappa
        assert edge_connectivity(g) == expected_lambda

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=3, max_n=7))
    def test_flow_fallback_agrees_with_enumeration(self, g):
        # cap=0 forces the max-flow route
        assert vertex_connectivity(Graph(g.n, g.edges), cap=0) == \
            vertex_connectivity(Graph(g.n, g.edges))
        assert edge_connectivity(Graph(g.n, g.edges), cap=0) == \
            edge_connectivity(Graph(g.n, g.edges))

    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_kappa_le_lambda_le_delta(self, g):
        if is_connected(g):
            assert (vertex_connectivity(g) <= edge_connectivity(g)
                    <= minimum_degree(g))

    def test_minimum_cuts_disconnect(self):
        for g in (cycle(5), complete_minus_edge(4), hypercube(3), GLUED_K4S):
            vcut = min_vertex_cut(g)
            assert len(vcut) == vertex_connectivity(g)
            assert not is_connected(delete_elements(g, FaultSet(vertex_faults=vcut)))
            ecut = min_edge_cut(g)
            assert len(ecut) == edge_connectivity(g)
            assert not is_connected(delete_elements(g, FaultSet(edge_faults=ecut)))


class TestMixedConnectivity:
    def test_base_cases(self):
        assert is_mixed_connected(cycle(4), 0, 0)
        assert not is_mixed_connected(Graph(4, [(0, 1), (2, 3)]), 0, 0)
        with pytest.raises(ValueError):
            is_mixed_connected(Graph(1), 0, 0)

    def test_c4_is_not_1_1_connected(self):
        # remove any vertex leaving P3, then its middle edge
        assert not is_mixed_connected(cycle(4), 1, 1)

    def test_hand_built_gap_instances(self):
        for g, expected in ((GLUED_K4S, True), (BRIDGED_K4S, False)):
            assert vertex_connectivity(g) == 2
            assert edge_connectivity(g) == 3
            assert is_mixed_connected(g, 1, 1) is expected

    def test_exhaustive_matches_definition(self):
        g = GLUED_K4S
        for p, q in [(1, 1), (0, 2), (1, 0)]:
            expected = all(
                is_connected(delete_elements(
                    g, FaultSet(vertex_faults=frozenset(xs),
                                edge_faults=frozenset(ys))))
                for xs in _subsets(range(g.n), p)
                for ys in _subsets(g.edges, q)
            )
            assert is_mixed_connected(g, p, q) is expected

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=3, max_n=6), st.integers(0, 2), st.integers(0, 2))
    def test_monotone_in_both_arguments(self, g, p, q):
        if g.n == 1 or not is_connected(g):
            return
        if is_mixed_connected(g, p, q):
            for pp in range(p + 1):
                for qq in range(q + 1):
                    assert is_mixed_connected(g, pp, qq)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=3, max_n=6), st.integers(1, 2), st.integers(0, 2))
    def test_vertex_to_edge_fault_trade(self, g, p, q):
        if g.n == 1 or not is_connected(g):
            return
        if is_mixed_connected(g, p, q):
            assert is_mixed_connected(g, p - 1, q + 1)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=3, max_n=6), st.integers(0, 3), st.integers(0, 3))
    def test_necessary_conditions(self, g, p, q):
        if g.n == 1 or not is_connected(g):
            return
        if is_mixed_connected(g, p, q):
            assert p < vertex_connectivity(g)
            assert p + q < edge_connectivity(g)

    def test_connectivity_pairs(self):
        assert is_connectivity_pair(cycle(4), 2, 0)
        assert is_connectivity_pair(complete(4), 3, 0)
        assert is_connectivity_pair(BRIDGED_K4S, 1, 1)
        assert not is_connectivity_pair(GLUED_K4S, 1, 1)
        assert not is_connectivity_pair(cycle(4), 1, 0)


def _subsets(pool, k):
    from itertools import combinations

    return combinations(tuple(pool), k)


class TestGenerators:
    def test_named_instances(self):
        g = complete_minus_edge(4)
        assert (g.n, g.edge_count) == (4, 5)
        g = circulant(16, [1, 4])
        assert (g.n, g.edge_count) == (16, 32)
        g = hypercube(3)
        assert (g.n, g.edge_count, diameter(g)) == (8, 12, 3)

    def test_dispatcher(self):
        assert generate("cycle", [5]) == cycle(5)
        assert generate("circulant", [8, 1, 3]) == circulant(8, [1, 3])
        with pytest.raises(ValueError):
            generate("cycle", [2])
        with pytest.raises(ValueError):
            generate("torus", [4])
        with pytest.raises(ValueError):
            generate("circulant", [8])

    def test_circulant_validation(self):
        with pytest.raises(ValueError):
            circulant(8, [0])
        with pytest.raises(ValueError):
            circulant(8, [5])
        with pytest.raises(ValueError):
            circulant(8, [1, 1])
        # step n/2 folds onto itself without duplicating edges
        assert circulant(6, [3]).edge_count == 3


class TestEdgeListFormat:
    def test_roundtrip(self):
        for g in (cycle(5), complete_minus_edge(4), Graph(3), GLUED_K4S):
            assert parse_edge_list(format_edge_list(g)) == g

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("m 4\n0 1\n", 1),
        ("n x\n", 1),
        ("n 3\n0\n", 2),
        ("n 3\n0 0\n", 2),
        ("n 3\n0 3\n", 2),
        ("n 3\n0 1\n1 0\n", 3),
        ("n 3\na b\n", 2),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(EdgeListFormatError) as err:
            parse_edge_list(text)
        assert err.value.line == line

    def test_header_count_is_binding(self):
        g = parse_edge_list("n 5\n0 1\n")
        assert g.n == 5 and g.edge_count == 1
