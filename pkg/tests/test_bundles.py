"""Products, bundles, twists, projections, lifts, and the bundle format."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bundlefd import (
    Bundle,
    EdgeListFormatError,
    Graph,
    PathSeq,
    build_bundle,
    canonical_edge,
    cartesian_product,
    complete,
    complete_minus_edge,
    compose_permutations,
    cycle,
    cycle_reflection,
    cycle_rotation,
    diameter,
    dihedral_automorphisms,
    fibre_of,
    format_bundle,
    graph_automorphisms,
    hypercube,
    identity_permutation,
    invert_permutation,
    is_automorphism,
    is_degenerate_edge,
    lift_endpoint,
    lift_path,
    parse_bundle,
    path_graph,
    product_bundle,
    projection,
    shortest_path,
    transport,
    twisted_torus,
    validate_bundle,
)
from conftest import random_bundle


class TestPermutations:
    def test_compose_and_invert(self):
        p = cycle_rotation(4, 1)
        assert compose_permutations(p, invert_permutation(p)) == (0, 1, 2, 3)
        assert compose_permutations(p, p) == cycle_rotation(4, 2)

    def test_automorphism_check(self):
        c4 = cycle(4)
        assert is_automorphism(c4, cycle_rotation(4, 3))
        assert is_automorphism(c4, cycle_reflection(4, 2))
        assert not is_automorphism(c4, (0, 2, 1, 3))
        assert not is_automorphism(c4, (0, 1, 2))

    def test_dihedral_group_of_cycle(self):
        names = [name for name, _ in dihedral_automorphisms(4)]
        assert len(names) == 8 and names[0] == "rot0"
        assert set(p for _, p in dihedral_automorphisms(4)) == \
            set(graph_automorphisms(cycle(4)))

    def test_automorphism_counts(self):
        assert len(graph_automorphisms(complete(4))) == 24
        assert len(graph_automorphisms(complete_minus_edge(4))) == 4
        assert len(graph_automorphisms(hypercube(3))) == 48


class TestCartesianProduct:
    def test_k2_box_k2_is_c4(self):
        g = cartesian_product(complete(2), complete(2))
        relabel = [0, 1, 3, 2]  # explicit isomorphism onto cycle(4)
        mapped = {canonical_edge(relabel[u], relabel[v]) for u, v in g.edges}
        assert mapped == set(cycle(4).edges)

    def test_edge_count_formula(self):
        g1, g2 = complete_minus_edge(4), complete_minus_edge(4)
        p = cartesian_product(g1, g2)
        assert p.n == 16
        assert p.edge_count == g1.n * g2.edge_count + g2.n * g1.edge_count == 40

    def test_torus_diameter(self):
        assert diameter(cartesian_product(cycle(4), cycle(4))) == 4

    def test_product_bundle_matches_product(self):
        for g1, g2 in [(cycle(3), complete(2)), (complete_minus_edge(4), cycle(4))]:
            assert product_bundle(g1, g2).total == cartesian_product(g1, g2)


class TestBuildBundle:
    def test_identity_twists_over_tree_base(self):
        b = build_bundle(path_graph(4), cycle(5), {})
        assert b.total == cartesian_product(path_graph(4), cycle(5))
        assert validate_bundle(b)

    def test_twisted_tree_base_is_isomorphic_to_product(self):
        # relabeling each fibre by the inverse transport from the root
        # turns any bundle over a tree base into the plain product
        base, fibre = path_graph(3), cycle(4)
        b = build_bundle(base, fibre, {(1, 2): cycle_rotation(4, 1)})
        product = cartesian_product(base, fibre)
        sigma = {}
        for v in base.vertices():
            walk = list(range(v + 1))  # path 0..v in the path base
            sigma[v] = invert_permutation(transport(b, walk)) if v else \
                identity_permutation(fibre.n)
        mapped = set()
        for u, v in b.total.edges:
            bu, fu = b.coords(u)
            bv, fv = b.coords(v)
            mapped.add(canonical_edge(bu * fibre.n + sigma[bu][fu],
                                      bv * fibre.n + sigma[bv][fv]))
        assert mapped == set(product.edges)

    def test_rotation_twist_gives_circulant(self):
        # explicit isomorphism (base, fibre) -> base + 4*fibre mod 16
        from bundlefd import circulant

        tt = twisted_torus(4, cycle_rotation(4, 1))
        mapped = set()
        for u, v in tt.total.edges:
            bu, fu = tt.coords(u)
            bv, fv = tt.coords(v)
            mapped.add(canonical_edge((bu + 4 * fu) % 16, (bv + 4 * fv) % 16))
        assert mapped == set(circulant(16, [1, 4]).edges)

    def test_non_automorphism_twist_rejected(self):
        with pytest.raises(ValueError):
            twisted_torus(4, (0, 2, 1, 3))
        with pytest.raises(ValueError):
            build_bundle(cycle(3), cycle(4), {(0, 1): (1, 0, 2)})

    def test_inverse_consistency_enforced(self):
        rot = cycle_rotation(4, 1)
        with pytest.raises(ValueError):
            build_bundle(cycle(3), cycle(4), {(0, 1): rot, (1, 0): rot})
        b = build_bundle(cycle(3), cycle(4),
                         {(0, 1): rot, (1, 0): invert_permutation(rot)})
        assert validate_bundle(b)

    def test_twist_key_must_be_base_edge(self):
        with pytest.raises(ValueError):
            build_bundle(cycle(4), cycle(4), {(0, 2): identity_permutation(4)})

    def test_reflection_twist_is_valid(self):
        assert validate_bundle(twisted_torus(4, cycle_reflection(4, 0)))


class TestProjectionAndFibres:
    def test_projection_cases(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        v = tt.vertex_id(2, 3)
        assert projection(tt, v) == 2
        deg = (tt.vertex_id(1, 0), tt.vertex_id(1, 1))
        assert projection(tt, deg) == 1
        assert is_degenerate_edge(tt, deg)
        nondeg = (tt.vertex_id(3, 0), tt.vertex_id(0, 1))
        assert projection(tt, nondeg) == (0, 3)
        assert not is_degenerate_edge(tt, nondeg)

    def test_projection_unknown_elements(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        with pytest.raises(ValueError):
            projection(tt, 99)
        with pytest.raises(ValueError):
            projection(tt, (0, 5))  # not an edge of the total graph

    def test_fibre_of_returns_fibre_copy(self):
        b = build_bundle(cycle(4), complete_minus_edge(4),
                         {(3, 0): (1, 0, 2, 3)})
        for u in b.base.vertices():
            assert fibre_of(b, u) == b.fibre
        with pytest.raises(ValueError):
            fibre_of(b, 9)

    def test_fibres_partition_total(self):
        b = product_bundle(cycle(3), cycle(4))
        ids = [
            {b.vertex_id(u, f) for f in b.fibre.vertices()}
            for u in b.base.vertices()
        ]
        assert set().union(*ids) == set(b.total.vertices())
        assert sum(len(s) for s in ids) == b.total.n


class TestLifts:
    def test_identity_bundle_preserves_fibre_coordinate(self):
        b = product_bundle(cycle(5), cycle(4))
        q = PathSeq((0, 1, 2, 3))
        for f in b.fibre.vertices():
            lift = lift_path(b, q, b.vertex_id(0, f))
            assert [b.coords(v)[1] for v in lift.vertices] == [f] * 4

    def test_lift_length_and_projection(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        q = PathSeq((0, 1, 2, 3))
        lift = lift_path(tt, q, tt.vertex_id(0, 2))
        assert lift.length == q.length
        assert tuple(tt.coords(v)[0] for v in lift.vertices) == q.vertices

    def test_distinct_start_lifts_are_disjoint(self):
        tt = twisted_torus(4, cycle_reflection(4, 1))
        q = PathSeq((0, 1, 2))
        lifts = [lift_path(tt, q, tt.vertex_id(0, f)).vertices
                 for f in range(4)]
        for i in range(4):
            assert lifts[i] == lift_path(tt, q, tt.vertex_id(0, i)).vertices
            for j in range(i + 1, 4):
                assert not set(lifts[i]) & set(lifts[j])

    def test_transport_around_twisted_cycle(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        perm = transport(tt, [0, 1, 2, 3, 0])
        assert perm == cycle_rotation(4, 1)
        # so the wraparound walk lands one fibre step over
        assert perm[0] == 1

    def test_lift_endpoint_example(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        q = PathSeq((0, 3))  # crossing the twisted wraparound edge backwards
        end = lift_endpoint(tt, q, tt.vertex_id(0, 0))
        assert tt.coords(end) == (3, 3)  # rot1 inverse moves one step back

    def test_lift_requires_matching_start(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        with pytest.raises(ValueError):
            lift_path(tt, PathSeq((0, 1)), tt.vertex_id(2, 0))


class TestValidateBundle:
    def test_constructed_bundles_validate(self, rng):
        for _ in range(10):
            b, _, _ = random_bundle(rng, max_total_vertices=24)
            assert validate_bundle(b)

    def test_missing_fibre_edge_detected(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        victim = (tt.vertex_id(1, 0), tt.vertex_id(1, 1))
        mutated = Graph(tt.total.n,
                        [e for e in tt.total.edges if e != victim])
        assert not validate_bundle(Bundle(tt.base, tt.fibre, tt.twists, mutated))

    def test_rewired_nondegenerate_edge_detected(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        out = (tt.vertex_id(3, 0), tt.vertex_id(0, 1))  # matches rot1
        wrong = (tt.vertex_id(3, 0), tt.vertex_id(0, 2))
        assert tt.total.has_edge(*out)
        edges = [e for e in tt.total.edges if e != canonical_edge(*out)]
        edges.append(wrong)
        assert not validate_bundle(
            Bundle(tt.base, tt.fibre, tt.twists, Graph(tt.total.n, edges)))

    def test_wrong_vertex_count_detected(self):
        tt = twisted_torus(4, cycle_rotation(4, 1))
        assert not validate_bundle(
            Bundle(tt.base, tt.fibre, tt.twists, Graph(17)))


class TestBundleFormat:
    def test_roundtrip(self, rng):
        for _ in range(5):
            b, _, _ = random_bundle(rng, max_total_vertices=24)
            again = parse_bundle(format_bundle(b))
            assert again.total == b.total
            assert again.twists == b.twists

    def test_omitted_twists_default_to_identity(self):
        text = "BASE\nn 3\n0 1\n1 2\n0 2\nFIBRE\nn 3\n0 1\n1 2\n0 2\n"
        b = parse_bundle(text + "TWISTS\n")
        assert b.total == cartesian_product(cycle(3), cycle(3))
        b2 = parse_bundle(text)  # TWISTS section itself may be omitted
        assert b2.total == b.total

    @pytest.mark.parametrize("text,line", [
        ("FIBRE\nn 2\n0 1\n", 1),
        ("BASE\nn 2\n0 1\nFIBRE\nn 2\n0 0\n", 6),
        ("BASE\nn 2\n0 1\nFIBRE\nn 2\n0 1\nTWISTS\n0 1 1 0\n", 8),
        ("BASE\nn 2\n0 1\nFIBRE\nn 2\n0 1\nTWISTS\n0 1 : 1 0\n0 1 : 0 1\n", 9),
    ])
    def test_format_errors_carry_line_numbers(self, text, line):
        with pytest.raises(EdgeListFormatError) as err:
            parse_bundle(text)
        assert err.value.line == line

    def test_invalid_twist_rejected_at_build(self):
        text = ("BASE\nn 3\n0 1\n1 2\n0 2\nFIBRE\nn 4\n0 1\n1 2\n2 3\n0 3\n"
                "TWISTS\n0 1 : 0 2 1 3\n")
        with pytest.raises(EdgeListFormatError):
            parse_bundle(text)
