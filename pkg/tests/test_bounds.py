"""Theorem checks: verdicts on the known instances, hypothesis handling,
violation witnesses, and report serialization."""

import json

import pytest

from bundlefd import (
    Bundle,
    Graph,
    TheoremId,
    Verdict,
    check_baseline_bounds,
    check_diameter_decomposition,
    check_efd_improved,
    check_mixed_connectivity_bound,
    check_mixed_fd_bounds,
    check_vfd_improved,
    complete,
    complete_minus_edge,
    cycle,
    cycle_rotation,
    delete_elements,
    diameter,
    dihedral_automorphisms,
    identity_permutation,
    product_bundle,
    twisted_torus,
)

K4E_PRODUCT = product_bundle(complete_minus_edge(4), complete_minus_edge(4))


class TestVfdImproved:
    def test_tight_on_k4e_product(self):
        r = check_vfd_improved(K4E_PRODUCT, 1, 1)
        assert r.verdict == Verdict.HOLDS_WITH_EQUALITY
        assert r.lhs == r.rhs == 4

    def test_cycle_fibre_fails_hypothesis(self):
        # one edge fault already beats one vertex fault on C4
        for twist in (identity_permutation(4), cycle_rotation(4, 1)):
            r = check_vfd_improved(twisted_torus(4, twist), 1, 1)
            assert r.verdict == Verdict.HYPOTHESIS_UNMET
            failed = {name for name, ok in r.hypotheses if not ok}
            assert "fibre_mixed_fd_le_vertex_fd" in failed
            assert r.lhs is not None and r.rhs is not None

    def test_complete_factors_fail_hypothesis(self):
        r = check_vfd_improved(product_bundle(complete(4), complete(4)), 1, 1)
        assert r.verdict == Verdict.HYPOTHESIS_UNMET

    def test_requires_positive_faults(self):
        with pytest.raises(ValueError):
            check_vfd_improved(K4E_PRODUCT, 0, 1)


class TestEfdImproved:
    def test_k4e_product(self):
        r = check_efd_improved(K4E_PRODUCT, 1, 1)
        assert r.holds and r.rhs == 4

    def test_complete_graph_exception(self):
        r = check_efd_improved(product_bundle(complete(4), complete(4)), 0, 0)
        assert r.verdict == Verdict.HYPOTHESIS_UNMET
        failed = {name for name, ok in r.hypotheses if not ok}
        assert failed == {"fibre_edge_fd_ge_2", "base_edge_fd_ge_2"}

    def test_twisted_torus(self):
        r = check_efd_improved(twisted_torus(4, cycle_rotation(4, 1)), 1, 1)
        assert r.holds and r.rhs == 6


class TestBaselines:
    def test_twisted_torus_tight_for_some_twist(self):
        tight = []
        for name, perm in dihedral_automorphisms(4):
            r = check_baseline_bounds(twisted_torus(4, perm), 1, 1, "vertex")
            assert r.holds
            assert r.rhs == 5
            if r.verdict == Verdict.HOLDS_WITH_EQUALITY:
                tight.append(name)
        assert tight  # the +1 bound is attained by at least one twist

    def test_k4e_product_has_slack(self):
        r = check_baseline_bounds(K4E_PRODUCT, 1, 1, "vertex")
        assert r.verdict == Verdict.HOLDS and r.lhs == 4 and r.rhs == 5

    def test_edge_baseline_on_torus(self):
        r = check_baseline_bounds(product_bundle(cycle(4), cycle(4)),
                                  0, 0, "edge")
        assert r.holds and r.lhs == 4 and r.rhs == 5

    def test_kind_validation(self):
        with pytest.raises(ValueError):
            check_baseline_bounds(K4E_PRODUCT, 1, 1, "mixed")


class TestMixedConnectivity:
    def test_torus_is_three_zero_connected(self):
        r = check_mixed_connectivity_bound(product_bundle(cycle(4), cycle(4)),
                                           1, 0, 1, 0)
        assert r.verdict == Verdict.HOLDS
        assert r.params["p_total"] == 3 and r.params["q_total"] == 0
        assert r.lhs is None and r.rhs is None

    def test_k2_fibre(self):
        r = check_mixed_connectivity_bound(
            product_bundle(cycle(4), complete(2)), 0, 0, 1, 0)
        assert r.verdict == Verdict.HOLDS

    def test_k4e_factors_with_edge_share(self):
        r = check_mixed_connectivity_bound(K4E_PRODUCT, 1, 0, 0, 1)
        assert r.verdict == Verdict.HOLDS
        assert r.params["p_total"] == 2 and r.params["q_total"] == 1

    def test_unmet_hypothesis_reported(self):
        # K4-e is not (1,1)+connected
        r = check_mixed_connectivity_bound(K4E_PRODUCT, 1, 1, 0, 0)
        assert r.verdict == Verdict.HYPOTHESIS_UNMET


class TestMixedFd:
    def test_twisted_torus_fibre_side(self):
        r = check_mixed_fd_bounds(twisted_torus(4, cycle_rotation(4, 1)),
                                  0, 1, "fibre")
        assert r.holds and r.rhs == 5

    def test_torus_base_side_q0(self):
        r = check_mixed_fd_bounds(product_bundle(cycle(4), cycle(4)),
                                  1, 0, "base")
        assert r.holds and r.rhs == 5

    def test_diameter_one_other_factor_unmet(self):
        r = check_mixed_fd_bounds(product_bundle(complete(2), cycle(4)),
                                  0, 1, "fibre")
        assert r.verdict == Verdict.HYPOTHESIS_UNMET

    def test_needs_positive_budgeted_faults(self):
        with pytest.raises(ValueError):
            check_mixed_fd_bounds(K4E_PRODUCT, 0, 0, "fibre")
        with pytest.raises(ValueError):
            check_mixed_fd_bounds(K4E_PRODUCT, 1, 0, "diagonal")


class TestDiameterDecomposition:
    def test_equality_chain_on_torus(self):
        r = check_diameter_decomposition(product_bundle(cycle(4), cycle(4)))
        assert r.verdict == Verdict.HOLDS_WITH_EQUALITY
        assert r.extras["equality_chain"] is True

    def test_rotation_twist_breaks_equality_but_not_bound(self):
        r = check_diameter_decomposition(twisted_torus(4, cycle_rotation(4, 1)))
        assert r.verdict == Verdict.HOLDS
        assert r.lhs == 3 and r.rhs == 4
        assert r.extras["equality_chain"] is False

    def test_trivial_factors_unmet(self):
        r = check_diameter_decomposition(product_bundle(complete(2), complete(2)))
        assert r.verdict == Verdict.HYPOTHESIS_UNMET


class TestViolationWitness:
    def test_corrupted_bundle_record_yields_recheckable_witness(self):
        # strip the total graph down to a path; the record is no longer a
        # bundle, so the unconditional bound fails and must carry evidence
        tt = twisted_torus(4, cycle_rotation(4, 1))
        sparse = Graph(16, [(i, i + 1) for i in range(15)])
        fake = Bundle(tt.base, tt.fibre, tt.twists, sparse)
        r = check_baseline_bounds(fake, 1, 1, "vertex")
        assert r.verdict == Verdict.VIOLATED
        assert r.witness is not None
        assert diameter(delete_elements(sparse, r.witness)) == r.lhs
        assert r.lhs > r.rhs


class TestSerialization:
    def test_lines_are_stable_and_complete(self):
        r = check_vfd_improved(K4E_PRODUCT, 1, 1)
        lines = r.to_lines()
        assert lines == check_vfd_improved(K4E_PRODUCT, 1, 1).to_lines()
        joined = "\n".join(lines)
        assert "theorem=VFD_IMPROVED" in joined
        assert "verdict=HOLDS_WITH_EQUALITY" in joined
        assert "param.total_hash=" in joined
        assert "lhs=4" in joined and "rhs=4" in joined

    def test_json_roundtrips_and_encodes_infinity(self):
        r = check_vfd_improved(twisted_torus(4, cycle_rotation(4, 1)), 1, 1)
        payload = json.loads(json.dumps(r.to_json_dict()))
        assert payload["verdict"] == "HYPOTHESIS_UNMET"
        assert payload["theorem"] == "VFD_IMPROVED"
        r2 = check_mixed_connectivity_bound(
            product_bundle(cycle(4), cycle(4)), 1, 0, 1, 0)
        payload = r2.to_json_dict()
        assert payload["lhs"] is None and payload["extras"]["total_mixed_connected"]

    def test_every_theorem_id_serializes(self):
        assert {t.value for t in TheoremId} == {
            "VFD_IMPROVED", "EFD_IMPROVED", "VFD_PLUS_ONE", "EFD_PLUS_ONE",
            "MIXED_CONN", "MIXED_FD_FIBRE", "MIXED_FD_BASE", "DIAM_DECOMP",
        }
