import json

import pytest

from idemgraph.graphs import build_idempotent_graph
from idemgraph.rings import build_ring, primitive_idempotents
from idemgraph.theorems import (
    cross_validate,
    predict_all,
    predict_cactus,
    predict_cograph,
    predict_connected,
    predict_outerplanar,
    predict_path,
    predict_planar,
    predict_split,
    predict_threshold,
    predict_unicyclic,
    verify_component_structure,
    verify_degree_formula,
)


class TestConnectivityAndPath:
    @pytest.mark.parametrize(
        "spec,expected",
        [("Z6", True), ("GF(4)", False), ("Z2 * Z2", True), ("Z9", True), ("Z3[x]/(x^2)", False)],
    )
    def test_predict_connected(self, spec, expected):
        assert predict_connected(build_ring(spec)) is expected

    @pytest.mark.parametrize(
        "spec,expected",
        [("Z9", True), ("Z6", False), ("Z2", True), ("GF(4)", False), ("Z4", True)],
    )
    def test_predict_path(self, spec, expected):
        assert predict_path(build_ring(spec)) is expected


class TestPlanarityPrediction:
    def test_paper_examples_not_planar(self):
        assert predict_planar(build_ring("Z3[x]/(x^2) * Z2")) is False
        assert predict_planar(build_ring("Z3[x]/(x^2) * Z3")) is False
        assert predict_planar(build_ring("Z3[x]/(x^2) * Z3[x]/(x^2)")) is False

    def test_both_char_two(self):
        assert predict_planar(build_ring("GF(4) * Z2")) is True

    def test_three_factors_never_planar(self):
        assert predict_planar(build_ring("Z2 * Z2 * Z2")) is False

    def test_local_not_applicable(self):
        assert predict_planar(build_ring("Z9")) is None

    def test_both_generated(self):
        assert predict_planar(build_ring("Z4 * Z9")) is True

    def test_one_generated_other_char_two(self):
        assert predict_planar(build_ring("Z9 * GF(4)")) is True

    def test_factor_order_invariant(self):
        for a, b in [("Z2", "Z4"), ("Z9", "GF(4)"), ("Z3[x]/(x^2)", "Z3")]:
            assert predict_planar(build_ring(f"{a} * {b}")) == predict_planar(
                build_ring(f"{b} * {a}")
            )

    def test_hidden_decomposition_used_not_spec_shape(self):
        # Z6 entered as a single factor still decomposes to Z2 x Z3
        assert predict_planar(build_ring("Z6")) is True
        assert predict_planar(build_ring("Z2 * Z3")) is True


class TestAlwaysFalsePredicates:
    @pytest.mark.parametrize("spec", ["Z6", "Z2 * Z4"])
    def test_nonlocal_rings(self, spec):
        ring = build_ring(spec)
        assert predict_outerplanar(ring) is False
        assert predict_cactus(ring) is False
        assert predict_unicyclic(ring) is False

    def test_local_not_applicable_and_guard_matters(self):
        ring = build_ring("Z9")
        assert predict_outerplanar(ring) is None
        # G_Id(Z9) = P9 really is outerplanar, so the guard is load-bearing
        from idemgraph.recognizers import is_outerplanar

        assert is_outerplanar(build_idempotent_graph(ring)).value


class TestSplitThresholdPrediction:
    @pytest.mark.parametrize(
        "spec,expected",
        [("Z2 * Z2", True), ("Z2 * Z3", False), ("GF(4) * Z2", False), ("Z2 * Z2 * Z2", True)],
    )
    def test_examples(self, spec, expected):
        ring = build_ring(spec)
        assert predict_split(ring) is expected
        assert predict_threshold(ring) is expected

    def test_split_equals_threshold_everywhere(self):
        for spec in ["Z6", "Z2 * Z2", "Z4 * Z2", "Z9", "GF(4) * GF(8)", "Z30"]:
            ring = build_ring(spec)
            assert predict_split(ring) == predict_threshold(ring)
            if predict_split(ring) is not None:
                expected = all(p.factor_size == 2 for p in primitive_idempotents(ring))
                assert predict_split(ring) == expected


class TestCographPrediction:
    def test_all_char_two(self):
        assert predict_cograph(build_ring("GF(4) * GF(8)")) is True

    def test_z3_with_char_two_rest(self):
        assert predict_cograph(build_ring("Z3 * Z2")) is True
        assert predict_cograph(build_ring("Z3 * Z2 * GF(4)")) is True

    def test_negative_cases(self):
        assert predict_cograph(build_ring("Z4 * Z2")) is False
        assert predict_cograph(build_ring("Z3 * Z3")) is False
        assert predict_cograph(build_ring("Z3[x]/(x^2) * Z2")) is False

    def test_local_not_applicable(self):
        assert predict_cograph(build_ring("Z8")) is None


class TestDegreeFormula:
    def test_z6_exact_degrees(self):
        ring = build_ring("Z6")
        g = build_idempotent_graph(ring)
        assert verify_degree_formula(ring, g)
        assert [g.degree(v) for v in range(6)] == [3, 4, 3, 3, 4, 3]

    def test_z2xz2_all_degrees(self):
        ring = build_ring("Z2 * Z2")
        g = build_idempotent_graph(ring)
        assert verify_degree_formula(ring, g)
        assert all(g.degree(v) == 3 for v in range(4))

    def test_z9_path_degrees(self):
        ring = build_ring("Z9")
        g = build_idempotent_graph(ring)
        assert verify_degree_formula(ring, g)
        assert sorted(g.degree(v) for v in range(9)) == [1, 1, 2, 2, 2, 2, 2, 2, 2]


class TestComponentStructure:
    def test_z3_quotient(self):
        ring = build_ring("Z3[x]/(x^2)")
        assert verify_component_structure(ring, build_idempotent_graph(ring))

    def test_z9(self):
        ring = build_ring("Z9")
        assert verify_component_structure(ring, build_idempotent_graph(ring))

    def test_gf4(self):
        ring = build_ring("GF(4)")
        assert verify_component_structure(ring, build_idempotent_graph(ring))

    def test_precondition(self):
        ring = build_ring("Z6")
        with pytest.raises(ValueError):
            verify_component_structure(ring, build_idempotent_graph(ring))


class TestCrossValidate:
    @pytest.mark.parametrize(
        "spec",
        ["Z3[x]/(x^2) * Z3", "Z3[x]/(x^2) * Z3[x]/(x^2)", "Z2 * Z2", "Z6", "Z9", "GF(4) * Z2"],
    )
    def test_no_mismatches(self, spec):
        report = cross_validate(build_ring(spec))
        assert report.mismatches == []

    def test_example_planarity_both_ways(self):
        report = cross_validate(build_ring("Z3[x]/(x^2) * Z3")).to_dict()
        assert report["predicted"]["planar"] == "false"
        assert report["recognized"]["planar"] is False

    def test_z2xz2_report_values(self):
        d = cross_validate(build_ring("Z2 * Z2")).to_dict()
        for prop in ("split", "threshold", "cograph", "planar"):
            assert d["predicted"][prop] == "true" and d["recognized"][prop] is True
        assert d["predicted"]["outerplanar"] == "false"
        assert d["recognized"]["outerplanar"] is False

    def test_json_round_trip_is_byte_identical(self):
        rep = cross_validate(build_ring("Z6"))
        text = rep.to_json()
        assert json.dumps(json.loads(text), indent=2, sort_keys=True) == text

    def test_predict_all_split_threshold_consistency(self):
        for spec in ("Z6", "Z2 * Z2", "Z9", "Z4 * GF(4)"):
            p = predict_all(build_ring(spec))
            assert p.split == p.threshold
