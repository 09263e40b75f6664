"""End-to-end smoke checks of the python extension module."""

import math

import pytest

import rieszbounds as rb


def test_version_and_exports():
    assert rb.__version__ == "0.1.0"
    for name in ("exact_bounds", "roots_of_unity", "kadec_bound", "mz_scan"):
        assert name in rb.__all__
        assert callable(getattr(rb, name))


def test_roots_of_unity_are_orthonormal():
    for d in (1, 2, 7, 32):
        eb = rb.exact_bounds(rb.roots_of_unity(d))
        assert eb.A == pytest.approx(1.0, abs=1e-10)
        assert eb.B == pytest.approx(1.0, abs=1e-10)
        assert eb.sigma_min == pytest.approx(math.sqrt(d), rel=1e-10)


def test_two_point_bounds_match_hand_computation():
    eb = rb.exact_bounds(rb.make_node_set([0.0, 0.25]))
    assert eb.A == pytest.approx((2.0 - math.sqrt(2.0)) / 2.0, abs=1e-12)
    assert eb.B == pytest.approx((2.0 + math.sqrt(2.0)) / 2.0, abs=1e-12)


def test_kadec_bound_values():
    assert rb.kadec_bound(0.0) == pytest.approx(1.0, abs=1e-15)
    assert rb.kadec_bound(0.125) == pytest.approx(
        (2.0 - math.sqrt(2.0)) / 2.0, abs=1e-12
    )
    assert rb.kadec_bound(0.25) == 0.0
    with pytest.raises(ValueError):
        rb.kadec_bound(0.3)


def test_counterexample_family_golden_value():
    eb = rb.exact_bounds(rb.counterexample_family(5))
    assert eb.A == pytest.approx(0.24606705220292865, abs=1e-8)


def test_displaced_lattices_dominate_the_closed_form():
    rep = rb.mz_kadec_verify(list(range(1, 9)), 0.2, 2, 424242)
    assert rep.checks == 16
    assert rep.failures == 0
    assert rep.min_margin_log > 0.0


def test_scan_aggregates_are_consistent():
    rep = rb.mz_scan(rb.canonical_family(), [1, 2, 4, 8])
    assert rep.fail_count == 0
    assert rep.A_inf <= 1.0 + 1e-12 <= rep.B_sup + 2e-12
    for rec in rep.records:
        assert rec.A == pytest.approx(1.0, abs=1e-10)


def test_weight_and_phase_diagnostics():
    spec = rb.to_line(rb.roots_of_unity(4))
    assert rb.a2_constant(spec, 2.0) >= 1.0 - 1e-12
    ext = rb.weight_extrema(spec, 0.5)
    assert 0.0 < ext.min <= ext.max
    assert rb.phase_alpha(spec, 1.0).period_closure <= 1e-8


def test_invalid_nodes_raise():
    with pytest.raises(ValueError):
        rb.make_node_set([])
    with pytest.raises(ValueError):
        rb.make_node_set([0.1, 0.1])
    with pytest.raises(ValueError):
        rb.parse_node_spec("roots:zebra")
