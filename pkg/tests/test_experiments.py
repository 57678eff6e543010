import numpy as np
import pytest

from blaschke import experiments

A = 0.5j


def test_compute_r_trend_and_conjugation():
    rs = {}
    for mod in (1e-6, 1e-8):
        lam = mod * np.exp(0.7j)
        rs[mod] = experiments.compute_r(A, lam)
    # containment depth never decreases as lam shrinks
    assert rs[1e-8] >= rs[1e-6]
    lam = 1e-6 * np.exp(0.7j)
    assert experiments.compute_r(A.conjugate(), lam.conjugate()) == rs[1e-6]


def test_compute_s_t_degenerate_single_sample():
    rec = experiments.compute_s_t(A, 3e-5, n_angles=1, n_levels=1)
    lam = 3e-5 + 0j
    r = experiments.compute_r(A, lam)
    assert rec.s == rec.t == r
    assert rec.excluded == 0


def test_rts_circle_bracket():
    rec = experiments.compute_s_t(A, 3e-5, n_angles=4, n_levels=2)
    for (lr, li), r in rec.r_values.items():
        if abs(abs(complex(lr, li)) - 3e-5) < 1e-12:
            assert rec.t <= r <= rec.s


def test_asymptotics_sequence():
    rep = experiments.asymptotics_check(0.5, [1e-5, 1e-6, 1e-8])
    assert rep["zeroErrorsDecreasing"]
    assert rep["criticalErrorsDecreasing"]
    first = rep["rows"][0]
    assert first["zeroMagnitude"] == pytest.approx((2e-5) ** 0.2, rel=0.05)
    assert first["criticalMagnitude"] == pytest.approx((2e-5 / 1.5) ** 0.2, rel=0.05)
    gaps = rep["rows"][-1]["pentagonGapsDeg"]
    assert all(abs(g - 72.0) <= 1.0 for g in gaps)


def test_boundary_continuity():
    rep = experiments.boundary_continuity_check(A, 1e-6, 1e-6, n_halvings=3)
    assert rep["nonincreasing"]
    dists = [r["hausdorff"] for r in rep["rows"]]
    assert dists[-1] < 0.05
    # identical parameters give distance zero
    pts = experiments._astar_points(A, 1e-6)
    assert experiments.hausdorff(pts, pts) == 0.0
    # near lam = 0 the boundary hugs the unit circle
    rep8 = experiments.boundary_continuity_check(A, 1e-8, 5e-9, n_halvings=1)
    assert rep8["unitCircleGap"] <= 0.05


def test_detect_rings_low_confidence_flag():
    bands = experiments.detect_rings(A, 3e-5, n_radii=6, n_angles=4, decades=1.0,
                                     verify_resolution=256)
    assert all(b.low_confidence for b in bands)


def test_quick_param_record_matches_case_a():
    rec = experiments.quick_param_record(A, -1.9e-6 + 3.15e-5j)
    assert rec[0] == 1
    label = experiments._record_label(rec)
    assert label.startswith("D")


def test_cached_dynamical_reuses():
    g1 = experiments.cached_dynamical(A, 1e-6, resolution=64, max_iter=300)
    g2 = experiments.cached_dynamical(A, 1e-6, resolution=64, max_iter=300)
    assert g1 is g2


@pytest.fixture(scope="module")
def search_box():
    from blaschke import raster

    def make(center, width=6e-6):
        return raster.PlaneSpec(center=center, width=width, resolution=64,
                                plane_kind=raster.PARAMETER, a=A)
    return make


@pytest.mark.parametrize("case,lam", [
    ("a", -1.9e-6 + 3.15e-5j),
    ("b", 9.5e-7 + 3.05e-5j),
    ("c", 7.74e-6 + 9.9e-6j),
])
def test_find_case_near_reference_values(search_box, case, lam):
    report = experiments.find_case(A, case, search_box(lam), resolution=512)
    assert report.case == case
    assert experiments._matches_case(report.evidence, case)
    # the found parameter stays within the searched box
    assert abs(report.lam - lam) <= 1.2 * 6e-6
