import json

import numpy as np
import pytest

from blaschke import kernels, maps, raster
from blaschke.accel import get_workers, set_workers
from blaschke.errors import InvalidParamsError

A = 0.5j
LAM = -1.9e-6 + 3.15e-5j


@pytest.fixture(scope="module")
def small_grid():
    p = maps.MapParams.perturbed(A, LAM)
    spec = raster.PlaneSpec(center=0j, width=3.0, resolution=192, max_iter=800,
                            plane_kind=raster.DYNAMICAL, params=p)
    return raster.render_dynamical(spec)


def synthetic_grid(mask_builder, res=64):
    """RasterGrid with an escape background and a bounded-label mask."""
    p = maps.MapParams.perturbed(A, LAM)
    spec = raster.PlaneSpec(center=0j, width=2.0, resolution=res, max_iter=10,
                            plane_kind=raster.DYNAMICAL, params=p)
    kind = np.full((res, res), kernels.KIND_DIRECT, np.uint8)
    mask = mask_builder(res)
    kind[mask] = kernels.KIND_NONESCAPING
    z = np.zeros((res, res), np.int64)
    return raster.RasterGrid(
        spec=spec, kind=kind, esc=z.astype(np.int32), t0e=z.astype(np.int32),
        bits=z, blen=z.astype(np.int16), fin=z.astype(np.uint8),
        amb=z.astype(np.uint8), ovf=z.astype(np.uint8),
        precond_ok=np.ones((res, res), np.uint8))


def _disk(res):
    ii, jj = np.mgrid[0:res, 0:res]
    return (ii - res / 2) ** 2 + (jj - res / 2) ** 2 < (res / 5) ** 2


def _annulus(res):
    ii, jj = np.mgrid[0:res, 0:res]
    r2 = (ii - res / 2) ** 2 + (jj - res / 2) ** 2
    return ((res / 6) ** 2 < r2) & (r2 < (res / 3) ** 2)


def _two_holes(res):
    m = _disk(res).copy()
    ii, jj = np.mgrid[0:res, 0:res]
    for cx in (res / 2 - res / 12, res / 2 + res / 12):
        m &= ~(((ii - res / 2) ** 2 + (jj - cx) ** 2) < (res / 25) ** 2)
    return m


@pytest.mark.parametrize("builder,conn", [(_disk, 1), (_annulus, 2), (_two_holes, 3)])
def test_synthetic_connectivity(builder, conn):
    grid = synthetic_grid(builder)
    comps = [c for c in raster.label_components(grid) if c.fate_kind == "non-escaping"]
    assert len(comps) == 1
    assert comps[0].connectivity == conn


def test_pixel_mapping():
    p = maps.MapParams.perturbed(A, LAM)
    spec = raster.PlaneSpec(center=1 + 2j, width=4.0, resolution=16,
                            plane_kind=raster.DYNAMICAL, params=p)
    # top-left pixel center
    assert spec.pixel_value(0, 0) == pytest.approx(
        complex(1 + 4 * (0.5 / 16 - 0.5), 2 + 4 * (0.5 - 0.5 / 16)))
    # row-major top row has the largest imaginary part
    assert spec.pixel_value(0, 5).imag > spec.pixel_value(15, 5).imag
    i, j = spec.pixel_of(spec.pixel_value(7, 3))
    assert (i, j) == (7, 3)


def test_resolution_bounds():
    p = maps.MapParams.perturbed(A, LAM)
    with pytest.raises(InvalidParamsError):
        raster.PlaneSpec(center=0j, width=1.0, resolution=8,
                         plane_kind=raster.DYNAMICAL, params=p)
    with pytest.raises(InvalidParamsError):
        raster.PlaneSpec(center=0j, width=1.0, resolution=32768,
                         plane_kind=raster.DYNAMICAL, params=p)


def test_ppm_exact_bytes_2x2():
    # hand-built 2x2 label block: all direct escape with escape_time 0
    p = maps.MapParams.perturbed(A, LAM)
    z2 = np.zeros((2, 2), np.int64)
    g2 = raster.RasterGrid(
        spec=raster.PlaneSpec(center=0j, width=1.0, resolution=16,
                              plane_kind=raster.DYNAMICAL, params=p),
        kind=np.full((2, 2), kernels.KIND_DIRECT, np.uint8),
        esc=z2.astype(np.int32), t0e=z2.astype(np.int32), bits=z2,
        blen=z2.astype(np.int16), fin=z2.astype(np.uint8),
        amb=z2.astype(np.uint8), ovf=z2.astype(np.uint8),
        precond_ok=np.ones((2, 2), np.uint8))
    payload = raster.encode_image(g2)
    header = b"P6\n2 2\n255\n"
    assert payload.startswith(header)
    assert len(payload) == len(header) + 12
    # escape_time 0 with max normalization 1.0 -> pure red everywhere
    assert payload[len(header):] == bytes([255, 0, 0]) * 4


def test_palette_semantics(small_grid):
    payload = raster.encode_image(small_grid, palette="paper")
    res = small_grid.resolution
    rgb = np.frombuffer(payload.split(b"255\n", 1)[1], np.uint8).reshape(res, res, 3)
    bounded = small_grid.kind == kernels.KIND_NONESCAPING
    if bounded.any():
        assert np.all(rgb[bounded] == np.array([0, 255, 0], np.uint8))
    escaping = ~bounded
    assert np.all(rgb[escaping][:, 0] == 255)
    assert np.all(rgb[escaping][:, 2] == 0)
    # slowest escape renders yellow, fastest red
    esc = small_grid.esc[escaping]
    g = rgb[escaping][:, 1].astype(int)
    assert g[np.argmax(esc)] == 255
    assert g[np.argmin(esc)] == min(g)


def test_render_determinism_across_workers():
    p = maps.MapParams.perturbed(A, LAM)
    spec = raster.PlaneSpec(center=0j, width=3.0, resolution=96, max_iter=400,
                            plane_kind=raster.DYNAMICAL, params=p)
    before = get_workers()
    try:
        set_workers(1)
        g1 = raster.render_dynamical(spec)
        b1 = raster.encode_image(g1) + raster.encode_meta(g1)
        set_workers(max(2, before))
        g2 = raster.render_dynamical(spec)
        b2 = raster.encode_image(g2) + raster.encode_meta(g2)
    finally:
        set_workers(before)
    assert b1 == b2


def test_meta_schema(small_grid):
    doc = json.loads(raster.encode_meta(small_grid))
    assert set(doc) == {"spec", "engine", "components", "ambiguousPx"}
    spec = doc["spec"]
    assert spec["planeKind"] == "dynamical"
    assert spec["resolution"] == 192
    assert spec["a"] == [0.0, 0.5]
    assert spec["lambda"] == [LAM.real, LAM.imag]
    for comp in doc["components"]:
        assert set(comp) == {"id", "itinerary", "areaPx", "connectivity",
                             "truncated", "meanRadius"}


def test_ray_containment(small_grid):
    # the origin is surrounded by the critical annulus
    assert raster.ray_containment(small_grid, 0j, "")
    # far points are not inside any bounded target
    assert not raster.ray_containment(small_grid, 1.4 + 0.2j, "")
    with pytest.raises(InvalidParamsError):
        raster.ray_containment(small_grid, 99 + 0j, "")


def test_component_at_matches_labels(small_grid):
    comp = raster.component_at(small_grid, 0j)
    assert comp is not None
    assert comp.fate_kind == "escape-through-t0"
    # the central component resolves once the viewport is small enough
    p = maps.MapParams.perturbed(A, LAM)
    zoom = raster.PlaneSpec(center=0j, width=0.02, resolution=96, max_iter=800,
                            plane_kind=raster.DYNAMICAL, params=p)
    zg = raster.render_dynamical(zoom, regions=small_grid.regions)
    zc = raster.component_at(zg, 0j)
    assert zc.itinerary == "T0"
    assert "origin" in zc.contains


def test_render_parameter_smoke():
    spec = raster.PlaneSpec(center=2e-5 + 1e-5j, width=3e-5, resolution=24,
                            max_iter=600, plane_kind=raster.PARAMETER, a=A)
    grid = raster.render_parameter(spec)
    assert grid.precond_ok.shape == (24, 24)
    doc = json.loads(raster.encode_meta(grid))
    assert "precondFailPx" in doc
    # a window away from 0 with small radii passes preconditions everywhere
    assert grid.precond_fail_count() == 0


def test_parameter_window_survey():
    # the reference survey window: through-center escapes dominate, the
    # outer corners exceed the usable radius and are labelled distinctly,
    # bounded parameters (if sampled) render green
    center = complex((8e-5 - 6.5e-5) / 2, 0.0)
    spec = raster.PlaneSpec(center=center, width=1.45e-4, resolution=64,
                            max_iter=1200, plane_kind=raster.PARAMETER, a=A)
    grid = raster.render_parameter(spec)
    ok = grid.precond_ok != 0
    assert grid.precond_fail_count() > 0          # corners beyond threshold
    through = (grid.kind == kernels.KIND_THROUGH_T0) & ok
    assert through.sum() > 0.4 * ok.sum()
    img = raster.encode_image(grid)
    rgb = np.frombuffer(img.split(b"255\n", 1)[1], np.uint8).reshape(64, 64, 3)
    gray = np.all(rgb == 128, axis=-1)
    assert gray.sum() == grid.precond_fail_count()
    bounded = (grid.kind == kernels.KIND_NONESCAPING) & ok
    if bounded.any():
        assert np.all(rgb[bounded] == np.array([0, 255, 0], np.uint8))


def test_supersample_flag():
    p = maps.MapParams.perturbed(A, LAM)
    spec = raster.PlaneSpec(center=0j, width=3.0, resolution=48, max_iter=300,
                            plane_kind=raster.DYNAMICAL, params=p, supersample=True)
    grid = raster.render_dynamical(spec)
    assert grid.kind.shape == (48, 48)
