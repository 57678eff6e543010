"""Executable counterparts of the escape-behaviour results: case finders,
containment depth r and its circle extremes s/t, ring detection in the
parameter plane, asymptotics and boundary-continuity checks, and the
one-shot verification suite behind ``blaschke verify``.
"""

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import kernels, maps, raster, structure
from .errors import InvalidParamsError, PreconditionError, RayInconclusiveError

GOLDENS_PATH = Path(__file__).resolve().parents[2] / "tests" / "goldens.json"


# ---------------------------------------------------------------------------
# shared render cache (pure functions of their parameters)

_GRID_CACHE = {}
_GRID_CACHE_CAP = 8


def cached_dynamical(a, lam, center=0j, width=3.0, resolution=1024, max_iter=2000):
    key = (complex(a), complex(lam), complex(center), float(width), int(resolution), int(max_iter))
    if key in _GRID_CACHE:
        return _GRID_CACHE[key]
    p = maps.MapParams.perturbed(a, lam)
    spec = raster.PlaneSpec(center=complex(center), width=width, resolution=resolution,
                            max_iter=max_iter, plane_kind=raster.DYNAMICAL, params=p)
    grid = raster.render_dynamical(spec)
    if len(_GRID_CACHE) >= _GRID_CACHE_CAP:
        _GRID_CACHE.pop(next(iter(_GRID_CACHE)))
    _GRID_CACHE[key] = grid
    return grid


def quick_param_record(a, lam, max_iter=2000, n_band=16, bisect_iters=46):
    """One parameter-plane classification of the free critical point."""
    a = complex(a)
    seed, _ = maps.unperturbed_criticals(a)
    rec = kernels.param_point(lam.real, lam.imag, a.real, a.imag,
                              seed.real, seed.imag, 10.0, max_iter, n_band, bisect_iters)
    return rec


def _record_label(rec):
    ok, fail, kind, esc, t0e, bits, blen, fin, amb = rec[:9]
    if ok != 1:
        return None
    return raster.itinerary_text(bits, blen, t0e, fin, kind)


# ---------------------------------------------------------------------------
# containment depth r and the circle extremes s, t


def compute_r(a, lam, resolution=512, max_iter=1500, width=None, n_max=40):
    """Minimal n such that the free critical point sits inside the region
    bounded by the n-th all-outer annulus preimage, by 8-ray containment on
    a rendered grid.  Resolution doubles once if rays come back split."""
    p = maps.MapParams.perturbed(a, lam)
    cfg = structure.RegionConfig()
    regions = structure.locate_regions(p, budget=max_iter, config=cfg)
    cm = regions.criticals.c_minus
    if width is None:
        width = 2.4 * float(np.max(regions.astar_radii))
    for res in (resolution, 2 * resolution):
        spec = raster.PlaneSpec(center=0j, width=width, resolution=res,
                                max_iter=max_iter, plane_kind=raster.DYNAMICAL, params=p)
        grid = raster.render_dynamical(spec, regions=regions)
        try:
            for n in range(n_max + 1):
                if raster.ray_containment(grid, cm, "0" * n):
                    return n
            raise InvalidParamsError(
                f"no containing annulus preimage up to depth {n_max} at lam={lam}")
        except RayInconclusiveError:
            continue
    raise RayInconclusiveError(f"containment rays stayed split at lam={lam}")


@dataclass
class RtsRecord:
    """r per sampled lam, with circle max s and disk min t."""

    a: complex
    rho: float
    r_values: dict
    s: int
    t: int
    samples: list
    excluded: int
    n_angles: int
    n_levels: int

    def to_json(self):
        return {
            "a": [self.a.real, self.a.imag],
            "rho": self.rho,
            "s": self.s,
            "t": self.t,
            "nAngles": self.n_angles,
            "nLevels": self.n_levels,
            "excluded": self.excluded,
            "r": {f"{k[0]:.6e}{k[1]:+.6e}i": v for k, v in sorted(self.r_values.items())},
        }


_R_CACHE = {}


def _cached_r(a, lam, resolution, max_iter):
    key = (complex(a), complex(lam), resolution, max_iter)
    if key not in _R_CACHE:
        _R_CACHE[key] = compute_r(a, lam, resolution=resolution, max_iter=max_iter)
    return _R_CACHE[key]


def compute_s_t(a, rho, n_angles, n_levels=3, resolution=512, max_iter=1500):
    """Sample r on the circle |lam| = rho (s = max) and on a log-radial grid
    of |lam| <= rho (t = min over all samples including the circle)."""
    a = complex(a)
    r_values = {}
    excluded = 0
    samples = []
    circle_rs = []
    all_rs = []
    for level in range(n_levels):
        radius = rho * 0.5 ** level
        for k in range(n_angles):
            lam = radius * complex(math.cos(2 * math.pi * k / n_angles),
                                   math.sin(2 * math.pi * k / n_angles))
            samples.append(lam)
            try:
                r = _cached_r(a, lam, resolution, max_iter)
            except (PreconditionError, RayInconclusiveError, InvalidParamsError):
                excluded += 1
                continue
            r_values[(lam.real, lam.imag)] = r
            all_rs.append(r)
            if level == 0:
                circle_rs.append(r)
    if not circle_rs or not all_rs:
        raise PreconditionError("rts-samples", f"all samples excluded at rho={rho}")
    return RtsRecord(a=a, rho=rho, r_values=r_values, s=max(circle_rs),
                     t=min(all_rs), samples=samples, excluded=excluded,
                     n_angles=n_angles, n_levels=n_levels)


# ---------------------------------------------------------------------------
# case reports


@dataclass
class CaseReport:
    case: str
    a_param: complex
    lam: complex
    evidence: dict
    grids: list = field(default_factory=list)
    search_trace: list = field(default_factory=list)

    def to_json(self):
        return {
            "case": self.case,
            "a": [self.a_param.real, self.a_param.imag],
            "lambda": [self.lam.real, self.lam.imag],
            "evidence": self.evidence,
            "grids": self.grids,
            "trace": self.search_trace[:200],
        }


def _component_surrounds(grid, comp, about=0j):
    """Ray test against one specific component's pixel set."""
    if not grid.spec.contains(about):
        return False
    image = grid.component_image()
    pi, pj = grid.spec.pixel_of(about)
    res = grid.resolution
    votes = 0
    for di, dj in raster.RAY_DIRECTIONS:
        i, j = pi, pj
        hit = False
        while 0 <= i < res and 0 <= j < res:
            if image[i, j] == comp.component_id:
                hit = True
                break
            i += di
            j += dj
        votes += 1 if hit else 0
    return votes >= 5


def measure_point_component(a, lam, point, resolution=1024, max_iter=2000,
                            min_area=300):
    """The labelled component containing a point, measured at the finest
    non-truncated viewport the zoom ladder reaches.

    Starting from the base viewport, the width shrinks (by 8x while the
    component is unmeasurable, then adaptively to ~2.2x the component's
    extent) so sub-pixel holes resolve; connectivity estimates refine
    monotonically with scale, so the deepest valid measurement is reported.
    Returns (fate, component, grid)."""
    base = cached_dynamical(a, lam, resolution=resolution, max_iter=max_iter)
    reg = base.regions
    point = complex(point)
    fate = structure.classify_orbit(point, reg.params, reg, max_iter)
    want = fate.label()
    width = base.spec.width
    best = None
    for _ in range(6):
        grid = base if width == base.spec.width else cached_dynamical(
            a, lam, center=point, width=width, resolution=resolution,
            max_iter=max_iter)
        comp = raster.component_at(grid, point)
        valid = (comp is not None and comp.itinerary == want
                 and comp.area_px >= min_area and not comp.truncated)
        if valid:
            best = (comp, grid)
            i0, i1, j0, j1 = comp.bbox
            extent = max(i1 - i0 + 1, j1 - j0 + 1) * grid.spec.width / grid.resolution
            target = 2.2 * extent
            if target >= 0.75 * width:
                return fate, comp, grid
            width = target
        else:
            if best is not None:
                return fate, best[0], best[1]
            width /= 8.0
    if best is not None:
        return fate, best[0], best[1]
    return fate, None, base


def measure_critical_component(a, lam, resolution=1024, max_iter=2000,
                               min_area=300):
    base = cached_dynamical(a, lam, resolution=resolution, max_iter=max_iter)
    return measure_point_component(a, lam, base.regions.criticals.c_minus,
                                   resolution=resolution, max_iter=max_iter,
                                   min_area=min_area)


def case_evidence(a, lam, resolution=1024, max_iter=2000):
    """Measured evidence dict for the case classification at (a, lam)."""
    grid = cached_dynamical(a, lam, resolution=resolution, max_iter=max_iter)
    cm = grid.regions.criticals.c_minus
    fate, zcomp, zgrid = measure_critical_component(a, lam, resolution=resolution,
                                                    max_iter=max_iter)
    comp = raster.component_at(grid, cm)
    if comp is not None and comp.itinerary == fate.label():
        surrounds = _component_surrounds(grid, comp, 0j)
    elif zgrid is not grid and zcomp is not None and zgrid.spec.contains(0j):
        surrounds = _component_surrounds(zgrid, zcomp, 0j)
    else:
        # the component is sub-pixel on any viewport holding the origin
        surrounds = False
    conn = zcomp.connectivity if zcomp is not None else (
        comp.connectivity if comp is not None else 0)
    census = sorted({c.connectivity for c in grid.components()
                     if c.area_px >= 100 and not c.truncated})
    return {
        "fate": fate.kind,
        "final": fate.final_region,
        "itinerary": fate.label(),
        "surrounds_origin": bool(surrounds),
        "c_minus_connectivity": int(conn),
        "component_resolved": zcomp is not None,
        "connectivities": [int(c) for c in census],
        "lambda": [lam.real, lam.imag],
    }


def _matches_case(ev, case):
    if ev is None:
        return False
    if case == "a":
        return (ev["final"] == "D0" and ev["c_minus_connectivity"] == 1
                and set(ev["connectivities"]) <= {1, 2})
    if case == "b":
        return (ev["final"] == "T0" and not ev["surrounds_origin"]
                and ev["c_minus_connectivity"] == 3
                and set(ev["connectivities"]) <= {1, 2, 3})
    if case == "c":
        return (ev["final"] == "T0" and ev["surrounds_origin"]
                and max(ev["connectivities"], default=0) >= 4)
    raise InvalidParamsError(f"unknown case {case!r}")


def find_case(a, case, search_box, max_steps=500, step_ratio=0.97,
              resolution=1024, max_iter=2000, max_candidates=8):
    """Search the given parameter-plane box for a parameter realizing the
    requested case.

    Every step classifies the free critical point cheaply; full grid
    evidence is computed only for candidates whose fate class matches the
    case (disk chain for a, annulus chain otherwise), up to
    max_candidates evaluations.  Case c walks a ray inward from the box
    radius, mirroring the continuity argument; the other cases sample
    shrinking loops around the box center.  The center itself is always
    tried first."""
    a = complex(a)
    if case not in ("a", "b", "c"):
        raise InvalidParamsError(f"unknown case {case!r}")
    center = complex(search_box.center)
    half = 0.5 * search_box.width
    trace = []

    def candidate_fin(rec):
        ok, fail, kind = rec[0], rec[1], rec[2]
        if ok != 1 or kind != kernels.KIND_THROUGH_T0:
            return None
        return rec[7]

    want_fin = kernels.FINAL_D0 if case == "a" else kernels.FINAL_T0

    lams = []
    if center != 0:
        lams.append(center)
    if case == "c":
        theta = math.atan2(center.imag, center.real) if center != 0 else 0.3
        rho = abs(center) + half if center != 0 else half
        lam = rho * complex(math.cos(theta), math.sin(theta))
        for _ in range(max_steps):
            lams.append(lam)
            lam *= step_ratio
    else:
        n_loop = 64
        radius = half
        while radius > half * 1e-3 and len(lams) < max_steps:
            for k in range(n_loop):
                ang = 2 * math.pi * k / n_loop
                lams.append(center + radius * complex(math.cos(ang), math.sin(ang)))
            radius *= 0.75
    lams = lams[:max_steps]

    evaluated = 0
    for lam in lams:
        rec = quick_param_record(a, lam, max_iter=max_iter)
        fin = candidate_fin(rec)
        trace.append({"lambda": [lam.real, lam.imag],
                      "label": _record_label(rec), "precondFail": int(rec[1])})
        if fin != want_fin:
            continue
        if evaluated >= max_candidates:
            break
        evaluated += 1
        ev = case_evidence(a, lam, resolution=resolution, max_iter=max_iter)
        if _matches_case(ev, case):
            return CaseReport(case=case, a_param=a, lam=lam, evidence=ev,
                              search_trace=trace)
    raise InvalidParamsError(
        f"case {case} not found within budget ({len(lams)} steps, "
        f"{evaluated} candidates examined); trace retained")


# ---------------------------------------------------------------------------
# real-line search


def _real_orbit(a, lam, steps):
    """Real orbit of the free critical point, truncated at the first value
    that leaves the interval between the poles (|x| >= 1/a); only the
    in-interval prefix carries meaning for the real-line argument."""
    p = maps.MapParams.perturbed(a, lam)
    seed, _ = maps.unperturbed_criticals(a)
    cm = kernels.newton_critical(seed.real, 0.0, a, 0.0, lam, 0.0, 50, 1e-12)
    z_inf = 1.0 / a
    orbit = [cm[0]]
    cur = complex(cm[0], 0.0)
    for _ in range(steps):
        cur = maps.eval_map(cur, p)
        if maps.is_infinity(cur) or abs(cur) >= z_inf:
            break
        orbit.append(cur.real)
    return orbit


def _x1(a, lam):
    return kernels.newton_fixed(1.0, 0.0, a, 0.0, lam, 0.0, 50, 1e-12)[0]


def caseA_real_search(a, lam_hi=1e-4, depth=8, m_max=40, grid_steps=600,
                      grid_ratio=0.995, resolution=1024, max_iter=2000):
    """Locate a real parameter whose free critical orbit lands on a backward
    zero preimage, yielding the simply-connected case.

    On a descending real-lam grid the gap g_m(lam) = B^(m+2)(c_-) - x1
    changes sign exactly when the critical point crosses the real trace of
    an annulus-preimage boundary (those boundary points map onto the fixed
    point after m+2 steps).  The sign change is bisected, then
    h(lam) = B^(m+2)(c_-) - z_(-n) is bisected to |h| <= 1e-10 inside the
    bracket, putting the critical orbit on the backward zero chain."""
    if not (0 < a < 1):
        raise InvalidParamsError("need real a in (0, 1)")

    lams = [lam_hi * grid_ratio ** k for k in range(grid_steps)]

    def g(lam, m):
        orbit = _real_orbit(a, lam, m + 3)
        if len(orbit) <= m + 2:
            return None
        return orbit[m + 2] - _x1(a, lam)

    def g_row(lam):
        orbit = _real_orbit(a, lam, m_max + 3)
        x1 = _x1(a, lam)
        return [orbit[m + 2] - x1 if len(orbit) > m + 2 else None
                for m in range(m_max + 1)]

    # genuine crossings are continuous, so demand small gaps on both sides
    bracket = None
    prev = g_row(lams[0])
    for i in range(1, len(lams)):
        cur = g_row(lams[i])
        for m in range(m_max + 1):
            g_hi, g_lo = prev[m], cur[m]
            if g_hi is None or g_lo is None:
                continue
            if abs(g_hi) > 0.3 or abs(g_lo) > 0.3:
                continue
            if g_lo < 0.0 < g_hi:
                bracket = (lams[i], lams[i - 1], m)
                break
        if bracket:
            break
        prev = cur
    if bracket is None:
        raise InvalidParamsError("no fixed-point-gap sign change in the scanned range")
    lo, hi, m = bracket

    # Lambda2: the parameter where the orbit lands exactly on the fixed point
    blo, bhi = lo, hi
    for _ in range(80):
        mid = 0.5 * (blo + bhi)
        gm = g(mid, m)
        if gm is None or gm > 0.0:
            bhi = mid
        else:
            blo = mid
    lambda2 = blo
    g_at_2 = abs(g(lambda2, m) if g(lambda2, m) is not None else math.inf)
    lambda1 = lo

    # bisect the orbit endpoint onto a backward-chain point inside [L1, L2]
    def h(lam, n):
        orbit = _real_orbit(a, lam, m + 3)
        if len(orbit) <= m + 2:
            return None
        st = structure.real_line_state(a, lam, depth=max(depth, n))
        return orbit[m + 2] - st.backward_chain[n - 1]

    found = None
    for n in range(1, depth + 1):
        hlo = h(lambda1, n)
        hhi = h(lambda2, n)
        if hlo is None or hhi is None:
            continue
        if hlo < 0.0 < hhi:
            found = n
            break
    if found is None:
        raise InvalidParamsError("no backward-chain crossing inside the bracket")
    n = found
    blo, bhi = lambda1, lambda2
    for _ in range(90):
        mid = 0.5 * (blo + bhi)
        hm = h(mid, n)
        if hm is None or hm > 0.0:
            bhi = mid
        else:
            blo = mid
    lam_star = 0.5 * (blo + bhi)
    h_star = abs(h(lam_star, n))
    for _ in range(8):
        if h_star <= 1e-10:
            break
        # secant polish against the steep gap
        h_lo = h(blo, n)
        h_hi = h(bhi, n)
        if h_lo is None or h_hi is None or h_hi == h_lo:
            break
        cand = blo - h_lo * (bhi - blo) / (h_hi - h_lo)
        if not blo <= cand <= bhi:
            break
        hc = h(cand, n)
        if hc is None:
            break
        lam_star, h_star = cand, abs(hc)
        if hc < 0:
            blo = cand
        else:
            bhi = cand

    ev = case_evidence(a, lam_star, resolution=resolution, max_iter=max_iter)
    report = CaseReport(case="a", a_param=complex(a), lam=complex(lam_star),
                        evidence=ev or {})
    report.evidence.update({
        "m": m, "n": n,
        "hResidual": h_star,
        "lambda1": lambda1,
        "lambda2": lambda2,
        "fixedPointGapAtLambda2": g_at_2,
    })
    return report


# ---------------------------------------------------------------------------
# ring detection


@dataclass
class RingBand:
    itinerary: str
    rho_lo: float
    rho_hi: float
    coverage: float
    surround_verified: bool
    d0_contamination: int
    low_confidence: bool

    def to_json(self):
        return {
            "itinerary": self.itinerary,
            "rhoLo": self.rho_lo,
            "rhoHi": self.rho_hi,
            "coverage": self.coverage,
            "surroundVerified": self.surround_verified,
            "d0Contamination": self.d0_contamination,
            "lowConfidence": self.low_confidence,
        }


def detect_rings(a, rho_max, n_radii=48, n_angles=96, decades=2.0,
                 max_iter=2000, verify_resolution=512):
    """Label a polar parameter grid by the free critical fate and report
    maximal radial bands fully covered in angle by one annulus-chain
    itinerary; evidence for a ring component surrounding lam = 0."""
    a = complex(a)
    seed, _ = maps.unperturbed_criticals(a)
    radii = rho_max * 10.0 ** (-decades * np.arange(n_radii) / max(n_radii - 1, 1))
    angles = 2 * math.pi * np.arange(n_angles) / n_angles
    labels = {}
    finals = {}
    for ri, rho in enumerate(radii):
        for ai_, ang in enumerate(angles):
            lam = rho * complex(math.cos(ang), math.sin(ang))
            rec = kernels.param_point(lam.real, lam.imag, a.real, a.imag,
                                      seed.real, seed.imag, 10.0, max_iter, 16, 46)
            ok, fail, kind, esc, t0e, bits, blen, fin, amb = rec[:9]
            if ok != 1 or kind != kernels.KIND_THROUGH_T0:
                continue
            finals[(ri, ai_)] = fin
            if fin != kernels.FINAL_T0:
                continue
            complete = blen == max(t0e - 1, 0)
            if not complete:
                continue
            text = raster.itinerary_text(bits, blen, t0e, fin, kind)
            labels.setdefault(text, set()).add((ri, ai_))

    low_conf = n_angles <= 4
    bands = []
    for text, cells in sorted(labels.items()):
        per_angle = {}
        for ri, ai_ in cells:
            per_angle.setdefault(ai_, set()).add(ri)
        if len(per_angle) < n_angles:
            continue
        # minimal radius-index window meeting every angle
        best = None
        for j0 in range(n_radii):
            for j1 in range(j0, n_radii):
                if all(any(j0 <= r <= j1 for r in rs) for rs in per_angle.values()):
                    if best is None or (j1 - j0) < (best[1] - best[0]):
                        best = (j0, j1)
                    break
        if best is None:
            continue
        j0, j1 = best
        contamination = sum(
            1 for (ri, ai_), f in finals.items()
            if j0 <= ri <= j1 and f == kernels.FINAL_D0)
        rho_mid = math.sqrt(radii[j0] * radii[j1])
        lam_probe = rho_mid * complex(1.0, 0.0)
        verified = _verify_surround(a, lam_probe, text, verify_resolution, max_iter)
        bands.append(RingBand(itinerary=text, rho_lo=float(radii[j1]),
                              rho_hi=float(radii[j0]),
                              coverage=len(per_angle) / n_angles,
                              surround_verified=verified,
                              d0_contamination=contamination,
                              low_confidence=low_conf))
    bands.sort(key=lambda b: -b.rho_hi)
    return bands


def _verify_surround(a, lam, text, resolution, max_iter):
    """Render once near the band and ray-test that the labelled component
    surrounds the origin in the dynamical plane."""
    try:
        grid = cached_dynamical(a, lam, resolution=resolution, max_iter=max_iter)
        return bool(raster.ray_containment(grid, 0j, text))
    except (PreconditionError, RayInconclusiveError, InvalidParamsError):
        return False


# ---------------------------------------------------------------------------
# asymptotics and boundary continuity


def asymptotics_check(a, lam_sequence):
    """Relative error of the ring zeros/criticals against their fifth-root
    seeds, per lam; errors must shrink along a lam -> 0 sequence."""
    from . import roots as roots_mod
    a = complex(a)
    rows = []
    for lam in lam_sequence:
        p = maps.MapParams.perturbed(a, lam)
        cs = structure.critical_set(p)
        zs = roots_mod.ring_zero_seeds(p)
        czs = roots_mod.ring_critical_seeds(p)
        ze = _matched_rel_error(cs.zeros_ring, zs)
        ce = _matched_rel_error(cs.ring_criticals, czs)
        gaps = np.sort(np.diff(np.sort(np.angle(cs.zeros_ring))))
        rows.append({
            "lambda": [complex(lam).real, complex(lam).imag],
            "zeroRelError": ze,
            "criticalRelError": ce,
            "zeroMagnitude": float(np.mean(np.abs(cs.zeros_ring))),
            "criticalMagnitude": float(np.mean(np.abs(cs.ring_criticals))),
            "pentagonGapsDeg": list(np.degrees(gaps)),
        })
    errs_z = [r["zeroRelError"] for r in rows]
    errs_c = [r["criticalRelError"] for r in rows]
    return {
        "a": [a.real, a.imag],
        "rows": rows,
        "zeroErrorsDecreasing": all(x > y for x, y in zip(errs_z, errs_z[1:])),
        "criticalErrorsDecreasing": all(x > y for x, y in zip(errs_c, errs_c[1:])),
    }


def _matched_rel_error(found, seeds):
    err = 0.0
    for s in seeds:
        d = np.min(np.abs(found - s))
        err = max(err, d / abs(s))
    return float(err)


def hausdorff(points_a, points_b):
    d = np.abs(points_a[:, None] - points_b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def _astar_points(a, lam, budget=2000):
    reg = structure.locate_regions(maps.MapParams.perturbed(a, lam), budget=budget)
    return reg.astar_radii * np.exp(1j * reg.astar_thetas)


def boundary_continuity_check(a, lam0, delta, n_halvings=3, budget=2000):
    """Hausdorff distance between sampled outer-boundary curves at lam0 and
    lam0 + delta over a dyadic delta sequence; nonincreasing distances."""
    a = complex(a)
    lam0 = complex(lam0)
    base = _astar_points(a, lam0, budget)
    rows = []
    d = complex(delta)
    for _ in range(n_halvings):
        pts = _astar_points(a, lam0 + d, budget)
        rows.append({"delta": [d.real, d.imag], "hausdorff": hausdorff(base, pts)})
        d *= 0.5
    dists = [r["hausdorff"] for r in rows]
    circle_gap = float(np.max(np.abs(np.abs(base) - 1.0)))
    return {
        "a": [a.real, a.imag],
        "lambda0": [lam0.real, lam0.imag],
        "rows": rows,
        "nonincreasing": all(x >= y - 1e-12 for x, y in zip(dists, dists[1:])),
        "unitCircleGap": circle_gap,
    }


# ---------------------------------------------------------------------------
# goldens


def load_goldens(path=None):
    p = Path(path) if path else GOLDENS_PATH
    if p.exists():
        return json.loads(p.read_text())
    return {}


def record_golden(name, value, path=None):
    p = Path(path) if path else GOLDENS_PATH
    data = load_goldens(p)
    data[name] = value
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return value
