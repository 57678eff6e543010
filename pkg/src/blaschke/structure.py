"""Structural regions, orbit fates, itineraries, and curve preimages.

Terminology used throughout (dropping decorations):

* ``astar``   - the outer attracting basin component reaching infinity
* ``T0``      - the central component around the pole at 0, approximated by
  the gate disk plus a clean-escape test on the next iterate
* ``A0``      - the annular component holding the five perturbed critical
  points; localized radially by the one-step central-entry test
* ``D0``      - the disk component at the free zero z0
* itinerary   - per pre-entry orbit step, 0 for the outer annulus side and
  1 for the inner side; a step inside the conservative radial band
  [a0_lo, a0_hi] ends the itinerary
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import kernels, maps, roots
from .errors import (BracketFailureError, ContinuationBreakError, InvalidParamsError,
                     NoConvergenceError, PreconditionError, SeedCollisionError)

KIND_NAMES = {
    kernels.KIND_NONESCAPING: "non-escaping",
    kernels.KIND_DIRECT: "direct-escape",
    kernels.KIND_THROUGH_T0: "escape-through-t0",
}
FINAL_NAMES = {kernels.FINAL_NONE: None, kernels.FINAL_T0: "T0", kernels.FINAL_D0: "D0"}

PRECONDITION_NAMES = {
    kernels.PRE_LAMBDA_ZERO: "lambda-nonzero",
    kernels.PRE_CMINUS_LOST: "critical-continuation",
    kernels.PRE_Z0_LOST: "zero-continuation",
    kernels.PRE_ANNULUS: "straight-annulus-entry",
    kernels.PRE_BAND: "a0-band-bracket",
    kernels.PRE_T0_BISECT: "t0-bisection",
    kernels.PRE_D0_SEPARATION: "d0-separation",
}


# ---------------------------------------------------------------------------
# critical points and zeros


@dataclass
class CriticalSet:
    """All 10 critical points (with multiplicity) and 6 zeros."""

    c_plus: complex
    c_minus: complex
    ring_criticals: np.ndarray          # 5 points near the origin
    zeros_ring: np.ndarray              # 5 zeros near the origin
    z0: complex                         # continuation of the zero at a
    pole_finite: complex                # 1 / conj(a)
    origin_multiplicity: int = 1
    infinity_multiplicity: int = 2
    residuals: dict = field(default_factory=dict)

    @property
    def total_critical_multiplicity(self):
        return self.infinity_multiplicity + self.origin_multiplicity + 2 + len(self.ring_criticals)

    @property
    def zero_count(self):
        return 1 + len(self.zeros_ring)

    def free_criticals(self):
        return np.concatenate([[self.c_plus, self.c_minus], self.ring_criticals])

    def all_zeros(self):
        return np.concatenate([[self.z0], self.zeros_ring])


def _refine_with_continuation(seed_fn, target, p, w=None):
    """Newton from the asymptotic seed, retrying along a short lam path if
    the direct attempt fails."""
    from .errors import DerivativeVanishedError
    try:
        return roots.newton_refine(seed_fn(p), target, p, w=w)
    except (NoConvergenceError, DerivativeVanishedError):
        z = seed_fn(p)
        for t in (0.05, 0.2, 0.5, 1.0):
            sub = maps.MapParams.perturbed(p.a, p.lam * t)
            res = roots.newton_refine(z, target, sub, w=w)
            z = res.root
        return res


def critical_set(p):
    """Locate all finite critical points and zeros by Newton refinement
    from their small-perturbation seeds."""
    if p.family != maps.PERTURBED:
        raise InvalidParamsError("critical_set requires the perturbed family")
    residuals = {}

    cm_seed, cp_seed = maps.unperturbed_criticals(p.a)
    res_cm = _refine_with_continuation(lambda q: cm_seed, roots.TARGET_CRITICAL, p)
    res_cp = _refine_with_continuation(lambda q: cp_seed, roots.TARGET_CRITICAL, p)
    residuals["c_minus"] = res_cm.residual
    residuals["c_plus"] = res_cp.residual

    ring_crit = []
    for k, seed in enumerate(roots.ring_critical_seeds(p)):
        r = _refine_with_continuation(lambda q, s=seed: roots.ring_critical_seeds(q)[k],
                                      roots.TARGET_CRITICAL, p)
        ring_crit.append(r.root)
        residuals[f"ring_critical_{k}"] = r.residual
    ring_crit = np.array(ring_crit)

    ring_zero = []
    for k in range(5):
        r = _refine_with_continuation(lambda q: roots.ring_zero_seeds(q)[k],
                                      roots.TARGET_PREIMAGE, p, w=0.0)
        ring_zero.append(r.root)
        residuals[f"ring_zero_{k}"] = r.residual
    ring_zero = np.array(ring_zero)

    res_z0 = _refine_with_continuation(lambda q: q.a, roots.TARGET_PREIMAGE, p, w=0.0)
    residuals["z0"] = res_z0.residual

    crits = np.concatenate([[res_cp.root, res_cm.root], ring_crit])
    _check_collisions(crits, "critical")
    zeros = np.concatenate([[res_z0.root], ring_zero])
    _check_collisions(zeros, "zero")

    return CriticalSet(
        c_plus=res_cp.root,
        c_minus=res_cm.root,
        ring_criticals=ring_crit,
        zeros_ring=ring_zero,
        z0=res_z0.root,
        pole_finite=1.0 / p.a.conjugate(),
        residuals=residuals,
    )


def _check_collisions(points, what):
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            d = abs(points[i] - points[j])
            scale = max(1e-30, abs(points[i]), abs(points[j]))
            if d < 1e-6 * scale:
                raise SeedCollisionError(
                    f"two {what} seeds converged to the same root near {points[i]}",
                    pair=(points[i], points[j]))


# ---------------------------------------------------------------------------
# structural regions


@dataclass
class RegionConfig:
    r_escape: float = 10.0
    n_theta_astar: int = 128
    n_theta_a0: int = 64
    n_theta_t0: int = 16
    n_theta_d0: int = 16
    bisect_iters: int = 46
    n_precondition: int = 64


@dataclass
class StructuralRegions:
    """Radial localization of the structural components for one (a, lam)."""

    params: maps.MapParams
    criticals: CriticalSet
    r_escape: float
    budget: int
    r_in: float                 # straight annulus inner radius (the gate)
    r_out: float                # straight annulus outer radius
    astar_thetas: np.ndarray
    astar_radii: np.ndarray
    a0_thetas: np.ndarray
    a0_inner: np.ndarray
    a0_outer: np.ndarray
    a0_lo: float
    a0_hi: float
    t0_radius: float            # inscribed radius of the central component
    d0_center: complex
    d0_radius: float            # inscribed radius of the disk at z0
    d0_gate: float              # disk used for membership tests around z0

    @property
    def gate(self):
        return self.r_in

    @property
    def straight_annulus(self):
        return (self.r_in, self.r_out)

    def kernel_args(self):
        p = self.params
        return (p.a.real, p.a.imag, p.lam.real, p.lam.imag, self.r_escape,
                self.gate, self.a0_inner, self.a0_outer,
                self.d0_center.real, self.d0_center.imag, self.d0_gate)

    def astar_radius_at(self, theta):
        th = np.mod(theta, 2.0 * math.pi)
        return np.interp(th, self.astar_thetas, self.astar_radii,
                         period=2.0 * math.pi)

    @property
    def mean_astar_radius(self):
        return float(np.mean(self.astar_radii))


def locate_regions(p, budget=2000, config=None):
    """Localize the escape radius, outer-basin boundary, critical annulus
    band, central disk, and the disk at the free zero.

    Raises PreconditionError when the small-perturbation structure is not
    verified at these parameters (|lam| at or past the usable threshold)."""
    if p.family != maps.PERTURBED:
        raise InvalidParamsError("locate_regions requires the perturbed family")
    cfg = config or RegionConfig()
    try:
        cs = critical_set(p)
    except (NoConvergenceError, SeedCollisionError) as e:
        raise PreconditionError("critical-set-refinement", str(e)) from e

    amod = abs(p.a)
    lmod = abs(p.lam)
    r_in = (lmod / (2.0 * amod)) ** 0.2
    r_out = (2.0 * lmod / amod) ** 0.2
    r_geo = math.sqrt(r_in * r_out)
    ar, ai = p.a.real, p.a.imag
    lr, li = p.lam.real, p.lam.imag
    R2 = cfg.r_escape * cfg.r_escape
    g2 = r_in * r_in

    bad = kernels.annulus_uniform(cfg.n_precondition, ar, ai, lr, li, r_geo, R2, g2, budget)
    if bad > 0:
        raise PreconditionError("straight-annulus-entry",
                                f"{bad}/{cfg.n_precondition} samples missed one-step central entry")

    cm_mod = abs(cs.c_minus)
    z0_mod = abs(cs.z0)
    cap_hi = min(0.95 * cm_mod, 0.75 * z0_mod)
    floor_lo = r_in * 1e-3
    a0_thetas = 2.0 * math.pi * np.arange(cfg.n_theta_a0) / cfg.n_theta_a0
    inner = np.empty(cfg.n_theta_a0)
    outer = np.empty(cfg.n_theta_a0)
    flags = np.empty(cfg.n_theta_a0, dtype=np.int64)
    kernels.a0_band(a0_thetas, ar, ai, lr, li, r_geo, cap_hi, floor_lo, R2, g2,
                    budget, cfg.bisect_iters, inner, outer, flags)
    if not np.all(flags == 1):
        ts = a0_thetas[flags == 0]
        raise PreconditionError("a0-band-bracket",
                                f"no bracket at angles {np.round(ts, 3).tolist()[:4]}")
    a0_lo = float(np.min(inner))
    a0_hi = float(np.max(outer))
    if not (a0_lo <= r_in and r_out <= a0_hi):
        raise PreconditionError("straight-annulus-containment",
                                f"band [{a0_lo:.4g},{a0_hi:.4g}] misses [{r_in:.4g},{r_out:.4g}]")

    astar_thetas = 2.0 * math.pi * np.arange(cfg.n_theta_astar) / cfg.n_theta_astar
    astar_radii = np.empty(cfg.n_theta_astar)
    aflags = np.empty(cfg.n_theta_astar, dtype=np.int64)
    kernels.radial_escape_boundary(astar_thetas, ar, ai, lr, li, 1.02 * a0_hi,
                                   cfg.r_escape, R2, g2, budget, cfg.bisect_iters,
                                   astar_radii, aflags)
    if not np.all(aflags == 1):
        raise PreconditionError("outer-boundary-bracket",
                                f"{int(np.sum(aflags == 0))} angles lacked an escape bracket")

    t0_thetas = 2.0 * math.pi * np.arange(cfg.n_theta_t0) / cfg.n_theta_t0
    t0_radii = np.empty(cfg.n_theta_t0)
    tflags = np.empty(cfg.n_theta_t0, dtype=np.int64)
    kernels.t0_inscribed(t0_thetas, ar, ai, lr, li, r_in, R2, g2, budget,
                         cfg.bisect_iters, t0_radii, tflags)
    if not np.all(tflags == 1):
        raise PreconditionError("t0-bisection", "central membership bracket failed")
    t0_radius = float(np.min(t0_radii))

    sep = z0_mod - a0_hi
    if sep <= 0:
        raise PreconditionError("d0-separation", "free zero inside the critical annulus band")
    d0_cap = 0.45 * sep
    d0_thetas = 2.0 * math.pi * np.arange(cfg.n_theta_d0) / cfg.n_theta_d0
    d0_radii = np.empty(cfg.n_theta_d0)
    dflags = np.empty(cfg.n_theta_d0, dtype=np.int64)
    kernels.d0_boundary(d0_thetas, cs.z0.real, cs.z0.imag, ar, ai, lr, li, d0_cap,
                        R2, g2, budget, cfg.bisect_iters, d0_radii, dflags)
    if not np.all(dflags == 1):
        raise PreconditionError("d0-bracket", "disk bracket at the free zero failed")
    d0_radius = float(np.min(d0_radii))
    dz0 = abs(maps.eval_derivative(cs.z0, p))
    d0_gate = min(4.0 * t0_radius / dz0, d0_cap) if dz0 > 0 else d0_cap

    # radial ordering of the located boundaries, on the shared angle grid
    stride = max(1, cfg.n_theta_astar // cfg.n_theta_a0)
    astar_sub = astar_radii[::stride][:cfg.n_theta_a0]
    if len(astar_sub) == len(outer) and not np.all(outer < astar_sub):
        raise PreconditionError("region-ordering", "annulus band crosses the outer boundary")
    if not np.all(inner < outer):
        raise PreconditionError("region-ordering", "band inner radius crosses outer radius")

    return StructuralRegions(
        params=p, criticals=cs, r_escape=cfg.r_escape, budget=budget,
        r_in=r_in, r_out=r_out,
        astar_thetas=astar_thetas, astar_radii=astar_radii,
        a0_thetas=a0_thetas, a0_inner=inner, a0_outer=outer,
        a0_lo=a0_lo, a0_hi=a0_hi, t0_radius=t0_radius,
        d0_center=cs.z0, d0_radius=d0_radius, d0_gate=d0_gate,
    )


# ---------------------------------------------------------------------------
# orbit classification


@dataclass
class OrbitFate:
    """Classification of one orbit."""

    kind: str
    escape_time: int | None = None
    t0_entry: int | None = None
    itinerary: tuple = ()
    final_region: str | None = None
    ambiguous: bool = False
    itinerary_complete: bool = True
    orbit: list | None = None

    @property
    def itinerary_string(self):
        return "".join(str(b) for b in self.itinerary)

    def label(self):
        """Stable component label used by the raster layer."""
        if self.kind == "direct-escape":
            return "escape"
        if self.kind == "non-escaping":
            return "bounded"
        if self.final_region == "D0":
            return f"D{self.t0_entry}"
        if self.t0_entry == 0:
            return "T0"
        return self.itinerary_string

    def to_json(self):
        return {
            "kind": self.kind,
            "escapeTime": self.escape_time,
            "t0Entry": self.t0_entry,
            "itinerary": self.itinerary_string,
            "finalRegion": self.final_region,
            "ambiguous": self.ambiguous,
            "itineraryComplete": self.itinerary_complete,
            "label": self.label(),
            "orbit": None if self.orbit is None else [[z.real, z.imag] for z in self.orbit],
        }


def unpack_itinerary(bits, nbits):
    return tuple((int(bits) >> k) & 1 for k in range(int(nbits)))


def fate_from_record(kind, esc, t0e, bits, blen, fin, amb, ovf, orbit=None):
    kind_name = KIND_NAMES[int(kind)]
    final = FINAL_NAMES[int(fin)]
    itinerary = unpack_itinerary(bits, blen) if kind == kernels.KIND_THROUGH_T0 else ()
    complete = not bool(ovf)
    if kind == kernels.KIND_THROUGH_T0:
        expected = int(t0e) if final == "D0" else max(int(t0e) - 1, 0)
        complete = complete and len(itinerary) == expected
    return OrbitFate(
        kind=kind_name,
        escape_time=int(esc) if esc >= 0 else None,
        t0_entry=int(t0e) if t0e >= 0 else None,
        itinerary=itinerary,
        final_region=final,
        ambiguous=bool(amb),
        itinerary_complete=complete,
        orbit=orbit,
    )


def classify_orbit(z, p, regions, max_iter=2000, keep_orbit=False):
    """Orbit fate of a single point under the perturbed product."""
    if regions.params != p:
        raise InvalidParamsError("regions were computed for different parameters")
    z = complex(z)
    ka = regions.kernel_args()
    rec = kernels.classify_point(z.real, z.imag, *ka, max_iter)
    orbit = None
    if keep_orbit:
        orbit = [z]
        cur = z
        cap = rec[1] if rec[1] >= 0 else min(max_iter, 256)
        for _ in range(min(cap, 2048)):
            cur = maps.eval_map(cur, p)
            orbit.append(cur)
            if maps.is_infinity(cur) or abs(cur) > regions.r_escape:
                break
    return fate_from_record(*rec, orbit=orbit)


# ---------------------------------------------------------------------------
# Riemann-Hurwitz bookkeeping


def riemann_hurwitz(m_v, k, r):
    """Connectivity of a degree-k proper preimage of a domain of
    connectivity m_v branched over r critical points:
    m_u = k (m_v - 2) + r + 2."""
    if m_v < 1 or k < 1 or r < 0:
        raise InvalidParamsError("need m_v >= 1, k >= 1, r >= 0")
    return k * (m_v - 2) + r + 2


# ---------------------------------------------------------------------------
# itinerary ordering


def _normalize_sequence(delta):
    """-> ('int', n) for the all-zeros classes, ('seq', first_one_index)
    for words containing a 1."""
    if isinstance(delta, (int, np.integer)):
        if delta < 0:
            raise InvalidParamsError("negative itinerary index")
        return ("int", int(delta))
    if isinstance(delta, str):
        word = [int(ch) for ch in delta]
    else:
        word = [int(b) for b in delta]
    if any(b not in (0, 1) for b in word):
        raise InvalidParamsError("itinerary symbols must be 0 or 1")
    if 1 not in word:
        return ("int", len(word))
    return ("seq", word.index(1))


def itinerary_order(delta1, delta2):
    """Surrounding order of two labelled components.

    Returns ``precedes`` when the second surrounds the first, ``succeeds``
    for the reverse, and ``incomparable-by-this-rule`` when the leading-zero
    rule does not decide the pair.
    """
    k1, n1 = _normalize_sequence(delta1)
    k2, n2 = _normalize_sequence(delta2)
    if k1 == "int" and k2 == "int":
        if n1 < n2:
            return "precedes"
        if n1 > n2:
            return "succeeds"
        return "incomparable-by-this-rule"
    if k1 == "int":
        # seq occupies the open gap (n2-1, n2)
        return "precedes" if n1 <= n2 - 1 else "succeeds"
    if k2 == "int":
        return "precedes" if n1 <= n2 else "succeeds"
    if n1 <= n2 - 1:
        return "precedes"
    if n2 <= n1 - 1:
        return "succeeds"
    return "incomparable-by-this-rule"


# ---------------------------------------------------------------------------
# real-line dynamics


@dataclass
class RealLineState:
    x1: float
    c_minus_real: float
    z0_real: float
    backward_chain: list


def _real_params(a, lam):
    if not (0.0 < a < 1.0):
        raise InvalidParamsError("need real a in (0, 1)")
    if lam < 0.0:
        raise InvalidParamsError("need real lam >= 0")
    if lam == 0.0:
        return maps.MapParams.unperturbed(a)
    return maps.MapParams.perturbed(a, lam)


def real_line_state(a, lam, depth=8):
    """Fixed point x1, the free critical point and zero, and the backward
    chain of zero preimages climbing monotonically toward x1."""
    p = _real_params(a, lam)
    x1 = roots.newton_refine(1.0, roots.TARGET_FIXED, p).root.real
    cm_seed, _ = maps.unperturbed_criticals(a)
    c_minus = roots.newton_refine(cm_seed, roots.TARGET_CRITICAL, p).root.real
    z0 = roots.newton_refine(a, roots.TARGET_PREIMAGE, p, w=0.0).root.real

    def bmap(x):
        v = maps.eval_map(complex(x, 0.0), p)
        return v.real

    chain = [z0]
    for _ in range(depth):
        target = chain[-1]
        lo, hi = target, x1
        flo = bmap(lo) - target
        fhi = bmap(hi) - target
        if not (flo < 0.0 < fhi):
            raise BracketFailureError(
                f"monotone bracket failed on [{lo}, {hi}] (f: {flo:.3e}, {fhi:.3e})",
                interval=(lo, hi))
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if bmap(mid) - target < 0.0:
                lo = mid
            else:
                hi = mid
        chain.append(0.5 * (lo + hi))
    return RealLineState(x1=x1, c_minus_real=c_minus, z0_real=z0,
                         backward_chain=chain[1:])


# ---------------------------------------------------------------------------
# curve preimages


@dataclass
class CurveComponent:
    points: np.ndarray
    degree: int
    surrounds_origin: bool
    annulus_side: str           # "inner" | "outer" | "mixed"
    pinch_points: list


@dataclass
class CurvePreimage:
    components: list
    samples_used: int

    @property
    def total_degree(self):
        return sum(c.degree for c in self.components)


def _winding_number(points, about=0.0 + 0.0j):
    angles = np.angle(points - about)
    d = np.diff(np.concatenate([angles, angles[:1]]))
    d = (d + math.pi) % (2.0 * math.pi) - math.pi
    return int(round(np.sum(d) / (2.0 * math.pi)))


def _in_middle_annulus(w, regions, budget=2000):
    """The closed region between the central component and the outer basin."""
    ka = regions.kernel_args()
    ar, ai, lr, li, resc, gate = ka[0], ka[1], ka[2], ka[3], ka[4], ka[5]
    R2 = resc * resc
    g2 = gate * gate
    esc, _ = kernels.escapes_cleanly(w.real, w.imag, ar, ai, lr, li, R2, g2, budget)
    if esc == 1:
        return False
    member, _ = kernels.t0_member(w.real, w.imag, ar, ai, lr, li, R2, g2, budget)
    return member == 0


def _densify(curve):
    mids = 0.5 * (curve + np.roll(curve, -1))
    out = np.empty(2 * len(curve), dtype=complex)
    out[0::2] = curve
    out[1::2] = mids
    return out


def preimage_curve(curve, p, regions, min_samples=256, max_samples=4096,
                   ambiguity_ratio=2.0):
    """Thread the six preimages of a sampled closed curve into closed
    components, with per-component covering degree and origin winding.

    The curve must surround the origin and stay between the central
    component and the outer basin.  Matching between consecutive sample
    preimages is by optimal assignment; when the best and second-best
    candidate are closer than the ambiguity ratio the curve is densified
    (up to max_samples) before giving up."""
    curve = np.asarray(curve, dtype=complex)
    if len(curve) < min_samples:
        raise InvalidParamsError(f"curve needs at least {min_samples} samples")
    if _winding_number(curve) == 0:
        raise InvalidParamsError("curve must surround the origin")
    for probe in curve[:: max(1, len(curve) // 32)]:
        if not _in_middle_annulus(probe, regions, regions.budget):
            raise InvalidParamsError(
                f"curve sample {probe:.5g} leaves the middle annulus")

    work = curve
    while True:
        try:
            cols = _thread_roots(work, p, ambiguity_ratio)
            break
        except ContinuationBreakError:
            if 2 * len(work) > max_samples:
                raise
            work = _densify(work)

    n_samples, six = cols.shape
    closing = _match(cols[-1], _apply_roots(work[0], p), ambiguity_ratio)
    perm = closing  # column c at the last sample continues as column perm[c]

    seen = np.zeros(six, dtype=bool)
    comps = []
    cm = regions.criticals.c_minus
    seg = np.median(np.abs(np.diff(work)))
    for c0 in range(six):
        if seen[c0]:
            continue
        cycle = []
        c = c0
        while not seen[c]:
            seen[c] = True
            cycle.append(c)
            c = int(perm[c])
        pts = np.concatenate([cols[:, cc] for cc in cycle])
        winding_img = len(cycle)
        surrounds = _winding_number(pts) != 0
        side = _annulus_side(pts, regions)
        pinch = []
        if np.min(np.abs(pts - cm)) < 4.0 * seg:
            pinch.append(cm)
        comps.append(CurveComponent(points=pts, degree=winding_img,
                                    surrounds_origin=surrounds,
                                    annulus_side=side, pinch_points=pinch))
    return CurvePreimage(components=comps, samples_used=len(work))


def _apply_roots(w, p):
    rs = roots.preimages_of_point(w, p)
    return rs.roots


def _match(prev, nxt, ambiguity_ratio):
    cost = np.abs(prev[:, None] - nxt[None, :])
    rows, colidx = linear_sum_assignment(cost)
    assign = np.empty(len(prev), dtype=int)
    for r, c in zip(rows, colidx):
        assign[r] = c
        d = cost[r, c]
        others = np.delete(cost[r], c)
        second = np.min(others)
        if d > 0 and second / d < ambiguity_ratio:
            raise ContinuationBreakError(
                f"ambiguous root continuation (ratio {second / d:.2f})")
    return assign


def _thread_roots(curve, p, ambiguity_ratio):
    n = len(curve)
    cols = np.empty((n, 6), dtype=complex)
    cols[0] = _apply_roots(curve[0], p)
    for j in range(1, n):
        nxt = _apply_roots(curve[j], p)
        assign = _match(cols[j - 1], nxt, ambiguity_ratio)
        cols[j] = nxt[assign]
    return cols


def _annulus_side(pts, regions):
    th = np.mod(np.angle(pts), 2.0 * math.pi)
    inner_at = np.interp(th, regions.a0_thetas, regions.a0_inner, period=2.0 * math.pi)
    outer_at = np.interp(th, regions.a0_thetas, regions.a0_outer, period=2.0 * math.pi)
    r = np.abs(pts)
    frac_inner = np.mean(r < inner_at)
    frac_outer = np.mean(r > outer_at)
    if frac_inner > 0.9:
        return "inner"
    if frac_outer > 0.9:
        return "outer"
    return "mixed"
