"""Scalar hot kernels: map steps, orbit classification, radial bisections.

Everything here works on explicit (re, im) float pairs so the jitted and
un-jitted paths execute the identical IEEE operations.  Infinity is encoded
as (inf, 0).  No function raises; failures travel as flags.

Classification vocabulary (see :mod:`blaschke.structure` for the wrappers):

* ``escapes_cleanly(w)`` - the orbit of w reaches |z| > r_escape before
  entering the central gate disk |z| <= gate.  The gate is the inner radius
  of the straight annulus, a disk guaranteed to contain the central Fatou
  component around the pole at 0.
* ``t0_member(z)``       - |z| <= gate and the *next* iterate escapes
  cleanly; this is exactly membership in the central component up to the
  orbit budget.
* ``maps_into_t0(z)``    - the next iterate is a t0 member; true precisely
  on the critical annulus and on the disk around the zero z0.
"""

import numpy as np

from .accel import maybe_njit, prange

KIND_NONESCAPING = 0
KIND_DIRECT = 1
KIND_THROUGH_T0 = 2

FINAL_NONE = 0
FINAL_T0 = 1
FINAL_D0 = 2

PRE_OK = 0
PRE_LAMBDA_ZERO = 1
PRE_CMINUS_LOST = 2
PRE_Z0_LOST = 3
PRE_ANNULUS = 4
PRE_BAND = 5
PRE_T0_BISECT = 6
PRE_D0_SEPARATION = 7

SUB_CAP = 600          # cap on the clean-escape sub-orbit length
ITIN_CAP = 62          # itinerary bits stored in an int64
BIG2 = 1e200           # |z|^2 beyond this collapses to the infinity marker


@maybe_njit
def step_pb(zr, zi, ar, ai, lr, li):
    """One application of z -> z^3 (z-a)/(1-conj(a) z) + lam/z^2.

    lam = 0 selects the unperturbed product (no pole at the origin).
    """
    if not (np.isfinite(zr) and np.isfinite(zi)):
        return np.inf, 0.0
    r2 = zr * zr + zi * zi
    if r2 > BIG2:
        return np.inf, 0.0
    pert = lr != 0.0 or li != 0.0
    if pert and r2 == 0.0:
        return np.inf, 0.0
    dr = 1.0 - (ar * zr + ai * zi)
    di = ai * zr - ar * zi
    d2 = dr * dr + di * di
    if d2 == 0.0:
        return np.inf, 0.0
    z2r = zr * zr - zi * zi
    z2i = 2.0 * zr * zi
    z3r = z2r * zr - z2i * zi
    z3i = z2r * zi + z2i * zr
    wr = zr - ar
    wi = zi - ai
    nr = z3r * wr - z3i * wi
    ni = z3r * wi + z3i * wr
    outr = (nr * dr + ni * di) / d2
    outi = (ni * dr - nr * di) / d2
    if pert:
        m2 = z2r * z2r + z2i * z2i
        if m2 == 0.0:
            return np.inf, 0.0
        outr += (lr * z2r + li * z2i) / m2
        outi += (li * z2r - lr * z2i) / m2
    if not (np.isfinite(outr) and np.isfinite(outi)):
        return np.inf, 0.0
    return outr, outi


@maybe_njit
def dstep_pb(zr, zi, ar, ai, lr, li):
    """Derivative of the perturbed product.

    B'(z) = (-3 conj(a) z^4 + (4+2|a|^2) z^3 - 3 a z^2) / (1-conj(a) z)^2
            - 2 lam / z^3
    """
    if not (np.isfinite(zr) and np.isfinite(zi)):
        return np.inf, 0.0
    r2 = zr * zr + zi * zi
    if r2 > BIG2:
        return np.inf, 0.0
    pert = lr != 0.0 or li != 0.0
    if pert and r2 == 0.0:
        return np.inf, 0.0
    m2 = ar * ar + ai * ai
    # inner quadratic q(z) = -3 conj(a) z^2 + (4+2|a|^2) z - 3a
    z2r = zr * zr - zi * zi
    z2i = 2.0 * zr * zi
    qr = -3.0 * (ar * z2r + ai * z2i) + (4.0 + 2.0 * m2) * zr - 3.0 * ar
    qi = -3.0 * (ar * z2i - ai * z2r) + (4.0 + 2.0 * m2) * zi - 3.0 * ai
    # numerator P = z^2 q(z)
    pr = z2r * qr - z2i * qi
    pi = z2r * qi + z2i * qr
    dr = 1.0 - (ar * zr + ai * zi)
    di = ai * zr - ar * zi
    d2r = dr * dr - di * di
    d2i = 2.0 * dr * di
    dd = d2r * d2r + d2i * d2i
    if dd == 0.0:
        return np.inf, 0.0
    outr = (pr * d2r + pi * d2i) / dd
    outi = (pi * d2r - pr * d2i) / dd
    if pert:
        z3r = z2r * zr - z2i * zi
        z3i = z2r * zi + z2i * zr
        m3 = z3r * z3r + z3i * z3i
        if m3 == 0.0:
            return np.inf, 0.0
        outr -= 2.0 * (lr * z3r + li * z3i) / m3
        outi -= 2.0 * (li * z3r - lr * z3i) / m3
    if not (np.isfinite(outr) and np.isfinite(outi)):
        return np.inf, 0.0
    return outr, outi


@maybe_njit
def d2step_pb(zr, zi, ar, ai, lr, li):
    """Second derivative.

    B''(z) = (P'(z)(1-conj(a) z) + 2 conj(a) P(z)) / (1-conj(a) z)^3
             + 6 lam / z^4
    with P(z) = -3 conj(a) z^4 + (4+2|a|^2) z^3 - 3 a z^2.
    """
    if not (np.isfinite(zr) and np.isfinite(zi)):
        return np.inf, 0.0
    r2 = zr * zr + zi * zi
    if r2 > BIG2:
        return np.inf, 0.0
    pert = lr != 0.0 or li != 0.0
    if pert and r2 == 0.0:
        return np.inf, 0.0
    m2 = ar * ar + ai * ai
    k3 = 4.0 + 2.0 * m2
    z2r = zr * zr - zi * zi
    z2i = 2.0 * zr * zi
    z3r = z2r * zr - z2i * zi
    z3i = z2r * zi + z2i * zr
    z4r = z3r * zr - z3i * zi
    z4i = z3r * zi + z3i * zr
    # P and P'
    pr = -3.0 * (ar * z4r + ai * z4i) + k3 * z3r - 3.0 * (ar * z2r - ai * z2i)
    pi = -3.0 * (ar * z4i - ai * z4r) + k3 * z3i - 3.0 * (ar * z2i + ai * z2r)
    ppr = -12.0 * (ar * z3r + ai * z3i) + 3.0 * k3 * z2r - 6.0 * (ar * zr - ai * zi)
    ppi = -12.0 * (ar * z3i - ai * z3r) + 3.0 * k3 * z2i - 6.0 * (ar * zi + ai * zr)
    dr = 1.0 - (ar * zr + ai * zi)
    di = ai * zr - ar * zi
    # numerator N = P' * d + 2 conj(a) * P
    nr = ppr * dr - ppi * di + 2.0 * (ar * pr + ai * pi)
    ni = ppr * di + ppi * dr + 2.0 * (ar * pi - ai * pr)
    # d^3
    d2r_ = dr * dr - di * di
    d2i_ = 2.0 * dr * di
    d3r = d2r_ * dr - d2i_ * di
    d3i = d2r_ * di + d2i_ * dr
    dd = d3r * d3r + d3i * d3i
    if dd == 0.0:
        return np.inf, 0.0
    outr = (nr * d3r + ni * d3i) / dd
    outi = (ni * d3r - nr * d3i) / dd
    if pert:
        z4m = z4r * z4r + z4i * z4i
        if z4m == 0.0:
            return np.inf, 0.0
        outr += 6.0 * (lr * z4r + li * z4i) / z4m
        outi += 6.0 * (li * z4r - lr * z4i) / z4m
    if not (np.isfinite(outr) and np.isfinite(outi)):
        return np.inf, 0.0
    return outr, outi


@maybe_njit
def step_mcmullen(zr, zi, lr, li, n, d):
    """One application of z -> z^n + lam / z^d."""
    if not (np.isfinite(zr) and np.isfinite(zi)):
        return np.inf, 0.0
    r2 = zr * zr + zi * zi
    if r2 == 0.0 or r2 > BIG2:
        return np.inf, 0.0
    pr = 1.0
    pi = 0.0
    for _ in range(n):
        pr, pi = pr * zr - pi * zi, pr * zi + pi * zr
    qr = 1.0
    qi = 0.0
    for _ in range(d):
        qr, qi = qr * zr - qi * zi, qr * zi + qi * zr
    q2 = qr * qr + qi * qi
    if q2 == 0.0:
        return np.inf, 0.0
    outr = pr + (lr * qr + li * qi) / q2
    outi = pi + (li * qr - lr * qi) / q2
    if not (np.isfinite(outr) and np.isfinite(outi)):
        return np.inf, 0.0
    return outr, outi


@maybe_njit
def dstep_mcmullen(zr, zi, lr, li, n, d):
    """Derivative n z^(n-1) - d lam / z^(d+1)."""
    if not (np.isfinite(zr) and np.isfinite(zi)):
        return np.inf, 0.0
    r2 = zr * zr + zi * zi
    if r2 == 0.0 or r2 > BIG2:
        return np.inf, 0.0
    pr = 1.0
    pi = 0.0
    for _ in range(n - 1):
        pr, pi = pr * zr - pi * zi, pr * zi + pi * zr
    qr = 1.0
    qi = 0.0
    for _ in range(d + 1):
        qr, qi = qr * zr - qi * zi, qr * zi + qi * zr
    q2 = qr * qr + qi * qi
    if q2 == 0.0:
        return np.inf, 0.0
    outr = n * pr - d * (lr * qr + li * qi) / q2
    outi = n * pi - d * (li * qr - lr * qi) / q2
    if not (np.isfinite(outr) and np.isfinite(outi)):
        return np.inf, 0.0
    return outr, outi


@maybe_njit
def escapes_cleanly(wr, wi, ar, ai, lr, li, R2, g2, budget):
    """(flag, steps): does the orbit of w exceed sqrt(R2) before entering
    the gate disk?  steps is the index of the deciding iterate (w itself
    counts as step 0)."""
    cr = wr
    ci = wi
    for k in range(budget + 1):
        if not (np.isfinite(cr) and np.isfinite(ci)):
            return 1, k
        m2 = cr * cr + ci * ci
        if m2 > R2:
            return 1, k
        if m2 <= g2:
            return 0, k
        cr, ci = step_pb(cr, ci, ar, ai, lr, li)
    return 0, budget + 1


@maybe_njit
def t0_member(zr, zi, ar, ai, lr, li, R2, g2, budget):
    """(flag, steps): z belongs to the central component proxy."""
    if not (np.isfinite(zr) and np.isfinite(zi)):
        return 0, 0
    m2 = zr * zr + zi * zi
    if m2 > g2:
        return 0, 0
    wr, wi = step_pb(zr, zi, ar, ai, lr, li)
    b = budget
    if b > SUB_CAP:
        b = SUB_CAP
    return escapes_cleanly(wr, wi, ar, ai, lr, li, R2, g2, b)


@maybe_njit
def maps_into_t0(zr, zi, ar, ai, lr, li, R2, g2, budget):
    """1 iff the next iterate is a t0 member (the one-step test)."""
    wr, wi = step_pb(zr, zi, ar, ai, lr, li)
    ok, _ = t0_member(wr, wi, ar, ai, lr, li, R2, g2, budget)
    return ok


@maybe_njit
def band_at(zr, zi, inner, outer):
    """Annulus band radii at the argument of z, by periodic linear
    interpolation of the per-angle boundary samples.  Mirror-symmetric by
    construction: conjugate points see conjugate-sampled bands exactly."""
    n = inner.shape[0]
    th = np.arctan2(abs(zi), zr)          # in [0, pi]
    pos = th * n / (2.0 * np.pi)
    if zi < 0.0:
        pos = n - pos
    i0 = int(pos)
    frac = pos - i0
    if i0 >= n:
        i0 = n - 1
        frac = 1.0
    i1 = i0 + 1
    if i1 == n:
        i1 = 0
    lo = inner[i0] * (1.0 - frac) + inner[i1] * frac
    hi = outer[i0] * (1.0 - frac) + outer[i1] * frac
    return lo, hi


@maybe_njit
def classify_point(zr, zi, ar, ai, lr, li, r_escape, gate, inner, outer,
                   z0r, z0i, d0_gate, max_iter):
    """Full orbit fate of one point.

    Returns (kind, escape_time, t0_entry, itin_bits, itin_len, final,
    ambiguous, itin_overflow) as integers.  escape_time/t0_entry are -1
    when not applicable.  Itinerary bits: bit k set means step k was on the
    inner side of the critical annulus (below its sampled inner boundary at
    that angle); unset means outer side.  A step landing inside the sampled
    band terminates the itinerary; if the orbit then fails to enter the
    central component within 3 steps the point is flagged ambiguous.
    """
    R2 = r_escape * r_escape
    g2 = gate * gate
    d0g2 = d0_gate * d0_gate
    bits = 0
    nbits = 0
    band = False
    band_step = -1
    overflow = False
    cr = zr
    ci = zi
    for k in range(max_iter + 1):
        if not (np.isfinite(cr) and np.isfinite(ci)):
            amb = 1 if band else 0
            return KIND_DIRECT, k, -1, 0, 0, FINAL_NONE, amb, 0
        m2 = cr * cr + ci * ci
        if m2 > R2:
            amb = 1 if band else 0
            return KIND_DIRECT, k, -1, 0, 0, FINAL_NONE, amb, 0
        wr, wi = step_pb(cr, ci, ar, ai, lr, li)
        if m2 <= g2:
            budget = max_iter - k
            if budget > SUB_CAP:
                budget = SUB_CAP
            ok, sub = escapes_cleanly(wr, wi, ar, ai, lr, li, R2, g2, budget)
            if ok == 1:
                amb = 1 if band and (k - band_step > 3) else 0
                ovf = 1 if overflow else 0
                # the step before entry sits in the annulus: normalize the
                # word to the k-1 pre-annulus symbols
                keep = k - 1 if k >= 1 else 0
                if nbits > keep:
                    nbits = keep
                    bits = bits & ((1 << nbits) - 1)
                return KIND_THROUGH_T0, k + 1 + sub, k, bits, nbits, FINAL_T0, amb, ovf
        if d0g2 > 0.0 and m2 > g2:
            ddr = cr - z0r
            ddi = ci - z0i
            if ddr * ddr + ddi * ddi <= d0g2:
                w2 = wr * wr + wi * wi
                if w2 <= g2:
                    budget = max_iter - k
                    if budget > SUB_CAP:
                        budget = SUB_CAP
                    vr, vi = step_pb(wr, wi, ar, ai, lr, li)
                    ok, sub = escapes_cleanly(vr, vi, ar, ai, lr, li, R2, g2, budget)
                    if ok == 1:
                        amb = 1 if band and (k - band_step > 3) else 0
                        ovf = 1 if overflow else 0
                        return KIND_THROUGH_T0, k + 2 + sub, k, bits, nbits, FINAL_D0, amb, ovf
        if not band:
            lo, hi = band_at(cr, ci, inner, outer)
            bit = -1
            if m2 > hi * hi:
                bit = 0
            elif m2 < lo * lo:
                bit = 1
            else:
                band = True
                band_step = k
            if bit >= 0:
                if nbits < ITIN_CAP:
                    if bit == 1:
                        bits |= 1 << nbits
                    nbits += 1
                else:
                    overflow = True
        cr = wr
        ci = wi
    amb = 1 if band else 0
    ovf = 1 if overflow else 0
    return KIND_NONESCAPING, -1, -1, bits, nbits, FINAL_NONE, amb, ovf


@maybe_njit(parallel=True)
def classify_grid(xs, ys, ar, ai, lr, li, r_escape, gate, inner, outer,
                  z0r, z0i, d0_gate, max_iter,
                  kind, esc, t0e, bits, blen, fin, amb, ovf):
    """Row-parallel dynamical-plane classification; per-pixel independent,
    so the result is identical for any worker count."""
    for i in prange(ys.shape[0]):
        for j in range(xs.shape[0]):
            res = classify_point(xs[j], ys[i], ar, ai, lr, li, r_escape,
                                 gate, inner, outer, z0r, z0i, d0_gate, max_iter)
            kind[i, j] = res[0]
            esc[i, j] = res[1]
            t0e[i, j] = res[2]
            bits[i, j] = res[3]
            blen[i, j] = res[4]
            fin[i, j] = res[5]
            amb[i, j] = res[6]
            ovf[i, j] = res[7]


@maybe_njit
def newton_critical(zr, zi, ar, ai, lr, li, cap, tol):
    """Newton on B'(z) = 0.  Returns (re, im, iterations, code); code 1 ok,
    0 no convergence, 2 second derivative vanished."""
    cr = zr
    ci = zi
    for it in range(cap + 1):
        fr, fi = dstep_pb(cr, ci, ar, ai, lr, li)
        if not (np.isfinite(fr) and np.isfinite(fi)):
            return cr, ci, it, 0
        if fr * fr + fi * fi <= tol * tol:
            return cr, ci, it, 1
        if it == cap:
            return cr, ci, it, 0
        gr, gi = d2step_pb(cr, ci, ar, ai, lr, li)
        g2 = gr * gr + gi * gi
        if g2 == 0.0 or not np.isfinite(g2):
            return cr, ci, it, 2
        cr -= (fr * gr + fi * gi) / g2
        ci -= (fi * gr - fr * gi) / g2
    return cr, ci, cap, 0


@maybe_njit
def newton_preimage(zr, zi, wr, wi, ar, ai, lr, li, cap, tol):
    """Newton on B(z) = w."""
    cr = zr
    ci = zi
    for it in range(cap + 1):
        br, bi = step_pb(cr, ci, ar, ai, lr, li)
        if not (np.isfinite(br) and np.isfinite(bi)):
            return cr, ci, it, 0
        fr = br - wr
        fi = bi - wi
        if fr * fr + fi * fi <= tol * tol:
            return cr, ci, it, 1
        if it == cap:
            return cr, ci, it, 0
        gr, gi = dstep_pb(cr, ci, ar, ai, lr, li)
        g2 = gr * gr + gi * gi
        if g2 == 0.0 or not np.isfinite(g2):
            return cr, ci, it, 2
        cr -= (fr * gr + fi * gi) / g2
        ci -= (fi * gr - fr * gi) / g2
    return cr, ci, cap, 0


@maybe_njit
def newton_fixed(zr, zi, ar, ai, lr, li, cap, tol):
    """Newton on B(z) = z."""
    cr = zr
    ci = zi
    for it in range(cap + 1):
        br, bi = step_pb(cr, ci, ar, ai, lr, li)
        if not (np.isfinite(br) and np.isfinite(bi)):
            return cr, ci, it, 0
        fr = br - cr
        fi = bi - ci
        if fr * fr + fi * fi <= tol * tol:
            return cr, ci, it, 1
        if it == cap:
            return cr, ci, it, 0
        gr, gi = dstep_pb(cr, ci, ar, ai, lr, li)
        gr -= 1.0
        g2 = gr * gr + gi * gi
        if g2 == 0.0 or not np.isfinite(g2):
            return cr, ci, it, 2
        cr -= (fr * gr + fi * gi) / g2
        ci -= (fi * gr - fr * gi) / g2
    return cr, ci, cap, 0


@maybe_njit
def radial_escape_boundary(thetas, ar, ai, lr, li, r_lo, r_hi, R2, g2,
                           budget, iters, radii, flags):
    """Bisect, per angle, the radius where the fate flips from eventual
    gate entry to clean escape; approximates the outer basin boundary."""
    for t in range(thetas.shape[0]):
        c = np.cos(thetas[t])
        s = np.sin(thetas[t])
        lo_ok, _ = escapes_cleanly(r_lo * c, r_lo * s, ar, ai, lr, li, R2, g2, budget)
        hi_ok, _ = escapes_cleanly(r_hi * c, r_hi * s, ar, ai, lr, li, R2, g2, budget)
        if lo_ok == 1 or hi_ok == 0:
            radii[t] = np.nan
            flags[t] = 0
            continue
        lo = r_lo
        hi = r_hi
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            ok, _ = escapes_cleanly(mid * c, mid * s, ar, ai, lr, li, R2, g2, budget)
            if ok == 1:
                hi = mid
            else:
                lo = mid
        radii[t] = 0.5 * (lo + hi)
        flags[t] = 1


@maybe_njit
def a0_band(thetas, ar, ai, lr, li, r_geo, cap_hi, floor_lo, R2, g2,
            budget, iters, inner, outer, flags):
    """Per angle, bracket and bisect the two radii where the one-step
    central-entry test switches off; brackets grow/shrink geometrically
    from the straight-annulus geometric-mean radius."""
    for t in range(thetas.shape[0]):
        c = np.cos(thetas[t])
        s = np.sin(thetas[t])
        if maps_into_t0(r_geo * c, r_geo * s, ar, ai, lr, li, R2, g2, budget) == 0:
            inner[t] = np.nan
            outer[t] = np.nan
            flags[t] = 0
            continue
        # outer edge
        lo = r_geo
        hi = r_geo
        found = False
        while hi < cap_hi:
            nxt = hi * 1.25
            if nxt > cap_hi:
                nxt = cap_hi
            if maps_into_t0(nxt * c, nxt * s, ar, ai, lr, li, R2, g2, budget) == 0:
                lo = hi
                hi = nxt
                found = True
                break
            hi = nxt
        if not found:
            inner[t] = np.nan
            outer[t] = np.nan
            flags[t] = 0
            continue
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            if maps_into_t0(mid * c, mid * s, ar, ai, lr, li, R2, g2, budget) == 1:
                lo = mid
            else:
                hi = mid
        outer[t] = 0.5 * (lo + hi)
        # inner edge
        hi2_ = r_geo
        lo2_ = r_geo
        found = False
        while lo2_ > floor_lo:
            nxt = lo2_ * 0.75
            if nxt < floor_lo:
                nxt = floor_lo
            if maps_into_t0(nxt * c, nxt * s, ar, ai, lr, li, R2, g2, budget) == 0:
                hi2_ = lo2_
                lo2_ = nxt
                found = True
                break
            lo2_ = nxt
        if not found:
            inner[t] = np.nan
            outer[t] = np.nan
            flags[t] = 0
            continue
        for _ in range(iters):
            mid = 0.5 * (lo2_ + hi2_)
            if maps_into_t0(mid * c, mid * s, ar, ai, lr, li, R2, g2, budget) == 1:
                hi2_ = mid
            else:
                lo2_ = mid
        inner[t] = 0.5 * (lo2_ + hi2_)
        flags[t] = 1


@maybe_njit
def t0_inscribed(thetas, ar, ai, lr, li, gate, R2, g2, budget, iters, radii, flags):
    """Per angle, the radius where central-component membership switches
    off along the ray from the origin."""
    for t in range(thetas.shape[0]):
        c = np.cos(thetas[t])
        s = np.sin(thetas[t])
        lo = gate * 1e-6
        ok, _ = t0_member(lo * c, lo * s, ar, ai, lr, li, R2, g2, budget)
        if ok == 0:
            radii[t] = np.nan
            flags[t] = 0
            continue
        hi = gate
        ok, _ = t0_member(hi * c, hi * s, ar, ai, lr, li, R2, g2, budget)
        if ok == 1:
            radii[t] = np.nan
            flags[t] = 0
            continue
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            ok, _ = t0_member(mid * c, mid * s, ar, ai, lr, li, R2, g2, budget)
            if ok == 1:
                lo = mid
            else:
                hi = mid
        radii[t] = 0.5 * (lo + hi)
        flags[t] = 1


@maybe_njit
def d0_boundary(thetas, z0r, z0i, ar, ai, lr, li, cap, R2, g2, budget,
                iters, radii, flags):
    """Per angle, the radius around z0 where the one-step central-entry
    test switches off; approximates the boundary of the disk component at
    the free zero."""
    for t in range(thetas.shape[0]):
        c = np.cos(thetas[t])
        s = np.sin(thetas[t])
        lo = cap * 1e-6
        if maps_into_t0(z0r + lo * c, z0i + lo * s, ar, ai, lr, li, R2, g2, budget) == 0:
            radii[t] = np.nan
            flags[t] = 0
            continue
        if maps_into_t0(z0r + cap * c, z0i + cap * s, ar, ai, lr, li, R2, g2, budget) == 1:
            radii[t] = np.nan
            flags[t] = 0
            continue
        lo_ = lo
        hi_ = cap
        for _ in range(iters):
            mid = 0.5 * (lo_ + hi_)
            if maps_into_t0(z0r + mid * c, z0i + mid * s, ar, ai, lr, li, R2, g2, budget) == 1:
                lo_ = mid
            else:
                hi_ = mid
        radii[t] = 0.5 * (lo_ + hi_)
        flags[t] = 1


@maybe_njit
def annulus_uniform(n, ar, ai, lr, li, r_geo, R2, g2, budget):
    """Count straight-annulus samples (on the geometric-mean circle) that
    fail the one-step central-entry test; 0 means the precondition holds."""
    bad = 0
    for k in range(n):
        th = 2.0 * np.pi * k / n
        if maps_into_t0(r_geo * np.cos(th), r_geo * np.sin(th), ar, ai, lr, li,
                        R2, g2, budget) == 0:
            bad += 1
    return bad


@maybe_njit
def param_point(lr, li, ar, ai, seed_cr, seed_ci, r_escape, max_iter,
                n_band, bisect_iters):
    """Classify the free critical point at one parameter-plane pixel.

    Regions are recomputed from scratch at this lam (no interpolation
    across pixels).  Returns
    (ok, failcode, kind, esc, t0e, bits, blen, fin, amb,
     a0_lo, a0_hi, gate, cm_re, cm_im, z0_re, z0_im, d0_gate, t0_ins).
    """
    nanf = np.nan
    lmod2 = lr * lr + li * li
    amod = np.sqrt(ar * ar + ai * ai)
    if lmod2 == 0.0:
        return 0, PRE_LAMBDA_ZERO, 0, 0, 0, 0, 0, 0, 0, nanf, nanf, nanf, nanf, nanf, nanf, nanf, nanf, nanf
    lmod = np.sqrt(lmod2)
    gate = (lmod / (2.0 * amod)) ** 0.2
    rout = (2.0 * lmod / amod) ** 0.2
    rgeo = np.sqrt(gate * rout)
    R2 = r_escape * r_escape
    g2 = gate * gate
    # continue the free critical point from its unperturbed position
    cmr, cmi, _, code = newton_critical(seed_cr, seed_ci, ar, ai, lr, li, 50, 1e-12)
    dr = cmr - seed_cr
    di = cmi - seed_ci
    seed2 = seed_cr * seed_cr + seed_ci * seed_ci
    if code != 1 or dr * dr + di * di > 0.25 * seed2:
        return 0, PRE_CMINUS_LOST, 0, 0, 0, 0, 0, 0, 0, nanf, nanf, gate, nanf, nanf, nanf, nanf, nanf, nanf
    # continue the free zero from a
    z0r, z0i, _, code = newton_preimage(ar, ai, 0.0, 0.0, ar, ai, lr, li, 50, 1e-12)
    dr = z0r - ar
    di = z0i - ai
    if code != 1 or dr * dr + di * di > 0.25 * (ar * ar + ai * ai):
        return 0, PRE_Z0_LOST, 0, 0, 0, 0, 0, 0, 0, nanf, nanf, gate, cmr, cmi, nanf, nanf, nanf, nanf
    if annulus_uniform(8, ar, ai, lr, li, rgeo, R2, g2, max_iter) > 0:
        return 0, PRE_ANNULUS, 0, 0, 0, 0, 0, 0, 0, nanf, nanf, gate, cmr, cmi, z0r, z0i, nanf, nanf
    cm_mod = np.sqrt(cmr * cmr + cmi * cmi)
    z0_mod = np.sqrt(z0r * z0r + z0i * z0i)
    # expansion may run up to just inside the free critical point (where the
    # annular structure genuinely collapses) but must stay clear of the disk
    # component at the free zero
    cap_hi = min(0.95 * cm_mod, 0.75 * z0_mod)
    floor_lo = gate * 1e-3
    thetas = np.empty(n_band)
    for t in range(n_band):
        thetas[t] = 2.0 * np.pi * t / n_band
    inner = np.empty(n_band)
    outer = np.empty(n_band)
    flags = np.empty(n_band, dtype=np.int64)
    a0_band(thetas, ar, ai, lr, li, rgeo, cap_hi, floor_lo, R2, g2,
            max_iter, bisect_iters, inner, outer, flags)
    a0_lo = 1e300
    a0_hi = 0.0
    for t in range(n_band):
        if flags[t] == 0:
            return 0, PRE_BAND, 0, 0, 0, 0, 0, 0, 0, nanf, nanf, gate, cmr, cmi, z0r, z0i, nanf, nanf
        if inner[t] < a0_lo:
            a0_lo = inner[t]
        if outer[t] > a0_hi:
            a0_hi = outer[t]
    th4 = np.empty(4)
    for t in range(4):
        th4[t] = 2.0 * np.pi * t / 4.0
    rad4 = np.empty(4)
    fl4 = np.empty(4, dtype=np.int64)
    t0_inscribed(th4, ar, ai, lr, li, gate, R2, g2, max_iter, bisect_iters, rad4, fl4)
    t0_ins = 1e300
    for t in range(4):
        if fl4[t] == 0:
            return 0, PRE_T0_BISECT, 0, 0, 0, 0, 0, 0, 0, a0_lo, a0_hi, gate, cmr, cmi, z0r, z0i, nanf, nanf
        if rad4[t] < t0_ins:
            t0_ins = rad4[t]
    sep = z0_mod - a0_hi
    if sep <= 0.0:
        return 0, PRE_D0_SEPARATION, 0, 0, 0, 0, 0, 0, 0, a0_lo, a0_hi, gate, cmr, cmi, z0r, z0i, nanf, t0_ins
    dzr, dzi = dstep_pb(z0r, z0i, ar, ai, lr, li)
    dmod = np.sqrt(dzr * dzr + dzi * dzi)
    if dmod == 0.0 or not np.isfinite(dmod):
        d0g = 0.45 * sep
    else:
        d0g = 4.0 * t0_ins / dmod
        if d0g > 0.45 * sep:
            d0g = 0.45 * sep
    kind, esc, t0e, bits, blen, fin, amb, _ = classify_point(
        cmr, cmi, ar, ai, lr, li, r_escape, gate, inner, outer,
        z0r, z0i, d0g, max_iter)
    return 1, PRE_OK, kind, esc, t0e, bits, blen, fin, amb, a0_lo, a0_hi, gate, cmr, cmi, z0r, z0i, d0g, t0_ins


@maybe_njit(parallel=True)
def param_grid(res_lr, res_li, ar, ai, seed_cr, seed_ci, r_escape, max_iter,
               n_band, bisect_iters,
               ok, failcode, kind, esc, t0e, bits, blen, fin, amb):
    """Row-parallel parameter-plane classification."""
    for i in prange(res_li.shape[0]):
        for j in range(res_lr.shape[0]):
            r = param_point(res_lr[j], res_li[i], ar, ai, seed_cr, seed_ci,
                            r_escape, max_iter, n_band, bisect_iters)
            ok[i, j] = r[0]
            failcode[i, j] = r[1]
            kind[i, j] = r[2]
            esc[i, j] = r[3]
            t0e[i, j] = r[4]
            bits[i, j] = r[5]
            blen[i, j] = r[6]
            fin[i, j] = r[7]
            amb[i, j] = r[8]
