"""Pixel grids: rendering, component labelling, hole counting, encoding.

Conventions fixed here:

* pixel (i, j) maps to center + width ((j+0.5)/res - 0.5)
  + i width (0.5 - (i+0.5)/res); row-major, top row carries the largest
  imaginary part;
* components are 4-connected pixel sets of equal label; holes are
  8-connected complement regions inside the padded bounding box that do not
  reach its border; connectivity = 1 + holes;
* ambiguous pixels (and parameter pixels whose preconditions failed) are
  excluded from labelling and reported by count.
"""

import json
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from . import ENGINE, kernels, maps, structure
from .errors import InvalidParamsError, RayInconclusiveError

DYNAMICAL = "dynamical"
PARAMETER = "parameter"

FOUR_CONN = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.int32)
EIGHT_CONN = np.ones((3, 3), dtype=np.int32)

RES_MIN = 16
RES_MAX = 16384


@dataclass(frozen=True)
class PlaneSpec:
    """Viewport plus iteration budget for one render."""

    center: complex
    width: float
    resolution: int
    max_iter: int = 2000
    r_escape: float = 10.0
    plane_kind: str = DYNAMICAL
    params: maps.MapParams | None = None     # dynamical plane
    a: complex | None = None                 # parameter plane
    supersample: bool = False

    def __post_init__(self):
        if not RES_MIN <= self.resolution <= RES_MAX:
            raise InvalidParamsError(
                f"resolution {self.resolution} outside [{RES_MIN}, {RES_MAX}]")
        if self.width <= 0:
            raise InvalidParamsError("width must be positive")
        if self.plane_kind == DYNAMICAL:
            if self.params is None:
                raise InvalidParamsError("dynamical plane needs map params")
        elif self.plane_kind == PARAMETER:
            if self.a is None:
                raise InvalidParamsError("parameter plane needs a")
        else:
            raise InvalidParamsError(f"unknown plane kind {self.plane_kind!r}")

    def axis_x(self):
        j = np.arange(self.resolution)
        return self.center.real + self.width * ((j + 0.5) / self.resolution - 0.5)

    def axis_y(self):
        i = np.arange(self.resolution)
        return self.center.imag + self.width * (0.5 - (i + 0.5) / self.resolution)

    def pixel_value(self, i, j):
        return complex(self.axis_x()[j], self.axis_y()[i])

    def pixel_of(self, z):
        res = self.resolution
        j = int(np.floor((z.real - self.center.real) / self.width * res + res / 2.0))
        i = int(np.floor((self.center.imag - z.imag) / self.width * res + res / 2.0))
        return i, j

    def contains(self, z):
        i, j = self.pixel_of(z)
        return 0 <= i < self.resolution and 0 <= j < self.resolution

    def to_json(self):
        lam = None
        a = self.a
        if self.plane_kind == DYNAMICAL:
            a = self.params.a
            lam = [self.params.lam.real, self.params.lam.imag]
        return {
            "center": [self.center.real, self.center.imag],
            "width": self.width,
            "resolution": self.resolution,
            "maxIter": self.max_iter,
            "rEscape": self.r_escape,
            "planeKind": self.plane_kind,
            "a": [a.real, a.imag],
            "lambda": lam,
        }


@dataclass
class RasterGrid:
    """Per-pixel fate records over one viewport."""

    spec: PlaneSpec
    kind: np.ndarray
    esc: np.ndarray
    t0e: np.ndarray
    bits: np.ndarray
    blen: np.ndarray
    fin: np.ndarray
    amb: np.ndarray
    ovf: np.ndarray
    precond_ok: np.ndarray
    failcode: np.ndarray | None = None
    regions: structure.StructuralRegions | None = None
    engine: str = ENGINE
    _components: list | None = field(default=None, repr=False)
    _comp_image: np.ndarray | None = field(default=None, repr=False)

    @property
    def resolution(self):
        return int(self.kind.shape[0])

    def fate_at(self, i, j):
        return structure.fate_from_record(
            self.kind[i, j], self.esc[i, j], self.t0e[i, j], self.bits[i, j],
            self.blen[i, j], self.fin[i, j], self.amb[i, j], self.ovf[i, j])

    def ambiguous_count(self):
        return int(np.sum((self.amb != 0) & (self.precond_ok != 0)))

    def precond_fail_count(self):
        return int(np.sum(self.precond_ok == 0))

    def components(self, min_area=1):
        if self._components is None:
            self._components, self._comp_image = label_components(self, return_image=True)
        return [c for c in self._components if c.area_px >= min_area]

    def component_image(self):
        """Per-pixel component id (-1 for excluded pixels)."""
        self.components()
        return self._comp_image


def itinerary_text(bits, blen, t0e, fin, kind):
    """Stable component label: bit word for annulus preimages, T0 for the
    central disk, Dn for the disk chain, escape/bounded otherwise."""
    if kind == kernels.KIND_DIRECT:
        return "escape"
    if kind == kernels.KIND_NONESCAPING:
        return "bounded"
    if fin == kernels.FINAL_D0:
        return f"D{int(t0e)}"
    if t0e == 0:
        return "T0"
    return "".join(str((int(bits) >> k) & 1) for k in range(int(blen)))


def _key_rows(grid):
    """Per-pixel label rows; escape-time is not part of the key."""
    kind = grid.kind.astype(np.int64)
    t0e = np.where(kind == kernels.KIND_THROUGH_T0, grid.t0e.astype(np.int64), 0)
    blen = np.where(kind == kernels.KIND_THROUGH_T0, grid.blen.astype(np.int64), 0)
    bits = np.where(kind == kernels.KIND_THROUGH_T0, grid.bits.astype(np.int64), 0)
    fin = np.where(kind == kernels.KIND_THROUGH_T0, grid.fin.astype(np.int64), 0)
    return np.stack([kind, t0e, blen, bits, fin], axis=-1)


@dataclass
class ComponentStats:
    """One 4-connected component of equal-label pixels."""

    component_id: int
    fate_kind: str
    t0_entry: int | None
    itinerary: str
    final_region: str | None
    area_px: int
    connectivity: int
    truncated: bool
    mean_radius: float
    contains: list
    bbox: tuple
    seed_pixel: tuple

    def to_json(self):
        return {
            "id": self.component_id,
            "itinerary": self.itinerary,
            "areaPx": self.area_px,
            "connectivity": self.connectivity,
            "truncated": self.truncated,
            "meanRadius": self.mean_radius,
        }


def _hole_count(mask):
    """Holes of a 4-connected component mask: 8-connected complement
    regions of the padded bounding box that do not touch its border."""
    padded = np.pad(~mask, 1, constant_values=True)
    lab, n = ndimage.label(padded, structure=EIGHT_CONN)
    border = set(np.unique(np.concatenate([
        lab[0, :], lab[-1, :], lab[:, 0], lab[:, -1]])))
    border.discard(0)
    holes = [k for k in range(1, n + 1) if k not in border]
    return len(holes)


def label_components(grid, return_image=False):
    """Group pixels by identical fate label into 4-connected components and
    estimate each component's connectivity by hole counting."""
    res = grid.resolution
    comp_image = np.full((res, res), -1, dtype=np.int64)
    valid = (grid.amb == 0) & (grid.precond_ok != 0)
    rows = _key_rows(grid).reshape(-1, 5)
    flat_valid = valid.ravel()
    ids = np.full(res * res, -1, dtype=np.int64)
    if np.any(flat_valid):
        keys, inverse = np.unique(rows[flat_valid], axis=0, return_inverse=True)
        ids[flat_valid] = inverse
    else:
        keys = np.empty((0, 5), dtype=np.int64)
    ids = ids.reshape(res, res)
    key_boxes = ndimage.find_objects(ids + 1, max_label=len(keys))

    xs = grid.spec.axis_x()
    ys = grid.spec.axis_y()
    radius = np.abs(xs[None, :] + 1j * ys[:, None])

    marked = []
    if grid.regions is not None:
        cs = grid.regions.criticals
        for name, z in (("origin", 0.0 + 0.0j), ("c_minus", cs.c_minus), ("z0", cs.z0)):
            if grid.spec.contains(z):
                marked.append((name, grid.spec.pixel_of(z)))

    comps = []
    next_id = 0
    for key_idx in range(len(keys)):
        box = key_boxes[key_idx]
        if box is None:
            continue
        kkind, kt0e, kblen, kbits, kfin = (int(v) for v in keys[key_idx])
        r0, c0 = box[0].start, box[1].start
        sub = ids[box] == key_idx
        lab, n = ndimage.label(sub, structure=FOUR_CONN)
        slices = ndimage.find_objects(lab)
        text = itinerary_text(kbits, kblen, kt0e, kfin, kkind)
        for ci in range(1, n + 1):
            sl = slices[ci - 1]
            cmask = lab[sl] == ci
            area = int(cmask.sum())
            i_off = r0 + sl[0].start
            j_off = c0 + sl[1].start
            i1c = i_off + cmask.shape[0] - 1
            j1c = j_off + cmask.shape[1] - 1
            truncated = i_off == 0 or j_off == 0 or i1c == res - 1 or j1c == res - 1
            # a 4-connected set needs at least 8 pixels to enclose anything
            holes = _hole_count(cmask) if area >= 8 else 0
            mean_r = float(radius[i_off:i1c + 1, j_off:j1c + 1][cmask].mean())
            inside = []
            for name, (pi, pj) in marked:
                if (i_off <= pi <= i1c and j_off <= pj <= j1c
                        and cmask[pi - i_off, pj - j_off]):
                    inside.append(name)
            if area > 4:
                interior = ndimage.distance_transform_cdt(cmask)
                flat = int(np.argmax(interior))
            else:
                flat = int(np.argmax(cmask))
            local = (flat // cmask.shape[1], flat % cmask.shape[1])
            view = comp_image[i_off:i1c + 1, j_off:j1c + 1]
            view[cmask] = next_id
            comps.append(ComponentStats(
                component_id=next_id,
                fate_kind=structure.KIND_NAMES[kkind],
                t0_entry=int(kt0e) if kkind == kernels.KIND_THROUGH_T0 else None,
                itinerary=text,
                final_region=structure.FINAL_NAMES[kfin] if kkind == kernels.KIND_THROUGH_T0 else None,
                area_px=area,
                connectivity=1 + holes,
                truncated=truncated,
                mean_radius=mean_r,
                contains=inside,
                bbox=(int(i_off), int(i1c), int(j_off), int(j1c)),
                seed_pixel=(int(i_off + local[0]), int(j_off + local[1])),
            ))
            next_id += 1
    if return_image:
        return comps, comp_image
    return comps


def component_at(grid, z):
    """The labelled component whose pixel set contains z."""
    if not grid.spec.contains(z):
        return None
    i, j = grid.spec.pixel_of(z)
    comps = grid.components()
    cid = int(grid.component_image()[i, j])
    if cid < 0:
        return None
    return comps[cid]


def _target_predicate(grid, target):
    """Pixel mask for a label target.

    Bit words match annulus-chain labels exactly; ``Dn`` matches disk-chain
    pixels with entry n regardless of recorded bits; ``T0``, ``escape`` and
    ``bounded`` match their classes.
    """
    kind = grid.kind
    t0e = grid.t0e
    fin = grid.fin
    if target == "escape":
        return kind == kernels.KIND_DIRECT
    if target == "bounded":
        return kind == kernels.KIND_NONESCAPING
    if target == "T0":
        return (kind == kernels.KIND_THROUGH_T0) & (t0e == 0) & (fin == kernels.FINAL_T0)
    if target.startswith("D"):
        n = int(target[1:])
        return (kind == kernels.KIND_THROUGH_T0) & (t0e == n) & (fin == kernels.FINAL_D0)
    word = [int(ch) for ch in target]
    bits = 0
    for k, b in enumerate(word):
        bits |= b << k
    return ((kind == kernels.KIND_THROUGH_T0) & (fin == kernels.FINAL_T0)
            & (t0e == len(word) + 1) & (grid.blen == len(word)) & (grid.bits == bits))


RAY_DIRECTIONS = ((0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1))


def ray_containment(grid, z, target):
    """True when pixel rays from z toward the viewport edge cross the target
    label in a majority of the 8 compass directions.  4-4 splits raise."""
    if not grid.spec.contains(z):
        raise InvalidParamsError(f"{z} outside the viewport")
    mask = _target_predicate(grid, target) & (grid.amb == 0) & (grid.precond_ok != 0)
    i0, j0 = grid.spec.pixel_of(z)
    res = grid.resolution
    votes = 0
    for di, dj in RAY_DIRECTIONS:
        i, j = i0, j0
        hit = False
        while 0 <= i < res and 0 <= j < res:
            if mask[i, j]:
                hit = True
                break
            i += di
            j += dj
        votes += 1 if hit else 0
    if votes == 4:
        raise RayInconclusiveError(f"containment votes split 4-4 for {target!r} at {z}")
    return votes >= 5


# ---------------------------------------------------------------------------
# rendering


def render_dynamical(spec, regions=None):
    """Classify every pixel of a dynamical-plane viewport."""
    if spec.plane_kind != DYNAMICAL:
        raise InvalidParamsError("spec is not a dynamical plane")
    p = spec.params
    if regions is None:
        cfg = structure.RegionConfig(r_escape=spec.r_escape)
        regions = structure.locate_regions(p, budget=spec.max_iter, config=cfg)
    res = spec.resolution

    def run(xs, ys):
        kind = np.zeros((len(ys), len(xs)), np.uint8)
        esc = np.zeros_like(kind, np.int32)
        t0e = np.zeros_like(kind, np.int32)
        bits = np.zeros_like(kind, np.int64)
        blen = np.zeros_like(kind, np.int16)
        fin = np.zeros_like(kind, np.uint8)
        amb = np.zeros_like(kind, np.uint8)
        ovf = np.zeros_like(kind, np.uint8)
        ka = regions.kernel_args()
        kernels.classify_grid(xs, ys, *ka, spec.max_iter,
                              kind, esc, t0e, bits, blen, fin, amb, ovf)
        return kind, esc, t0e, bits, blen, fin, amb, ovf

    if not spec.supersample:
        arrays = run(spec.axis_x(), spec.axis_y())
    else:
        quarter = 0.25 * spec.width / res
        stacks = []
        for dx, dy in ((-quarter, -quarter), (quarter, -quarter),
                       (-quarter, quarter), (quarter, quarter)):
            stacks.append(run(spec.axis_x() + dx, spec.axis_y() + dy))
        arrays = _vote(stacks)

    kind, esc, t0e, bits, blen, fin, amb, ovf = arrays
    return RasterGrid(spec=spec, kind=kind, esc=esc, t0e=t0e, bits=bits,
                      blen=blen, fin=fin, amb=amb, ovf=ovf,
                      precond_ok=np.ones_like(kind, np.uint8), regions=regions)


def _vote(stacks):
    """Combine 2x2 supersampled records: unanimous agreement keeps the
    record, otherwise the first sample is kept and flagged ambiguous."""
    base = [a.copy() for a in stacks[0]]
    agree = np.ones_like(base[0], dtype=bool)
    for other in stacks[1:]:
        for idx in (0, 2, 3, 4, 5):   # kind, t0e, bits, blen, fin
            agree &= base[idx] == other[idx]
    base[6] = np.where(agree, base[6], 1).astype(np.uint8)
    return tuple(base)


def render_parameter(spec, n_band=16, bisect_iters=46):
    """Classify the free critical point at every parameter-plane pixel;
    regions are recomputed per pixel, never interpolated."""
    if spec.plane_kind != PARAMETER:
        raise InvalidParamsError("spec is not a parameter plane")
    a = complex(spec.a)
    if not 0 < abs(a) < 1:
        raise InvalidParamsError("need 0 < |a| < 1")
    seed, _ = maps.unperturbed_criticals(a)
    res = spec.resolution
    xs = spec.axis_x()
    ys = spec.axis_y()
    ok = np.zeros((res, res), np.uint8)
    failcode = np.zeros((res, res), np.uint8)
    kind = np.zeros((res, res), np.uint8)
    esc = np.zeros((res, res), np.int32)
    t0e = np.zeros((res, res), np.int32)
    bits = np.zeros((res, res), np.int64)
    blen = np.zeros((res, res), np.int16)
    fin = np.zeros((res, res), np.uint8)
    amb = np.zeros((res, res), np.uint8)
    kernels.param_grid(xs, ys, a.real, a.imag, seed.real, seed.imag,
                       spec.r_escape, spec.max_iter, n_band, bisect_iters,
                       ok, failcode, kind, esc, t0e, bits, blen, fin, amb)
    return RasterGrid(spec=spec, kind=kind, esc=esc, t0e=t0e, bits=bits,
                      blen=blen, fin=fin, amb=amb,
                      ovf=np.zeros_like(kind), precond_ok=ok, failcode=failcode)


# ---------------------------------------------------------------------------
# encoding


PALETTES = ("paper", "gray")


def encode_image(grid, palette="paper"):
    """Binary PPM (P6, 8-bit RGB, row-major, top row first)."""
    if palette not in PALETTES:
        raise InvalidParamsError(f"unknown palette {palette!r}")
    res = grid.resolution
    rgb = np.zeros((res, res, 3), dtype=np.uint8)
    escaping = grid.kind != kernels.KIND_NONESCAPING
    esc = grid.esc.astype(np.float64)
    esc_vals = esc[escaping & (grid.precond_ok != 0)]
    max_esc = float(esc_vals.max()) if esc_vals.size else 1.0
    if max_esc <= 0:
        max_esc = 1.0
    t = np.clip(esc / max_esc, 0.0, 1.0)

    if palette == "paper":
        # basin graded yellow (slow) to red (fast); bounded orbits green
        rgb[..., 0] = np.where(escaping, 255, 0)
        rgb[..., 1] = np.where(escaping, np.rint(255 * t).astype(np.uint8), 255)
        rgb[..., 2] = 0
    else:
        g = np.rint(64 + 191 * t).astype(np.uint8)
        for c in range(3):
            rgb[..., c] = np.where(escaping, g, 0)
        rgb[..., 1] = np.where(escaping, rgb[..., 1], 96)
    bad = grid.precond_ok == 0
    for c, v in enumerate((128, 128, 128)):
        rgb[..., c] = np.where(bad, v, rgb[..., c])
    header = f"P6\n{res} {res}\n255\n".encode("ascii")
    return header + rgb.tobytes()


def encode_meta(grid, min_area=4):
    """Deterministic JSON metadata sidecar."""
    doc = {
        "spec": grid.spec.to_json(),
        "engine": grid.engine,
        "components": [c.to_json() for c in grid.components(min_area)],
        "ambiguousPx": grid.ambiguous_count(),
    }
    if grid.spec.plane_kind == PARAMETER:
        doc["precondFailPx"] = grid.precond_fail_count()
    return json.dumps(doc, separators=(",", ":")).encode("ascii")
