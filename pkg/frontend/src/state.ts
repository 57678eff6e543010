import { Cx, cx, fmtComplex, parseComplex } from "./complex.js";

export interface Viewport {
  center: Cx;
  width: number;
  res: number;
}

export interface OverlayToggles {
  criticals: boolean;
  orbit: boolean;
  annulus: boolean;
  regions: boolean;
}

export interface ViewState {
  a: Cx;
  param: Viewport;
  lambda: Cx | null;
  dyn: Viewport;
  maxIter: number;
  overlays: OverlayToggles;
}

/** Default parameter window: the reference survey window around lambda=0. */
export function defaultState(): ViewState {
  return {
    a: cx(0, 0.5),
    param: { center: cx(7.5e-6, 0), width: 1.45e-4, res: 256 },
    lambda: null,
    dyn: { center: cx(0, 0), width: 3, res: 512 },
    maxIter: 2000,
    overlays: { criticals: true, orbit: true, annulus: true, regions: false },
  };
}

/** Pixel (i=row, j=col) to plane value; the service's grid convention:
 * row-major, top row carries the largest imaginary part. */
export function pixelToValue(v: Viewport, i: number, j: number): Cx {
  return cx(
    v.center.re + v.width * ((j + 0.5) / v.res - 0.5),
    v.center.im + v.width * (0.5 - (i + 0.5) / v.res),
  );
}

export function valueToPixel(v: Viewport, z: Cx): { i: number; j: number } {
  const j = Math.floor(((z.re - v.center.re) / v.width + 0.5) * v.res);
  const i = Math.floor(((v.center.im - z.im) / v.width + 0.5) * v.res);
  return { i, j };
}

export function inViewport(v: Viewport, z: Cx): boolean {
  const { i, j } = valueToPixel(v, z);
  return i >= 0 && i < v.res && j >= 0 && j < v.res;
}

export function zoomViewport(v: Viewport, about: Cx, factor: number): Viewport {
  // keep the anchor point fixed on screen while the width scales
  const w = v.width * factor;
  return {
    center: cx(
      about.re + (v.center.re - about.re) * factor,
      about.im + (v.center.im - about.im) * factor,
    ),
    width: w,
    res: v.res,
  };
}

export function panViewport(v: Viewport, dre: number, dim: number): Viewport {
  return { center: cx(v.center.re + dre, v.center.im + dim), width: v.width, res: v.res };
}

export function toQuery(state: ViewState): string {
  const q = new URLSearchParams();
  q.set("a", fmtComplex(state.a));
  q.set("pc", fmtComplex(state.param.center));
  q.set("pw", state.param.width.toString());
  q.set("pr", state.param.res.toString());
  if (state.lambda) q.set("lambda", fmtComplex(state.lambda));
  q.set("dc", fmtComplex(state.dyn.center));
  q.set("dw", state.dyn.width.toString());
  q.set("dr", state.dyn.res.toString());
  q.set("mi", state.maxIter.toString());
  const on = Object.entries(state.overlays).filter(([, v]) => v).map(([k]) => k);
  q.set("ov", on.join("-") || "none");
  return q.toString();
}

export function fromQuery(query: string): ViewState {
  const q = new URLSearchParams(query);
  const s = defaultState();
  const get = (k: string) => q.get(k);
  if (get("a")) s.a = parseComplex(get("a")!);
  if (get("pc")) s.param.center = parseComplex(get("pc")!);
  if (get("pw")) s.param.width = Number(get("pw"));
  if (get("pr")) s.param.res = Number(get("pr"));
  if (get("lambda")) s.lambda = parseComplex(get("lambda")!);
  if (get("dc")) s.dyn.center = parseComplex(get("dc")!);
  if (get("dw")) s.dyn.width = Number(get("dw"));
  if (get("dr")) s.dyn.res = Number(get("dr"));
  if (get("mi")) s.maxIter = Number(get("mi"));
  if (get("ov")) {
    const on = new Set((get("ov") ?? "").split("-"));
    s.overlays = {
      criticals: on.has("criticals"),
      orbit: on.has("orbit"),
      annulus: on.has("annulus"),
      regions: on.has("regions"),
    };
  }
  return s;
}
