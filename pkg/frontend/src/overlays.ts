import { Cx, cxAbs } from "./complex.js";
import { Viewport, valueToPixel } from "./state.js";

/** The only engine math duplicated client-side: the straight-annulus radii
 * (|lambda| / 2|a|)^(1/5) and (2|lambda| / |a|)^(1/5); they must agree with
 * the service's values to 1e-9. */
export function annulusRadii(lambda: Cx, a: Cx): [number, number] {
  const lm = cxAbs(lambda);
  const am = cxAbs(a);
  return [Math.pow(lm / (2 * am), 0.2), Math.pow((2 * lm) / am, 0.2)];
}

export interface Marker {
  x: number;
  y: number;
  kind: "critical" | "zero" | "pole" | "cminus";
}

export function markerPixels(v: Viewport, points: { z: Cx; kind: Marker["kind"] }[]): Marker[] {
  const out: Marker[] = [];
  for (const { z, kind } of points) {
    const { i, j } = valueToPixel(v, z);
    if (i >= 0 && i < v.res && j >= 0 && j < v.res) {
      out.push({ x: j, y: i, kind });
    }
  }
  return out;
}

/** Circle of radius r around the origin in pixel coordinates. */
export function circlePixels(v: Viewport, r: number, n = 256): { x: number; y: number }[] {
  const pts: { x: number; y: number }[] = [];
  for (let k = 0; k <= n; k++) {
    const th = (2 * Math.PI * k) / n;
    const { i, j } = valueToPixel(v, { re: r * Math.cos(th), im: r * Math.sin(th) });
    pts.push({ x: j, y: i });
  }
  return pts;
}

export function orbitPixels(v: Viewport, orbit: [number, number][]): { x: number; y: number }[] {
  return orbit.map(([re, im]) => {
    const { i, j } = valueToPixel(v, { re, im });
    return { x: j, y: i };
  });
}
