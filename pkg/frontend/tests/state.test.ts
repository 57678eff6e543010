import { describe, expect, it } from "vitest";
import { fmtComplex, parseComplex } from "../src/complex.js";
import { defaultState, fromQuery, pixelToValue, toQuery, valueToPixel,
         zoomViewport } from "../src/state.js";

describe("complex literals", () => {
  it("round-trips shortest representations", () => {
    for (const z of [{ re: -1.9e-6, im: 3.15e-5 }, { re: 0, im: 0.5 },
                     { re: 0.3, im: 0.4 }, { re: 1e-6, im: 0 },
                     { re: -0.25, im: -1.5e-9 }]) {
      const back = parseComplex(fmtComplex(z));
      expect(back.re).toBe(z.re);
      expect(back.im).toBe(z.im);
    }
  });

  it("parses the backend forms", () => {
    expect(parseComplex("0.5i")).toEqual({ re: 0, im: 0.5 });
    expect(parseComplex("-1.9e-6+3.15e-5i")).toEqual({ re: -1.9e-6, im: 3.15e-5 });
    expect(parseComplex("1e-6")).toEqual({ re: 1e-6, im: 0 });
    expect(parseComplex("i")).toEqual({ re: 0, im: 1 });
    expect(() => parseComplex("zzz")).toThrow();
  });
});

describe("viewport pixel mapping", () => {
  const v = { center: { re: 1, im: 2 }, width: 4, res: 16 };

  it("matches the service grid convention", () => {
    // pixel (i, j) -> center + width((j+0.5)/res - 0.5) + i width(0.5 - (i+0.5)/res)
    const z = pixelToValue(v, 0, 0);
    expect(z.re).toBeCloseTo(1 + 4 * (0.5 / 16 - 0.5), 14);
    expect(z.im).toBeCloseTo(2 + 4 * (0.5 - 0.5 / 16), 14);
    expect(pixelToValue(v, 0, 5).im).toBeGreaterThan(pixelToValue(v, 15, 5).im);
  });

  it("round-trips value -> pixel -> value to within half a pixel", () => {
    for (const [i, j] of [[0, 0], [7, 3], [15, 15], [8, 1]]) {
      const z = pixelToValue(v, i, j);
      expect(valueToPixel(v, z)).toEqual({ i, j });
    }
  });

  it("zoom x2 halves the width and keeps the anchor fixed", () => {
    const about = pixelToValue(v, 4, 4);
    const zoomed = zoomViewport(v, about, 0.5);
    expect(zoomed.width).toBe(2);
    const before = valueToPixel(v, about);
    const after = valueToPixel(zoomed, about);
    // anchor keeps its relative screen position
    expect(after.i / zoomed.res).toBeCloseTo(before.i / v.res, 1);
  });
});

describe("url state", () => {
  it("round-trips the full view state", () => {
    const s = defaultState();
    s.lambda = { re: -1.9e-6, im: 3.15e-5 };
    s.dyn = { center: { re: 0.1, im: -0.2 }, width: 0.75, res: 384 };
    s.overlays = { criticals: true, orbit: false, annulus: true, regions: false };
    const back = fromQuery(toQuery(s));
    expect(back).toEqual(s);
  });

  it("fills defaults for missing fields", () => {
    const s = fromQuery("a=0.5i");
    expect(s.a).toEqual({ re: 0, im: 0.5 });
    expect(s.lambda).toBeNull();
    expect(s.param.res).toBe(256);
  });

  it("clicking the case-one reference pixel recovers its lambda", () => {
    // the default parameter window contains the reference value; a click on
    // its pixel must produce a lambda within half a pixel of it
    const s = defaultState();
    const lam = { re: -1.9e-6, im: 3.15e-5 };
    const { i, j } = valueToPixel(s.param, lam);
    const got = pixelToValue(s.param, i, j);
    const halfPixel = s.param.width / s.param.res;
    expect(Math.hypot(got.re - lam.re, got.im - lam.im)).toBeLessThan(halfPixel);
  });
});
