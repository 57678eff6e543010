import { describe, expect, it } from "vitest";
import { annulusRadii, circlePixels, markerPixels } from "../src/overlays.js";

describe("straight annulus radii", () => {
  it("agrees with the engine values to 1e-9", () => {
    // engine-computed references for lambda = -1.9e-6 + 3.15e-5i, a = 0.5i
    const [rIn, rOut] = annulusRadii({ re: -1.9e-6, im: 3.15e-5 }, { re: 0, im: 0.5 });
    expect(Math.abs(rIn - 0.12584032431335818)).toBeLessThan(1e-9);
    expect(Math.abs(rOut - 0.1660473034257027)).toBeLessThan(1e-9);
  });

  it("scales as the fifth root", () => {
    const a = { re: 0.5, im: 0 };
    const [r1] = annulusRadii({ re: 1e-6, im: 0 }, a);
    const [r2] = annulusRadii({ re: 1e-11, im: 0 }, a);
    expect(r1 / r2).toBeCloseTo(10, 9);
  });
});

describe("overlay geometry", () => {
  const v = { center: { re: 0, im: 0 }, width: 2, res: 100 };

  it("keeps circles closed and inside the viewport", () => {
    const pts = circlePixels(v, 0.5, 64);
    expect(pts[0]).toEqual(pts[pts.length - 1]);
    for (const { x, y } of pts) {
      expect(x).toBeGreaterThanOrEqual(0);
      expect(y).toBeLessThan(100);
    }
  });

  it("drops markers outside the viewport", () => {
    const ms = markerPixels(v, [
      { z: { re: 0, im: 0 }, kind: "zero" },
      { z: { re: 5, im: 5 }, kind: "pole" },
    ]);
    expect(ms).toHaveLength(1);
    expect(ms[0].kind).toBe("zero");
  });
});
