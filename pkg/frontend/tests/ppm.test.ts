import { describe, expect, it } from "vitest";
import { decodePpm } from "../src/ppm.js";

function bytes(...parts: (string | number[])[]): ArrayBuffer {
  const chunks: number[] = [];
  for (const p of parts) {
    if (typeof p === "string") for (const ch of p) chunks.push(ch.charCodeAt(0));
    else chunks.push(...p);
  }
  return new Uint8Array(chunks).buffer;
}

describe("ppm decoder", () => {
  it("decodes the service 2x2 format exactly", () => {
    const buf = bytes("P6\n2 2\n255\n",
                      [255, 0, 0, 0, 255, 0, 0, 0, 255, 128, 128, 128]);
    const img = decodePpm(buf);
    expect(img.width).toBe(2);
    expect(img.height).toBe(2);
    expect([...img.rgba]).toEqual([
      255, 0, 0, 255, 0, 255, 0, 255,
      0, 0, 255, 255, 128, 128, 128, 255,
    ]);
  });

  it("tolerates comments and extra whitespace in the header", () => {
    const buf = bytes("P6 # tile\n 1 1\t255\n", [9, 8, 7]);
    const img = decodePpm(buf);
    expect(img.width).toBe(1);
    expect([...img.rgba]).toEqual([9, 8, 7, 255]);
  });

  it("rejects non-P6 and truncated payloads", () => {
    expect(() => decodePpm(bytes("P5\n1 1\n255\n", [1]))).toThrow(/P6/);
    expect(() => decodePpm(bytes("P6\n2 2\n255\n", [1, 2, 3]))).toThrow(/truncated/);
    expect(() => decodePpm(bytes("P6\n1 1\n65535\n", [1, 2]))).toThrow(/maxval/);
  });
});
