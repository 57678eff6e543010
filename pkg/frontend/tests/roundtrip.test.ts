/** End-to-end acceptance: a parameter-plane click on the case-one
 * reference value must fetch a dynamical tile byte-identical to the CLI
 * render with the same query, and the hover readout must match the CLI
 * classifier.  Spawns the Python service and CLI. */

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { execFileSync, spawn, ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { dynamicalTileUrl, fetchCritical, fetchOrbit, fetchTile, criticalUrl,
         orbitUrl } from "../src/api.js";
import { fmtComplex } from "../src/complex.js";
import { decodePpm } from "../src/ppm.js";
import { annulusRadii } from "../src/overlays.js";
import { defaultState, pixelToValue, valueToPixel } from "../src/state.js";

const PY = process.env.BLASCHKE_PYTHON ?? "python3";
const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;
const A = { re: 0, im: 0.5 };
const RES = 96;
const MAXITER = 600;

let server: ChildProcess;
let workdir: string;

async function waitForHealth(timeoutMs = 60000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const r = await fetch(`${BASE}/api/v1/health`);
      if (r.ok) return;
    } catch {
      /* not up yet */
    }
    await new Promise((res) => setTimeout(res, 400));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  workdir = mkdtempSync(join(tmpdir(), "explorer-rt-"));
  server = spawn(PY, ["-m", "blaschke.cli", "serve", "--port", String(PORT)],
                 { stdio: "ignore", env: { ...process.env, BLASCHKE_PORT: String(PORT) } });
  await waitForHealth();
}, 90000);

afterAll(() => {
  server?.kill();
  rmSync(workdir, { recursive: true, force: true });
});

describe("explorer round trip", () => {
  it("param click renders a tile byte-identical to the CLI render", async () => {
    // simulate the click: the pixel of the reference value in the default
    // parameter window, mapped back to a lambda literal
    const state = defaultState();
    const ref = { re: -1.9e-6, im: 3.15e-5 };
    const { i, j } = valueToPixel(state.param, ref);
    const lambda = pixelToValue(state.param, i, j);

    const url = dynamicalTileUrl(BASE, A, lambda,
                                 { center: { re: 0, im: 0 }, width: 3, res: RES },
                                 MAXITER);
    const tile = Buffer.from(await fetchTile(url));

    const out = join(workdir, "cli.ppm");
    execFileSync(PY, ["-m", "blaschke.cli", "render-dyn",
                      "--a", fmtComplex(A), `--lambda=${fmtComplex(lambda)}`,
                      "--center", "0", "--width", "3", "--res", String(RES),
                      "--maxiter", String(MAXITER), "--out", out]);
    const cli = readFileSync(out);

    expect(tile.length).toBe(cli.length);
    expect(tile.equals(cli)).toBe(true);

    const img = decodePpm(tile.buffer.slice(tile.byteOffset, tile.byteOffset + tile.byteLength));
    expect(img.width).toBe(RES);
    expect(img.height).toBe(RES);
  }, 120000);

  it("hover on the free critical point matches the CLI classifier", async () => {
    const state = defaultState();
    const ref = { re: -1.9e-6, im: 3.15e-5 };
    const { i, j } = valueToPixel(state.param, ref);
    const lambda = pixelToValue(state.param, i, j);

    const crit = await fetchCritical(criticalUrl(BASE, A, lambda));
    const cm = { re: crit.c_minus[0], im: crit.c_minus[1] };
    const fate = await fetchOrbit(orbitUrl(BASE, A, lambda, cm, MAXITER));

    const cliOut = execFileSync(PY, ["-m", "blaschke.cli", "classify",
                                     "--a", fmtComplex(A),
                                     `--lambda=${fmtComplex(lambda)}`,
                                     `--z=${fmtComplex(cm)}`,
                                     "--maxiter", String(MAXITER)]);
    const cli = JSON.parse(cliOut.toString());
    expect(fate.kind).toBe(cli.kind);
    expect(fate.itinerary).toBe(cli.itinerary);
    expect(fate.t0Entry).toBe(cli.t0Entry);
    expect(fate.finalRegion).toBe(cli.finalRegion);
    expect(fate.label).toBe(cli.label);
    expect(fate.orbit?.[0]).toEqual([cm.re, cm.im]);
  }, 120000);

  it("locally computed annulus radii match the engine to 1e-9", async () => {
    const lambda = { re: -1.9e-6, im: 3.15e-5 };
    const [rIn, rOut] = annulusRadii(lambda, A);
    const py = execFileSync(PY, ["-c",
      "import json,sys;lam=complex(-1.9e-6,3.15e-5);a=0.5j;" +
      "print(json.dumps([(abs(lam)/(2*abs(a)))**0.2,(2*abs(lam)/abs(a))**0.2]))"]);
    const [pin, pout] = JSON.parse(py.toString());
    expect(Math.abs(rIn - pin)).toBeLessThan(1e-9);
    expect(Math.abs(rOut - pout)).toBeLessThan(1e-9);
  });
});
