import { Cx, fmtComplex } from "./complex.js";
import { ViewState, Viewport } from "./state.js";

export interface OrbitFate {
  kind: string;
  escapeTime: number | null;
  t0Entry: number | null;
  itinerary: string;
  finalRegion: string | null;
  ambiguous: boolean;
  label: string;
  orbit: [number, number][] | null;
}

export interface CriticalInfo {
  family: string;
  c_minus: [number, number];
  c_plus: [number, number];
  z0: [number, number];
  pole: [number, number];
  ringCriticals: [number, number][];
  ringZeros: [number, number][];
}

export class PreconditionFailure extends Error {
  check: string;
  constructor(check: string, details: string) {
    super(`precondition failed: ${check} ${details}`);
    this.check = check;
  }
}

export function dynamicalTileUrl(base: string, a: Cx, lambda: Cx, dyn: Viewport,
                                 maxIter: number): string {
  const q = new URLSearchParams();
  q.set("a", fmtComplex(a));
  q.set("lambda", fmtComplex(lambda));
  q.set("cx", dyn.center.re.toString());
  q.set("cy", dyn.center.im.toString());
  q.set("w", dyn.width.toString());
  q.set("res", dyn.res.toString());
  q.set("maxIter", maxIter.toString());
  return `${base}/api/v1/dynamical?${q.toString()}`;
}

export function parameterTileUrl(base: string, state: ViewState): string {
  const q = new URLSearchParams();
  q.set("a", fmtComplex(state.a));
  q.set("cx", state.param.center.re.toString());
  q.set("cy", state.param.center.im.toString());
  q.set("w", state.param.width.toString());
  q.set("res", state.param.res.toString());
  q.set("maxIter", state.maxIter.toString());
  return `${base}/api/v1/parameter?${q.toString()}`;
}

export function orbitUrl(base: string, a: Cx, lambda: Cx, z: Cx,
                         maxIter: number): string {
  const q = new URLSearchParams();
  q.set("a", fmtComplex(a));
  q.set("lambda", fmtComplex(lambda));
  q.set("x", z.re.toString());
  q.set("y", z.im.toString());
  q.set("maxIter", maxIter.toString());
  return `${base}/api/v1/orbit?${q.toString()}`;
}

export function criticalUrl(base: string, a: Cx, lambda: Cx | null): string {
  const q = new URLSearchParams();
  q.set("a", fmtComplex(a));
  q.set("lambda", lambda ? fmtComplex(lambda) : "0");
  return `${base}/api/v1/critical?${q.toString()}`;
}

async function check(resp: Response): Promise<Response> {
  if (resp.status === 422) {
    const body = await resp.json();
    throw new PreconditionFailure(body.check ?? "unknown", body.details ?? "");
  }
  if (!resp.ok) {
    const text = await resp.text();
    throw new Error(`${resp.status}: ${text}`);
  }
  return resp;
}

export async function fetchTile(url: string, signal?: AbortSignal): Promise<ArrayBuffer> {
  const resp = await check(await fetch(url, { signal }));
  return resp.arrayBuffer();
}

export async function fetchOrbit(url: string, signal?: AbortSignal): Promise<OrbitFate> {
  const resp = await check(await fetch(url, { signal }));
  return resp.json();
}

export async function fetchCritical(url: string, signal?: AbortSignal): Promise<CriticalInfo> {
  const resp = await check(await fetch(url, { signal }));
  return resp.json();
}
