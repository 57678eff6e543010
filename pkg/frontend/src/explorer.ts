import { fetchCritical, fetchOrbit, fetchTile, criticalUrl, dynamicalTileUrl,
         orbitUrl, parameterTileUrl, CriticalInfo, PreconditionFailure } from "./api.js";
import { Cx, cx, fmtComplex } from "./complex.js";
import { decodePpm } from "./ppm.js";
import { annulusRadii, circlePixels, markerPixels, orbitPixels } from "./overlays.js";
import { ViewState, Viewport, defaultState, fromQuery, pixelToValue, toQuery,
         valueToPixel, zoomViewport } from "./state.js";

const HOVER_DEBOUNCE_MS = 100;

/** Linked parameter-plane / dynamical-plane explorer. */
export class Explorer {
  state: ViewState;
  base: string;
  paramCanvas!: HTMLCanvasElement;
  dynCanvas!: HTMLCanvasElement;
  overlayCanvas!: HTMLCanvasElement;
  banner!: HTMLElement;
  readout!: HTMLElement;
  critical: CriticalInfo | null = null;
  private paramAbort = new AbortController();
  private dynAbort = new AbortController();
  private hoverAbort = new AbortController();
  private hoverTimer: number | undefined;
  private dynTile: ImageData | null = null;

  constructor(root: HTMLElement, base?: string) {
    this.base = base ?? (window.location.origin.startsWith("http")
      ? window.location.origin : "http://127.0.0.1:8321");
    const fromUrl = window.location.search.slice(1);
    this.state = fromUrl ? fromQuery(fromUrl) : defaultState();
    this.buildDom(root);
    void this.refreshParam();
    if (this.state.lambda) void this.refreshDyn();
  }

  private buildDom(root: HTMLElement): void {
    root.innerHTML = `
      <div class="banner" id="banner" hidden></div>
      <div class="panes">
        <figure>
          <canvas id="param" width="${this.state.param.res}" height="${this.state.param.res}"></canvas>
          <figcaption>parameter plane (click to pick a value)</figcaption>
        </figure>
        <figure class="stack">
          <canvas id="dyn" width="${this.state.dyn.res}" height="${this.state.dyn.res}"></canvas>
          <canvas id="overlay" width="${this.state.dyn.res}" height="${this.state.dyn.res}"></canvas>
          <figcaption id="readout">dynamical plane</figcaption>
        </figure>
      </div>
      <div class="toggles">
        <label><input type="checkbox" id="ov-criticals"> critical points</label>
        <label><input type="checkbox" id="ov-annulus"> straight annulus</label>
        <label><input type="checkbox" id="ov-orbit"> hover orbit</label>
      </div>`;
    this.paramCanvas = root.querySelector("#param")!;
    this.dynCanvas = root.querySelector("#dyn")!;
    this.overlayCanvas = root.querySelector("#overlay")!;
    this.banner = root.querySelector("#banner")!;
    this.readout = root.querySelector("#readout")!;

    for (const key of ["criticals", "annulus", "orbit"] as const) {
      const box = root.querySelector<HTMLInputElement>(`#ov-${key}`)!;
      box.checked = this.state.overlays[key];
      box.addEventListener("change", () => {
        this.state.overlays[key] = box.checked;
        this.syncUrl();
        this.drawOverlays();
      });
    }

    this.paramCanvas.addEventListener("click", (e) => this.onParamClick(e));
    this.paramCanvas.addEventListener("wheel", (e) => this.onWheel(e, "param"), { passive: false });
    this.dynCanvas.addEventListener("wheel", (e) => this.onWheel(e, "dyn"), { passive: false });
    this.overlayCanvas.addEventListener("wheel", (e) => this.onWheel(e, "dyn"), { passive: false });
    this.overlayCanvas.addEventListener("mousemove", (e) => this.onHover(e));
    this.overlayCanvas.addEventListener("dblclick", (e) => this.onDynRecenter(e));
  }

  private canvasPixel(canvas: HTMLCanvasElement, e: MouseEvent, v: Viewport) {
    const rect = canvas.getBoundingClientRect();
    const j = Math.floor(((e.clientX - rect.left) / rect.width) * v.res);
    const i = Math.floor(((e.clientY - rect.top) / rect.height) * v.res);
    return { i, j };
  }

  async onParamClick(e: MouseEvent): Promise<void> {
    const { i, j } = this.canvasPixel(this.paramCanvas, e, this.state.param);
    this.state.lambda = pixelToValue(this.state.param, i, j);
    this.syncUrl();
    await this.refreshDyn();
  }

  onWheel(e: WheelEvent, which: "param" | "dyn"): void {
    e.preventDefault();
    const v = which === "param" ? this.state.param : this.state.dyn;
    const canvas = which === "param" ? this.paramCanvas : this.overlayCanvas;
    const { i, j } = this.canvasPixel(canvas, e, v);
    const about = pixelToValue(v, i, j);
    const factor = e.deltaY < 0 ? 0.5 : 2.0;
    const next = zoomViewport(v, about, factor);
    if (which === "param") {
      this.state.param = next;
      void this.refreshParam();
    } else {
      this.state.dyn = next;
      void this.refreshDyn();
    }
    this.syncUrl();
  }

  onDynRecenter(e: MouseEvent): void {
    const { i, j } = this.canvasPixel(this.overlayCanvas, e, this.state.dyn);
    this.state.dyn = { ...this.state.dyn, center: pixelToValue(this.state.dyn, i, j) };
    this.syncUrl();
    void this.refreshDyn();
  }

  onHover(e: MouseEvent): void {
    if (!this.state.overlays.orbit || !this.state.lambda || !this.dynTile) return;
    const { i, j } = this.canvasPixel(this.overlayCanvas, e, this.state.dyn);
    window.clearTimeout(this.hoverTimer);
    this.hoverTimer = window.setTimeout(() => void this.hoverOrbit(i, j), HOVER_DEBOUNCE_MS);
  }

  private async hoverOrbit(i: number, j: number): Promise<void> {
    this.hoverAbort.abort();
    this.hoverAbort = new AbortController();
    const z = pixelToValue(this.state.dyn, i, j);
    try {
      const fate = await fetchOrbit(
        orbitUrl(this.base, this.state.a, this.state.lambda!, z, this.state.maxIter),
        this.hoverAbort.signal);
      const itin = fate.kind === "escape-through-t0"
        ? `itinerary ${fate.itinerary || "(empty)"} -> ${fate.finalRegion}` : "";
      this.readout.textContent =
        `z = ${fmtComplex(z)}  ${fate.kind}` +
        (fate.escapeTime !== null ? `  escape ${fate.escapeTime}` : "") +
        (fate.t0Entry !== null ? `  entry ${fate.t0Entry}` : "") + `  ${itin}`;
      this.drawOverlays(fate.orbit ?? undefined);
    } catch (err) {
      if ((err as Error).name !== "AbortError") this.showError(err);
    }
  }

  async refreshParam(): Promise<void> {
    this.paramAbort.abort();
    this.paramAbort = new AbortController();
    try {
      const buf = await fetchTile(parameterTileUrl(this.base, this.state),
                                  this.paramAbort.signal);
      const img = decodePpm(buf);
      this.paramCanvas.width = img.width;
      this.paramCanvas.height = img.height;
      this.paramCanvas.getContext("2d")!
        .putImageData(new ImageData(img.rgba, img.width, img.height), 0, 0);
      this.hideBanner();
    } catch (err) {
      if ((err as Error).name !== "AbortError") this.showError(err);
    }
  }

  async refreshDyn(): Promise<void> {
    if (!this.state.lambda) return;
    this.dynAbort.abort();
    this.dynAbort = new AbortController();
    try {
      const [buf, crit] = await Promise.all([
        fetchTile(dynamicalTileUrl(this.base, this.state.a, this.state.lambda,
                                   this.state.dyn, this.state.maxIter),
                  this.dynAbort.signal),
        fetchCritical(criticalUrl(this.base, this.state.a, this.state.lambda),
                      this.dynAbort.signal),
      ]);
      this.critical = crit;
      const img = decodePpm(buf);
      this.dynCanvas.width = img.width;
      this.dynCanvas.height = img.height;
      this.overlayCanvas.width = img.width;
      this.overlayCanvas.height = img.height;
      this.dynTile = new ImageData(img.rgba, img.width, img.height);
      this.dynCanvas.getContext("2d")!.putImageData(this.dynTile, 0, 0);
      this.readout.textContent = `lambda = ${fmtComplex(this.state.lambda)}`;
      this.hideBanner();
      this.drawOverlays();
    } catch (err) {
      if ((err as Error).name !== "AbortError") this.showError(err);
    }
  }

  drawOverlays(orbit?: [number, number][]): void {
    const ctx = this.overlayCanvas.getContext("2d")!;
    ctx.clearRect(0, 0, this.overlayCanvas.width, this.overlayCanvas.height);
    if (!this.critical || !this.state.lambda) return;
    const v = this.state.dyn;

    if (this.state.overlays.annulus) {
      const [rIn, rOut] = annulusRadii(this.state.lambda, this.state.a);
      ctx.strokeStyle = "rgba(40,120,255,0.9)";
      ctx.lineWidth = 1;
      for (const r of [rIn, rOut]) {
        ctx.beginPath();
        for (const { x, y } of circlePixels(v, r)) ctx.lineTo(x, y);
        ctx.stroke();
      }
    }

    if (this.state.overlays.criticals) {
      const pts = [
        { z: cx(...this.critical.c_minus), kind: "cminus" as const },
        { z: cx(...this.critical.c_plus), kind: "critical" as const },
        { z: cx(...this.critical.z0), kind: "zero" as const },
        { z: cx(...this.critical.pole), kind: "pole" as const },
        ...this.critical.ringCriticals.map((p) => ({ z: cx(...p), kind: "critical" as const })),
        ...this.critical.ringZeros.map((p) => ({ z: cx(...p), kind: "zero" as const })),
      ];
      for (const m of markerPixels(v, pts)) {
        ctx.fillStyle = m.kind === "cminus" ? "#ffffff"
          : m.kind === "critical" ? "#111111"
          : m.kind === "zero" ? "#d01030" : "#8020c0";
        ctx.beginPath();
        ctx.arc(m.x, m.y, m.kind === "cminus" ? 4 : 2.5, 0, 2 * Math.PI);
        ctx.fill();
        ctx.strokeStyle = "#ffffff";
        ctx.stroke();
      }
    }

    if (orbit && this.state.overlays.orbit) {
      ctx.strokeStyle = "rgba(255,255,255,0.9)";
      ctx.lineWidth = 1.2;
      ctx.beginPath();
      for (const { x, y } of orbitPixels(v, orbit)) ctx.lineTo(x, y);
      ctx.stroke();
    }
  }

  private showError(err: unknown): void {
    this.banner.hidden = false;
    this.banner.textContent = err instanceof PreconditionFailure
      ? `structural precondition failed: ${err.check}`
      : `request failed: ${(err as Error).message}`;
  }

  private hideBanner(): void {
    this.banner.hidden = true;
  }

  syncUrl(): void {
    window.history.replaceState(null, "", `?${toQuery(this.state)}`);
  }
}
