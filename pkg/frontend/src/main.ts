/** Application wiring: DOM event plumbing around the pure modules. */

import { ApiClient, ApiError } from "./api.js";
import { RequestCoalescer } from "./coalesce.js";
import { renderControls } from "./controls.js";
import { fmt3 } from "./format.js";
import { renderGraphSvg } from "./graph.js";
import { SessionStore } from "./state.js";
import { renderTornadoSvg } from "./tornado.js";
import type { TornadoDoc } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function serviceBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("service");
  return fromQuery ?? "";
}

async function boot(): Promise<void> {
  const api = new ApiClient(serviceBase());
  const banner = el<HTMLDivElement>("banner");
  try {
    const modelResponse = await api.getModel();
    const networkResponse = await api.getNetwork();
    const store = new SessionStore(
      modelResponse.model,
      networkResponse.network,
      modelResponse.revision,
    );
    store.applyBaseline(await api.evaluate({}));
    new App(api, store).start();
  } catch (error) {
    banner.hidden = false;
    banner.textContent =
      error instanceof ApiError && error.status === 404
        ? "No model loaded. Start the service with --model or PUT /api/model."
        : `Cannot reach the confidence service: ${String(error)}`;
  }
}

class App {
  private colorblind = false;
  private target: string;
  private tornadoDoc: TornadoDoc | null = null;
  private lastChangedKey: string | null = null;
  private readonly coalescer: RequestCoalescer<Record<string, number>>;

  constructor(
    private readonly api: ApiClient,
    private readonly store: SessionStore,
  ) {
    this.target = store.network.root;
    this.coalescer = new RequestCoalescer((overrides) => this.sendEvaluate(overrides));
  }

  start(): void {
    el("controls").innerHTML = renderControls(this.store.sliders());
    this.populateTargets();
    this.renderGraph();
    this.renderStatus();
    void this.refreshTornado();

    el("controls").addEventListener("input", (event) => {
      const input = event.target as HTMLInputElement;
      const key = input.dataset.key;
      if (!key) return;
      const value = Number(input.value);
      const output = document.querySelector(`[data-output="${CSS.escape(key)}"]`);
      if (output) output.textContent = fmt3(value);
      this.clearError(key);
      this.lastChangedKey = key;
      this.store.setOverride(key, value);
      this.coalescer.request(this.store.flatOverrides());
    });

    el("tornado").addEventListener("click", (event) => {
      const bar = (event.target as Element).closest("[data-key]");
      if (!bar) return;
      this.focusSlider((bar as HTMLElement).dataset.key!);
    });

    el<HTMLSelectElement>("target-select").addEventListener("change", (event) => {
      this.target = (event.target as HTMLSelectElement).value;
      void this.refreshTornado();
    });

    el("reset").addEventListener("click", () => this.reset());
    el("export").addEventListener("click", () => this.exportDocument());
    el<HTMLInputElement>("colorblind").addEventListener("change", (event) => {
      this.colorblind = (event.target as HTMLInputElement).checked;
      this.renderGraph();
    });
  }

  private async sendEvaluate(overrides: Record<string, number>): Promise<void> {
    try {
      this.store.applyEvaluation(await this.api.evaluate(overrides));
      this.renderGraph();
      this.renderStatus();
    } catch (error) {
      if (error instanceof ApiError) {
        this.showError(this.lastChangedKey, error.body.message);
      } else {
        this.store.stale = true;
        this.renderStatus();
      }
    }
  }

  private async refreshTornado(): Promise<void> {
    try {
      const response = await this.api.tornado(this.target);
      this.tornadoDoc = response.tornado;
      el("tornado").innerHTML = renderTornadoSvg(this.tornadoDoc);
    } catch (error) {
      if (!(error instanceof ApiError)) {
        this.store.stale = true;
        this.renderStatus();
      }
    }
  }

  private renderGraph(): void {
    el("graph").innerHTML = renderGraphSvg(
      this.store.network,
      this.store.current,
      this.store.baseline,
      this.colorblind,
    );
  }

  private renderStatus(): void {
    el("revision").textContent = `revision ${this.store.revision}`;
    const banner = el<HTMLDivElement>("banner");
    banner.hidden = !this.store.stale;
    if (this.store.stale) {
      banner.textContent = `Connection lost; showing stale data from revision ${this.store.revision}.`;
    }
  }

  private populateTargets(): void {
    const select = el<HTMLSelectElement>("target-select");
    select.innerHTML = this.store.network.nodes
      .map((n) => `<option value="${n.id}"${n.id === this.store.network.root ? " selected" : ""}>${n.id}</option>`)
      .join("");
  }

  private focusSlider(key: string): void {
    const input = document.querySelector<HTMLInputElement>(`#slider-${CSS.escape(key)}`);
    if (input) {
      input.focus();
      input.closest(".control")?.scrollIntoView({ block: "center", behavior: "smooth" });
    }
  }

  private showError(key: string | null, message: string): void {
    if (key) this.store.lastError = { key, message };
    const box = key
      ? document.querySelector<HTMLElement>(`[data-error="${CSS.escape(key)}"]`)
      : null;
    if (box) {
      box.hidden = false;
      box.textContent = message;
    }
  }

  private clearError(key: string): void {
    const box = document.querySelector<HTMLElement>(`[data-error="${CSS.escape(key)}"]`);
    if (box) box.hidden = true;
  }

  private reset(): void {
    this.store.reset();
    el("controls").innerHTML = renderControls(this.store.sliders());
    this.renderGraph();
  }

  private exportDocument(): void {
    const { document: doc } = this.store.exportDocument();
    const blob = new Blob([JSON.stringify(doc, null, 2)], { type: "application/json" });
    const url = URL.createObjectURL(blob);
    const anchor = document.createElement("a");
    anchor.href = url;
    anchor.download = "whatif-model.json";
    anchor.click();
    URL.revokeObjectURL(url);
  }
}

boot().catch((error) => console.error("boot failed:", error));
