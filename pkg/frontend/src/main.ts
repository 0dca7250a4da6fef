// Browser bootstrap: settings from localStorage, mount, wire events.

import { ApiClient } from "./api.js";
import { DashboardApp, RenderedViews, VIEW_NAMES } from "./app.js";
import { renderToString } from "./dom.js";
import { parseTaxonomy, serializeTaxonomy } from "./taxonomy.js";
import type { PolarityLabel } from "./types.js";

function setting(key: string, fallback: string): string {
  return window.localStorage.getItem(key) ?? fallback;
}

function mount(views: RenderedViews): void {
  for (const name of VIEW_NAMES) {
    const host = document.getElementById(`slot-${name}`);
    if (host) {
      host.innerHTML = renderToString(views[name]);
    }
  }
}

function readFilters(): Record<string, string> {
  const filters: Record<string, string> = {};
  for (const key of ["period", "lang", "category", "source_kind", "polarity", "influence"]) {
    const input = document.getElementById(`filter-${key}`) as HTMLInputElement | null;
    if (input && input.value) {
      filters[key] = input.value;
    }
  }
  return filters;
}

export function boot(): void {
  const api = new ApiClient({
    baseUrl: setting("mediawatch.baseUrl", window.location.origin),
    token: setting("mediawatch.token", ""),
  });
  const app = new DashboardApp(api, mount);

  document.getElementById("apply-filters")?.addEventListener("click", () => {
    void app.setFilters(readFilters());
  });

  document.body.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains("correct-btn")) {
      const mentionId = Number(target.dataset["mentionId"]);
      const label = target.dataset["setLabel"] as PolarityLabel;
      void app.correctPolarity(mentionId, label);
    }
  });

  const editor = document.getElementById("taxonomy-editor") as HTMLTextAreaElement | null;
  document.getElementById("taxonomy-load")?.addEventListener("click", () => {
    void app.loadTaxonomyDraft().then((records) => {
      if (editor) {
        editor.value = serializeTaxonomy(records);
      }
    });
  });
  document.getElementById("taxonomy-save")?.addEventListener("click", () => {
    if (!editor) return;
    try {
      const records = parseTaxonomy(editor.value);
      void app.saveTaxonomy(records).then((result) => {
        const status = document.getElementById("taxonomy-status");
        if (status) {
          status.textContent = `saved version ${result.version} (${result.keywords} keywords)`;
        }
      });
    } catch (err) {
      const status = document.getElementById("taxonomy-status");
      if (status) {
        status.textContent = (err as Error).message;
      }
    }
  });

  void app.refreshAll();
  app.startPolling();
}

if (typeof document !== "undefined") {
  boot();
}
