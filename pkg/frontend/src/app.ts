import { loadConfig, SearchClient, SearchResult } from "./api.js";
import {
  Action,
  UiState,
  applyAction,
  stateFromUrl,
  stateToParams,
  stateToUrl,
} from "./state.js";
import {
  RangeBounds,
  renderError,
  renderHits,
  renderProperties,
  renderRange,
  renderTerms,
  renderUnits,
} from "./render.js";

export interface App {
  state: UiState;
  client: SearchClient;
  dispatch(action: Action): Promise<void>;
  refresh(): Promise<void>;
  dispose(): void;
}

/**
 * Wire the app into a root element.  Every dispatched action issues exactly
 * one search request; the URL mirrors the state so history navigation
 * restores any view.
 */
export async function createApp(root: HTMLElement, client?: SearchClient): Promise<App> {
  if (!client) {
    const cfg = await loadConfig();
    client = new SearchClient(cfg.apiBase);
  }
  root.innerHTML = `
    <header>
      <h1>MQSearch</h1>
      <form class="searchbox">
        <input type="search" name="q" placeholder="search terms" />
        <button type="submit">search</button>
      </form>
    </header>
    <main>
      <aside class="facets">
        <section class="units-panel"></section>
        <section class="range-panel"></section>
        <section class="properties-panel"></section>
        <section class="terms-panel"></section>
      </aside>
      <section class="results"></section>
    </main>
  `;
  const panels = {
    units: root.querySelector(".units-panel") as HTMLElement,
    range: root.querySelector(".range-panel") as HTMLElement,
    properties: root.querySelector(".properties-panel") as HTMLElement,
    terms: root.querySelector(".terms-panel") as HTMLElement,
    results: root.querySelector(".results") as HTMLElement,
  };

  const app: App = {
    state: stateFromUrl(window.location.search),
    client,
    async dispatch(action: Action): Promise<void> {
      app.state = applyAction(app.state, action);
      window.history.pushState(null, "", window.location.pathname + stateToUrl(app.state));
      await issue();
    },
    async refresh(): Promise<void> {
      await issue();
    },
    dispose(): void {
      window.removeEventListener("popstate", onPopState);
    },
  };

  // range bounds come from the response for the selected unit and stay put
  // while the user narrows the range, so the slider does not shrink under
  // the cursor; they reset when the unit changes
  let rangeBounds: RangeBounds | null = null;
  let boundsUnit: string | null = null;

  async function issue(): Promise<void> {
    let result: SearchResult;
    try {
      result = await client!.search(stateToParams(app.state));
    } catch (err) {
      if ((err as Error).name === "AbortError") return; // superseded request
      renderError(root, `search failed — showing previous results (${(err as Error).message})`);
      return;
    }
    renderError(root, null);
    app.state.result = result;
    if (app.state.unit === null) {
      rangeBounds = null;
      boundsUnit = null;
    } else if (boundsUnit !== app.state.unit) {
      boundsUnit = app.state.unit;
      rangeBounds =
        result.range.min !== null && result.range.max !== null
          ? { min: result.range.min, max: result.range.max }
          : null;
    }
    render();
  }

  function render(): void {
    const result = app.state.result;
    if (!result) return;
    renderUnits(
      panels.units,
      app.state,
      result,
      (unit) => void app.dispatch({ kind: "select-unit", unit }),
      () => void app.dispatch({ kind: "clear-unit" }),
    );
    renderRange(panels.range, app.state, rangeBounds, (vmin, vmax) =>
      void app.dispatch({ kind: "range", vmin, vmax }),
    );
    renderProperties(
      panels.properties,
      app.state,
      result,
      (property) => void app.dispatch({ kind: "select-property", property }),
      () => void app.dispatch({ kind: "clear-property" }),
    );
    renderTerms(panels.terms, result);
    renderHits(panels.results, app.state, result, (page) =>
      void app.dispatch({ kind: "page", page }),
    );
    const qInput = root.querySelector("input[name=q]") as HTMLInputElement;
    if (document.activeElement !== qInput) qInput.value = app.state.q;
  }

  const form = root.querySelector("form.searchbox") as HTMLFormElement;
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const q = (root.querySelector("input[name=q]") as HTMLInputElement).value.trim();
    void app.dispatch({ kind: "query", q });
  });

  function onPopState(): void {
    app.state = { ...stateFromUrl(window.location.search), result: app.state.result };
    void app.refresh();
  }
  window.addEventListener("popstate", onPopState);

  await app.refresh();
  return app;
}

declare global {
  interface Window {
    __mqsearchBoot?: boolean;
  }
}

// auto-boot in the browser; tests construct the app explicitly
if (typeof document !== "undefined" && document.getElementById("app") && !window.__mqsearchBoot) {
  window.__mqsearchBoot = true;
  void createApp(document.getElementById("app") as HTMLElement);
}
