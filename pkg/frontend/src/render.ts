import type { SearchResult } from "./api.js";
import type { UiState } from "./state.js";

// DOM construction for the facet panel and result list. All numbers shown
// come verbatim from the SearchResult; nothing is recounted client-side.

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderError(container: HTMLElement, message: string | null): void {
  const banner = container.querySelector(".error-banner") as HTMLElement | null;
  if (!message) {
    banner?.remove();
    return;
  }
  if (banner) {
    banner.textContent = message;
    return;
  }
  const node = el("div", "error-banner", message);
  node.setAttribute("role", "alert");
  container.prepend(node);
}

export function renderUnits(
  container: HTMLElement,
  state: UiState,
  result: SearchResult,
  onSelect: (unit: string) => void,
  onClear: () => void,
): void {
  container.replaceChildren();
  const heading = el("h3", undefined, "Units");
  container.append(heading);
  if (result.facets.units.length === 0 && !state.unit) {
    container.append(el("p", "empty", "no measured quantities in these results"));
    return;
  }
  const list = el("ul", "facet-list units");
  for (const { key, count } of result.facets.units) {
    const item = el("li");
    const link = el("a", state.unit === key ? "facet selected" : "facet");
    link.href = "#";
    link.dataset.unit = key;
    link.append(el("span", "key", key), el("span", "count", String(count)));
    link.addEventListener("click", (ev) => {
      ev.preventDefault();
      if (state.unit === key) onClear();
      else onSelect(key);
    });
    item.append(link);
    list.append(item);
  }
  container.append(list);
  if (state.unit) {
    const clear = el("button", "clear-unit", "clear unit");
    clear.addEventListener("click", onClear);
    container.append(clear);
  }
}

export function renderProperties(
  container: HTMLElement,
  state: UiState,
  result: SearchResult,
  onSelect: (property: string) => void,
  onClear: () => void,
): void {
  container.replaceChildren();
  if (!state.unit) return; // property facet lives inside a unit selection
  container.append(el("h3", undefined, "Measured properties"));
  if (result.facets.properties.length === 0) {
    container.append(el("p", "empty", "no named properties"));
    return;
  }
  const list = el("ul", "facet-list properties");
  for (const { key, count } of result.facets.properties) {
    const item = el("li");
    const link = el("a", state.property === key ? "facet selected" : "facet");
    link.href = "#";
    link.dataset.property = key;
    link.append(el("span", "key", key), el("span", "count", String(count)));
    link.addEventListener("click", (ev) => {
      ev.preventDefault();
      if (state.property === key) onClear();
      else onSelect(key);
    });
    item.append(link);
    list.append(item);
  }
  container.append(list);
}

export interface RangeBounds {
  min: number;
  max: number;
}

/**
 * Numeric inputs plus sliders, bounded by the facet min/max for the selected
 * unit.  Disabled until a unit is selected (the server rejects a range filter
 * without one).  Slider granularity is 1/100 of the span.
 */
export function renderRange(
  container: HTMLElement,
  state: UiState,
  bounds: RangeBounds | null,
  onApply: (vmin: number | null, vmax: number | null) => void,
): void {
  container.replaceChildren();
  container.append(el("h3", undefined, "Value range"));
  const enabled = state.unit !== null && bounds !== null;
  const lo = bounds ? bounds.min : 0;
  const hi = bounds ? bounds.max : 0;
  const step = bounds && hi > lo ? (hi - lo) / 100 : 1;

  const form = el("div", "range-controls");
  const minInput = el("input") as HTMLInputElement;
  minInput.type = "number";
  minInput.name = "vmin";
  minInput.value = state.vmin !== null ? String(state.vmin) : bounds ? String(lo) : "";
  const maxInput = el("input") as HTMLInputElement;
  maxInput.type = "number";
  maxInput.name = "vmax";
  maxInput.value = state.vmax !== null ? String(state.vmax) : bounds ? String(hi) : "";
  const minSlider = el("input") as HTMLInputElement;
  const maxSlider = el("input") as HTMLInputElement;
  for (const [slider, input] of [
    [minSlider, minInput],
    [maxSlider, maxInput],
  ] as const) {
    slider.type = "range";
    slider.min = String(lo);
    slider.max = String(hi);
    slider.step = String(step);
    slider.value = input.value || String(lo);
    slider.addEventListener("input", () => {
      input.value = slider.value;
      validate();
    });
    slider.addEventListener("change", apply);
  }
  minSlider.name = "vmin-slider";
  maxSlider.name = "vmax-slider";

  const note = el("span", "validation");

  function validate(): boolean {
    const a = minInput.value === "" ? null : Number(minInput.value);
    const b = maxInput.value === "" ? null : Number(maxInput.value);
    const bad =
      (a !== null && !Number.isFinite(a)) ||
      (b !== null && !Number.isFinite(b)) ||
      (a !== null && b !== null && a > b);
    note.textContent = bad ? "invalid range" : "";
    return !bad;
  }

  function apply(): void {
    if (!enabled || !validate()) return; // invalid input: no request
    const a = minInput.value === "" ? null : Number(minInput.value);
    const b = maxInput.value === "" ? null : Number(maxInput.value);
    onApply(a, b);
  }

  for (const input of [minInput, maxInput]) {
    input.disabled = !enabled;
    input.addEventListener("input", validate);
    input.addEventListener("change", apply);
  }
  minSlider.disabled = maxSlider.disabled = !enabled;

  const boundsLabel = bounds
    ? el("span", "bounds", `${bounds.min} – ${bounds.max}`)
    : el("span", "bounds", "select a unit first");
  form.append(minInput, minSlider, maxSlider, maxInput, boundsLabel, note);
  container.append(form);
}

export function renderTerms(container: HTMLElement, result: SearchResult): void {
  container.replaceChildren();
  container.append(el("h3", undefined, "Terms"));
  const cloud = el("div", "term-cloud");
  const counts = result.top_terms.map(([, c]) => c);
  const maxCount = counts.length ? Math.max(...counts) : 1;
  for (const [term, count] of result.top_terms) {
    const node = el("span", "term", term);
    node.dataset.count = String(count);
    const scale = 0.8 + 1.2 * (count / maxCount);
    node.style.fontSize = `${scale.toFixed(2)}em`;
    cloud.append(node);
  }
  container.append(cloud);
}

export function renderHits(
  container: HTMLElement,
  state: UiState,
  result: SearchResult,
  onPage: (page: number) => void,
): void {
  container.replaceChildren();
  const total = el("p", "total", `${result.total} documents`);
  container.append(total);
  if (result.total === 0) {
    container.append(el("p", "empty", "nothing matched — clear a filter and retry"));
    return;
  }
  const list = el("ol", "hits");
  list.start = (state.page - 1) * 10 + 1;
  for (const hit of result.hits) {
    const item = el("li", "hit");
    item.append(el("div", "doc-id", hit.doc_id));
    for (const snippet of hit.snippets) {
      const s = el("div", "snippet");
      s.innerHTML = snippet; // server-produced highlighting
      item.append(s);
    }
    list.append(item);
  }
  container.append(list);
  const nav = el("div", "pager");
  const prev = el("button", "prev", "previous");
  prev.disabled = state.page <= 1;
  prev.addEventListener("click", () => onPage(state.page - 1));
  const next = el("button", "next", "next");
  next.disabled = result.hits.length === 0 || state.page * 10 >= result.total;
  next.addEventListener("click", () => onPage(state.page + 1));
  nav.append(prev, el("span", "page", `page ${state.page}`), next);
  container.append(nav);
}
