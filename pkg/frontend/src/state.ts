import type { SearchResult } from "./api.js";

// The whole UI is a function of this state; it serializes losslessly to the
// URL so back/forward navigation and shared links restore the same view.
export interface UiState {
  q: string;
  unit: string | null;
  vmin: number | null;
  vmax: number | null;
  property: string | null;
  page: number;
  // last successful response; kept on API failure so the view stays usable
  result: SearchResult | null;
}

export function initialState(): UiState {
  return { q: "", unit: null, vmin: null, vmax: null, property: null, page: 1, result: null };
}

/** Request parameters for the current state. Range only travels with a unit. */
export function stateToParams(state: UiState): URLSearchParams {
  const p = new URLSearchParams();
  if (state.q) p.set("q", state.q);
  if (state.unit !== null) {
    p.set("unit", state.unit);
    if (state.vmin !== null) p.set("vmin", String(state.vmin));
    if (state.vmax !== null) p.set("vmax", String(state.vmax));
    if (state.property !== null) p.set("property", state.property);
  }
  if (state.page > 1) p.set("page", String(state.page));
  return p;
}

export function stateToUrl(state: UiState): string {
  const qs = stateToParams(state).toString();
  return qs ? `?${qs}` : "";
}

export function stateFromUrl(search: string): UiState {
  const p = new URLSearchParams(search);
  const state = initialState();
  state.q = p.get("q") ?? "";
  state.unit = p.get("unit");
  if (state.unit !== null) {
    state.vmin = numOrNull(p.get("vmin"));
    state.vmax = numOrNull(p.get("vmax"));
    state.property = p.get("property");
  }
  const page = numOrNull(p.get("page"));
  state.page = page !== null && page >= 1 ? Math.floor(page) : 1;
  return state;
}

function numOrNull(s: string | null): number | null {
  if (s === null || s.trim() === "") return null;
  const v = Number(s);
  return Number.isFinite(v) ? v : null;
}

export type Action =
  | { kind: "query"; q: string }
  | { kind: "select-unit"; unit: string }
  | { kind: "clear-unit" }
  | { kind: "range"; vmin: number | null; vmax: number | null }
  | { kind: "select-property"; property: string }
  | { kind: "clear-property" }
  | { kind: "page"; page: number };

/** Pure state transition; the caller issues exactly one request afterwards. */
export function applyAction(state: UiState, action: Action): UiState {
  const next = { ...state, page: 1 };
  switch (action.kind) {
    case "query":
      next.q = action.q;
      break;
    case "select-unit":
      next.unit = action.unit;
      next.vmin = null;
      next.vmax = null;
      next.property = null;
      break;
    case "clear-unit":
      next.unit = null;
      next.vmin = null;
      next.vmax = null;
      next.property = null;
      break;
    case "range":
      next.vmin = action.vmin;
      next.vmax = action.vmax;
      break;
    case "select-property":
      next.property = action.property;
      break;
    case "clear-property":
      next.property = null;
      break;
    case "page":
      next.page = Math.max(1, action.page);
      break;
  }
  return next;
}
