// Types mirror the search API schema exactly; the UI never recomputes any
// count or bound, it displays what the server returned.

export interface FacetEntry {
  key: string;
  count: number;
}

export interface SearchHit {
  doc_id: string;
  score: number;
  snippets: string[];
}

export interface SearchResult {
  total: number;
  hits: SearchHit[];
  facets: {
    units: FacetEntry[];
    properties: FacetEntry[];
  };
  range: { min: number | null; max: number | null };
  top_terms: [string, number][];
}

export class SearchClient {
  private inflight: AbortController | null = null;
  requestCount = 0;

  constructor(private apiBase: string = "") {}

  /** Issue one /search request; any earlier in-flight request is cancelled. */
  async search(params: URLSearchParams): Promise<SearchResult> {
    if (this.inflight) this.inflight.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.requestCount += 1;
    const qs = params.toString();
    const url = `${this.apiBase}/search${qs ? "?" + qs : ""}`;
    try {
      const resp = await fetch(url, { signal: controller.signal });
      if (!resp.ok) {
        throw new Error(`search failed: HTTP ${resp.status}`);
      }
      return (await resp.json()) as SearchResult;
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }
}

export async function loadConfig(base = ""): Promise<{ apiBase: string }> {
  try {
    const resp = await fetch(`${base}/config.json`);
    if (!resp.ok) return { apiBase: "" };
    const cfg = await resp.json();
    return { apiBase: typeof cfg.apiBase === "string" ? cfg.apiBase : "" };
  } catch {
    return { apiBase: "" };
  }
}
