import { describe, expect, it } from "vitest";

import {
  applyAction,
  initialState,
  stateFromUrl,
  stateToParams,
  stateToUrl,
} from "../src/state.js";

describe("state <-> URL round trip", () => {
  it("serializes and restores an equivalent state", () => {
    let s = initialState();
    s = applyAction(s, { kind: "query", q: "penicillin assay" });
    s = applyAction(s, { kind: "select-unit", unit: "U.mL^-1" });
    s = applyAction(s, { kind: "range", vmin: 0.5, vmax: 200 });
    s = applyAction(s, { kind: "select-property", property: "penicillin" });
    s = applyAction(s, { kind: "page", page: 3 });
    const back = stateFromUrl(stateToUrl(s));
    expect(back.q).toBe(s.q);
    expect(back.unit).toBe(s.unit);
    expect(back.vmin).toBe(s.vmin);
    expect(back.vmax).toBe(s.vmax);
    expect(back.property).toBe(s.property);
    expect(back.page).toBe(s.page);
    // and the derived request is identical
    expect(stateToParams(back).toString()).toBe(stateToParams(s).toString());
  });

  it("empty state produces an empty URL", () => {
    expect(stateToUrl(initialState())).toBe("");
  });

  it("ignores malformed numbers in the URL", () => {
    const s = stateFromUrl("?unit=um&vmin=banana&page=-4");
    expect(s.unit).toBe("um");
    expect(s.vmin).toBeNull();
    expect(s.page).toBe(1);
  });
});

describe("parameter mapping", () => {
  it("unit plus range travels as unit, vmin, vmax", () => {
    let s = initialState();
    s = applyAction(s, { kind: "select-unit", unit: "um" });
    s = applyAction(s, { kind: "range", vmin: 1, vmax: 10 });
    const p = stateToParams(s);
    expect(p.get("unit")).toBe("um");
    expect(p.get("vmin")).toBe("1");
    expect(p.get("vmax")).toBe("10");
  });

  it("clearing the unit drops range and property parameters", () => {
    let s = initialState();
    s = applyAction(s, { kind: "select-unit", unit: "um" });
    s = applyAction(s, { kind: "range", vmin: 1, vmax: 10 });
    s = applyAction(s, { kind: "select-property", property: "pixel pitch" });
    s = applyAction(s, { kind: "clear-unit" });
    const p = stateToParams(s);
    expect(p.get("unit")).toBeNull();
    expect(p.get("vmin")).toBeNull();
    expect(p.get("vmax")).toBeNull();
    expect(p.get("property")).toBeNull();
  });

  it("paging increments the page parameter and keeps the query", () => {
    let s = initialState();
    s = applyAction(s, { kind: "query", q: "cancer" });
    s = applyAction(s, { kind: "page", page: 2 });
    const p = stateToParams(s);
    expect(p.get("q")).toBe("cancer");
    expect(p.get("page")).toBe("2");
  });

  it("filter changes reset paging", () => {
    let s = initialState();
    s = applyAction(s, { kind: "page", page: 5 });
    s = applyAction(s, { kind: "select-unit", unit: "um" });
    expect(s.page).toBe(1);
  });
});
