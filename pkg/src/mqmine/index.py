"""Inverted index over extraction records with numeric facets.

Text terms are scored with BM25 (k1=1.2, b=0.75) and combined conjunctively;
unit, value-range, and property filters intersect the candidate set at the
level of individual numeric entries, so "documents measuring penicillin in
U/mL between 1 and 10" means one entry satisfies all three.  Facet counts,
the per-unit value range, and top terms are computed over the filtered set.
The index is immutable once built; persistence uses a JSON manifest plus
little-endian binary postings and numeric-field files.
"""

from __future__ import annotations

import json
import math
import re
import struct
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Iterable, Sequence

from .corpus import ExtractionRecord

__all__ = [
    "DuplicateDocError",
    "Hit",
    "Index",
    "IndexLoadError",
    "Query",
    "QueryError",
    "SearchResult",
    "analyze",
    "build",
    "load",
    "persist",
    "search",
    "top_terms",
]

FORMAT_VERSION = 1
BM25_K1 = 1.2
BM25_B = 0.75
DEFAULT_EXCLUDED_FACET_UNITS = frozenset(["%"])

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class DuplicateDocError(ValueError):
    pass


class QueryError(ValueError):
    pass


class IndexLoadError(ValueError):
    pass


def analyze(text: str) -> list[str]:
    return [t.lower() for t in _TOKEN_RE.findall(text)]


@lru_cache(maxsize=1)
def _stopwords() -> frozenset[str]:
    text = resources.files("mqmine").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip() and not w.startswith("#"))


@dataclass(frozen=True)
class _NumericEntry:
    unit_key: str
    value: float  # nearest-double approximation, for range predicates
    exact: str  # exact decimal string, for display
    prop: str | None
    display: str


@dataclass(frozen=True)
class Query:
    terms: tuple[str, ...] = ()
    unit: str | None = None
    vmin: float | None = None
    vmax: float | None = None
    prop: str | None = None
    page: int = 1
    page_size: int = 10

    def validate(self) -> None:
        if (self.vmin is not None or self.vmax is not None) and self.unit is None:
            raise QueryError("a value range requires a unit filter")
        if self.page < 1 or self.page_size < 0:
            raise QueryError("page must be >= 1 and page_size >= 0")


@dataclass(frozen=True)
class Hit:
    doc_id: str
    score: float
    snippets: tuple[str, ...]


@dataclass(frozen=True)
class SearchResult:
    total: int
    hits: tuple[Hit, ...]
    facets_units: tuple[tuple[str, int], ...]
    facets_properties: tuple[tuple[str, int], ...]
    range_min: float | None
    range_max: float | None
    top_terms: tuple[tuple[str, int], ...]


class Index:
    """Immutable after build/load; safe for concurrent readers."""

    def __init__(self) -> None:
        self.doc_ids: list[str] = []
        self.doc_len: list[int] = []
        self.snippets: list[list[str]] = []
        self.entries: list[list[_NumericEntry]] = []
        self.postings: dict[str, dict[int, int]] = {}  # term -> ord -> tf
        self.positions: dict[str, dict[int, tuple[int, ...]]] = {}
        self.excluded_facet_units: frozenset[str] = DEFAULT_EXCLUDED_FACET_UNITS
        self._unit_docs: dict[str, set[int]] = {}
        self._total_tokens = 0

    # -- derived --------------------------------------------------------------

    @property
    def doc_count(self) -> int:
        return len(self.doc_ids)

    @property
    def avg_doc_len(self) -> float:
        return self._total_tokens / len(self.doc_ids) if self.doc_ids else 0.0

    def _finish(self) -> None:
        self._unit_docs = {}
        for ordn, entries in enumerate(self.entries):
            for e in entries:
                self._unit_docs.setdefault(e.unit_key, set()).add(ordn)
        self._total_tokens = sum(self.doc_len)

    def _add_doc(self, doc_id: str, sentences: list[str], entries: list[_NumericEntry]) -> None:
        ordn = len(self.doc_ids)
        self.doc_ids.append(doc_id)
        self.snippets.append(sentences)
        self.entries.append(entries)
        tokens: list[str] = []
        for s in sentences:
            tokens.extend(analyze(s))
        self.doc_len.append(len(tokens))
        by_tok: dict[str, list[int]] = {}
        for pos, tok in enumerate(tokens):
            by_tok.setdefault(tok, []).append(pos)
        for tok, poss in by_tok.items():
            self.postings.setdefault(tok, {})[ordn] = len(poss)
            self.positions.setdefault(tok, {})[ordn] = tuple(poss)


def build(
    records: Iterable[ExtractionRecord],
    excluded_facet_units: frozenset[str] = DEFAULT_EXCLUDED_FACET_UNITS,
) -> Index:
    """Build an index from a record stream grouped by document.

    A document's records must be contiguous; a document id that reappears
    after another document is a conflict.
    """
    ix = Index()
    ix.excluded_facet_units = excluded_facet_units
    seen: set[str] = set()
    cur_id: str | None = None
    cur_sentences: list[str] = []
    cur_entries: list[_NumericEntry] = []

    def flush() -> None:
        if cur_id is not None:
            ix._add_doc(cur_id, list(cur_sentences), list(cur_entries))

    for rec in records:
        if rec.doc_id != cur_id:
            flush()
            if rec.doc_id in seen:
                raise DuplicateDocError(f"document {rec.doc_id!r} appears twice in the stream")
            seen.add(rec.doc_id)
            cur_id = rec.doc_id
            cur_sentences = []
            cur_entries = []
        cur_sentences.append(rec.sentence_text)
        props_by_mq: dict[int, str] = {}
        for p in rec.properties:
            props_by_mq.setdefault(p.mq_index, p.text)
        for i, mq in enumerate(rec.mqs):
            cur_entries.append(
                _NumericEntry(
                    unit_key=mq.unit_key,
                    value=float(mq.value),
                    exact=mq.value,
                    prop=props_by_mq.get(i),
                    display=mq.unit_display,
                )
            )
    flush()
    ix._finish()
    return ix


# --- search -----------------------------------------------------------------------


def _entry_ok(e: _NumericEntry, q: Query) -> bool:
    if q.unit is not None and e.unit_key != q.unit:
        return False
    if q.prop is not None and e.prop != q.prop:
        return False
    if q.vmin is not None and e.value < q.vmin:
        return False
    if q.vmax is not None and e.value > q.vmax:
        return False
    return True


def _candidates(ix: Index, q: Query) -> list[int]:
    if q.terms:
        ordsets = []
        for t in q.terms:
            postings = ix.postings.get(t)
            if not postings:
                return []
            ordsets.append(set(postings))
        cands: set[int] = set.intersection(*ordsets)
    elif q.unit is not None:
        cands = set(ix._unit_docs.get(q.unit, ()))
    else:
        cands = set(range(ix.doc_count))
    if q.unit is not None or q.prop is not None or q.vmin is not None or q.vmax is not None:
        cands = {o for o in cands if any(_entry_ok(e, q) for e in ix.entries[o])}
    return sorted(cands)


def _bm25(ix: Index, terms: Sequence[str], ordn: int) -> float:
    score = 0.0
    n = ix.doc_count
    avg = ix.avg_doc_len or 1.0
    for t in terms:
        postings = ix.postings.get(t)
        if not postings:
            continue
        tf = postings.get(ordn, 0)
        if not tf:
            continue
        df = len(postings)
        idf = math.log(1.0 + (n - df + 0.5) / (df + 0.5))
        denom = tf + BM25_K1 * (1.0 - BM25_B + BM25_B * ix.doc_len[ordn] / avg)
        score += idf * tf * (BM25_K1 + 1.0) / denom
    return score


def _highlight(sentence: str, terms: Sequence[str]) -> str:
    out = sentence
    for t in terms:
        out = re.sub(f"(?i)\\b({re.escape(t)})\\b", r"<em>\1</em>", out)
    return out


def _snippets(ix: Index, ordn: int, terms: Sequence[str], limit: int = 3) -> tuple[str, ...]:
    sents = ix.snippets[ordn]
    if not terms:
        return tuple(sents[:1])
    lows = [t.lower() for t in terms]
    picked = [s for s in sents if any(t in s.lower() for t in lows)]
    if not picked:
        picked = sents[:1]
    return tuple(_highlight(s, terms) for s in picked[:limit])


def top_terms(
    ix: Index,
    filters: Query | Sequence[int] | None = None,
    k: int = 25,
) -> tuple[tuple[str, int], ...]:
    """Top-k document-frequency terms over the filtered set, stopwords removed.

    ``filters`` may be a Query (its paging fields are ignored), an explicit
    document-ordinal sequence, or None for the whole corpus.
    """
    if k <= 0:
        return ()
    if filters is None:
        docs: Sequence[int] = range(ix.doc_count)
    elif isinstance(filters, Query):
        q = replace(filters, terms=tuple(t.lower() for t in filters.terms))
        q.validate()
        docs = _candidates(ix, q)
    else:
        docs = filters
    docset = set(docs)
    stop = _stopwords()
    counts: dict[str, int] = {}
    if len(docset) * 4 > ix.doc_count:
        for term, postings in ix.postings.items():
            if term in stop or term.isdigit():
                continue
            c = sum(1 for o in postings if o in docset)
            if c:
                counts[term] = c
    else:
        for o in docset:
            seen: set[str] = set()
            for s in ix.snippets[o]:
                seen.update(analyze(s))
            for t in seen:
                if t not in stop and not t.isdigit():
                    counts[t] = counts.get(t, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return tuple(ranked[:k])


def search(ix: Index, q: Query) -> SearchResult:
    q = replace(q, terms=tuple(t.lower() for t in q.terms))
    q.validate()
    docs = _candidates(ix, q)
    scored = sorted(
        (((-_bm25(ix, q.terms, o)) if q.terms else 0.0, ix.doc_ids[o], o) for o in docs),
    )
    total = len(docs)
    start = (q.page - 1) * q.page_size
    page = scored[start : start + q.page_size]
    hits = tuple(
        Hit(doc_id=doc_id, score=-negscore + 0.0, snippets=_snippets(ix, o, q.terms))
        for negscore, doc_id, o in page
    )
    unit_counts: dict[str, int] = {}
    prop_counts: dict[str, int] = {}
    vmin = vmax = None
    for o in docs:
        units_here = {e.unit_key for e in ix.entries[o]} - ix.excluded_facet_units
        for u in units_here:
            unit_counts[u] = unit_counts.get(u, 0) + 1
        props_here = {e.prop for e in ix.entries[o] if _entry_ok(e, q) and e.prop}
        for p in props_here:
            prop_counts[p] = prop_counts.get(p, 0) + 1
        if q.unit is not None:
            for e in ix.entries[o]:
                if _entry_ok(e, q):
                    vmin = e.value if vmin is None else min(vmin, e.value)
                    vmax = e.value if vmax is None else max(vmax, e.value)
    return SearchResult(
        total=total,
        hits=hits,
        facets_units=tuple(sorted(unit_counts.items(), key=lambda kv: (-kv[1], kv[0]))),
        facets_properties=tuple(sorted(prop_counts.items(), key=lambda kv: (-kv[1], kv[0]))),
        range_min=vmin,
        range_max=vmax,
        top_terms=top_terms(ix, docs),
    )


# --- persistence --------------------------------------------------------------------


def _w_u32(fp: BinaryIO, v: int) -> None:
    fp.write(struct.pack("<I", v))


def _w_f64(fp: BinaryIO, v: float) -> None:
    fp.write(struct.pack("<d", v))


def _w_str(fp: BinaryIO, s: str) -> None:
    b = s.encode("utf-8")
    _w_u32(fp, len(b))
    fp.write(b)


class _Reader:
    def __init__(self, fp: BinaryIO):
        self.fp = fp

    def u32(self) -> int:
        return struct.unpack("<I", self.fp.read(4))[0]

    def f64(self) -> float:
        return struct.unpack("<d", self.fp.read(8))[0]

    def str(self) -> str:
        n = self.u32()
        return self.fp.read(n).decode("utf-8")


def persist(ix: Index, directory: str | Path) -> None:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    manifest = {
        "format_version": FORMAT_VERSION,
        "doc_count": ix.doc_count,
        "excluded_facet_units": sorted(ix.excluded_facet_units),
        "total_tokens": ix._total_tokens,
        "unit_keys": sorted(ix._unit_docs),
    }
    (d / "manifest.json").write_bytes(
        json.dumps(manifest, ensure_ascii=False, sort_keys=True, separators=(",", ":")).encode("utf-8")
    )
    with open(d / "docs.bin", "wb") as fp:
        _w_u32(fp, len(ix.doc_ids))
        for o, doc_id in enumerate(ix.doc_ids):
            _w_str(fp, doc_id)
            _w_u32(fp, ix.doc_len[o])
            _w_u32(fp, len(ix.snippets[o]))
            for s in ix.snippets[o]:
                _w_str(fp, s)
    with open(d / "numerics.bin", "wb") as fp:
        _w_u32(fp, len(ix.entries))
        for entries in ix.entries:
            _w_u32(fp, len(entries))
            for e in entries:
                _w_str(fp, e.unit_key)
                _w_f64(fp, e.value)
                _w_str(fp, e.exact)
                _w_u32(fp, 1 if e.prop is not None else 0)
                _w_str(fp, e.prop if e.prop is not None else "")
                _w_str(fp, e.display)
    with open(d / "postings.bin", "wb") as fp:
        _w_u32(fp, len(ix.postings))
        for term in sorted(ix.postings):
            postings = ix.postings[term]
            _w_str(fp, term)
            _w_u32(fp, len(postings))
            for ordn in sorted(postings):
                _w_u32(fp, ordn)
                _w_u32(fp, postings[ordn])
                poss = ix.positions.get(term, {}).get(ordn, ())
                _w_u32(fp, len(poss))
                for p in poss:
                    _w_u32(fp, p)


def load(directory: str | Path) -> Index:
    d = Path(directory)
    mpath = d / "manifest.json"
    if not mpath.exists():
        raise IndexLoadError(f"no index manifest in {d}")
    manifest = json.loads(mpath.read_text("utf-8"))
    if manifest.get("format_version") != FORMAT_VERSION:
        raise IndexLoadError(
            f"format version {manifest.get('format_version')!r} unsupported (want {FORMAT_VERSION})"
        )
    ix = Index()
    ix.excluded_facet_units = frozenset(manifest.get("excluded_facet_units", []))
    with open(d / "docs.bin", "rb") as fp:
        r = _Reader(fp)
        ndocs = r.u32()
        for _ in range(ndocs):
            ix.doc_ids.append(r.str())
            ix.doc_len.append(r.u32())
            ix.snippets.append([r.str() for _ in range(r.u32())])
    with open(d / "numerics.bin", "rb") as fp:
        r = _Reader(fp)
        ndocs = r.u32()
        for _ in range(ndocs):
            entries = []
            for _ in range(r.u32()):
                unit_key = r.str()
                value = r.f64()
                exact = r.str()
                has_prop = r.u32()
                prop = r.str()
                display = r.str()
                entries.append(
                    _NumericEntry(unit_key, value, exact, prop if has_prop else None, display)
                )
            ix.entries.append(entries)
    with open(d / "postings.bin", "rb") as fp:
        r = _Reader(fp)
        nterms = r.u32()
        for _ in range(nterms):
            term = r.str()
            nposts = r.u32()
            ix.postings[term] = {}
            ix.positions[term] = {}
            for _ in range(nposts):
                ordn = r.u32()
                tf = r.u32()
                npos = r.u32()
                ix.positions[term][ordn] = tuple(r.u32() for _ in range(npos))
                ix.postings[term][ordn] = tf
    if len(ix.doc_ids) != manifest.get("doc_count"):
        raise IndexLoadError("manifest doc_count disagrees with docs.bin")
    ix._finish()
    return ix
