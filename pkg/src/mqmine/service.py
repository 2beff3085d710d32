"""Command-line entry points and the HTTP search API.

``mqmine extract`` runs the pipeline over a directory of plain-text files and
writes a record stream; ``mqmine index`` builds a persistent index from it;
``mqmine serve`` exposes /search, /facets and /health over HTTP; ``mqmine
eval`` scores the extractors on a synthetic labeled corpus.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from fastapi import FastAPI, HTTPException, Query as QueryParam, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import corpus as corpus_mod
from . import index as index_mod
from .corpus import Document, LabeledSentence, Pipeline, read_corpus, synth_corpus, write_records
from .evaluation import has_number, sample_sentences, score
from .index import Index, Query, QueryError, SearchResult, search

__all__ = ["ServiceConfig", "build_app", "main"]


@dataclass(frozen=True)
class ServiceConfig:
    index_dir: Path
    host: str = "127.0.0.1"
    port: int = 8080
    page_size: int = 10
    cors_origins: tuple[str, ...] = ()
    ui_dir: Path | None = None


def _result_body(result: SearchResult) -> dict:
    return {
        "total": result.total,
        "hits": [
            {"doc_id": h.doc_id, "score": round(h.score, 6), "snippets": list(h.snippets)}
            for h in result.hits
        ],
        "facets": {
            "units": [{"key": k, "count": c} for k, c in result.facets_units],
            "properties": [{"key": k, "count": c} for k, c in result.facets_properties],
        },
        "range": {"min": result.range_min, "max": result.range_max},
        "top_terms": [[t, c] for t, c in result.top_terms],
    }


def build_app(ix: Index, config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig(index_dir=Path("."))
    app = FastAPI(title="mqmine search", docs_url=None, redoc_url=None)
    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["GET"],
            allow_headers=["*"],
        )

    @app.exception_handler(Exception)
    async def _internal(request: Request, exc: Exception) -> JSONResponse:  # pragma: no cover
        return JSONResponse(status_code=500, content={"error": "internal error"})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "docs": ix.doc_count}

    @app.get("/search")
    def do_search(
        q: str = "",
        unit: str | None = None,
        vmin: float | None = None,
        vmax: float | None = None,
        property: str | None = QueryParam(default=None),
        page: int = 1,
        page_size: int | None = None,
    ) -> dict:
        query = Query(
            terms=tuple(index_mod.analyze(q)),
            unit=unit,
            vmin=vmin,
            vmax=vmax,
            prop=property,
            page=page,
            page_size=config.page_size if page_size is None else page_size,
        )
        try:
            result = search(ix, query)
        except QueryError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return _result_body(result)

    @app.get("/facets")
    def facets() -> dict:
        result = search(ix, Query(page_size=0))
        return {
            "units": [{"key": k, "count": c} for k, c in result.facets_units],
            "total": result.total,
        }

    if config.ui_dir is not None and Path(config.ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(config.ui_dir), html=True), name="ui")
    return app


# --- CLI ----------------------------------------------------------------------------


def _cmd_extract(args: argparse.Namespace) -> int:
    in_dir = Path(args.input)
    if not in_dir.is_dir():
        print(f"error: input directory {in_dir} not found", file=sys.stderr)
        return 2
    pipeline = _pipeline_from(args)
    counters = pipeline.counters()
    errors: list[str] = []

    def on_error(path: Path, exc: Exception) -> None:
        errors.append(f"{path}: {exc}")

    n_docs = 0
    n_records = 0
    try:
        ctx = (
            open(args.output, "w", encoding="utf-8")
            if args.output != "-"
            else nullcontext(sys.stdout)
        )
        with ctx as fp:
            for doc in read_corpus(in_dir, on_error=on_error):
                n_docs += 1
                n_records += write_records(pipeline.run(doc, counters), fp)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in errors:
        print(f"skipped: {line}", file=sys.stderr)
    print(
        "documents={} sentences={} records={} mqs={} properties={} "
        "rejected(context/repetition/dash)={}/{}/{}".format(
            n_docs,
            counters["sentences"],
            n_records,
            counters["mqs"],
            counters["properties"],
            counters["rejected_context"],
            counters["rejected_repetition"],
            counters["rejected_dash"],
        ),
        file=sys.stderr,
    )
    return 0


def _pipeline_from(args: argparse.Namespace) -> Pipeline:
    from .mpe import builtin_patterns, load_patterns
    from .postag import Tagger, default_tagger
    from .units import default_catalog, load_catalog

    catalog = load_catalog(args.catalog) if getattr(args, "catalog", None) else default_catalog()
    patterns = tuple(load_patterns(args.patterns)) if getattr(args, "patterns", None) else builtin_patterns()
    if getattr(args, "lexicon", None):
        rules = getattr(args, "tagrules", None)
        from importlib import resources

        default_rules = resources.files("mqmine").joinpath("data/tagrules.tsv")
        tagger = Tagger.from_files(args.lexicon, rules or str(default_rules))
    else:
        tagger = default_tagger()
    return Pipeline(catalog=catalog, tagger=tagger, patterns=patterns)


def _cmd_index(args: argparse.Namespace) -> int:
    path = Path(args.records)
    if not path.is_file():
        print(f"error: records file {path} not found", file=sys.stderr)
        return 2
    with open(path, encoding="utf-8") as fp:
        try:
            ix = index_mod.build(corpus_mod.read_records(fp))
        except (index_mod.DuplicateDocError, json.JSONDecodeError, KeyError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    index_mod.persist(ix, args.index_dir)
    print(f"indexed {ix.doc_count} documents into {args.index_dir}", file=sys.stderr)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    try:
        ix = index_mod.load(args.index_dir)
    except index_mod.IndexLoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    config = ServiceConfig(
        index_dir=Path(args.index_dir),
        host=args.host,
        port=args.port,
        page_size=args.page_size,
        cors_origins=tuple(args.cors_origin or ()),
        ui_dir=Path(args.ui_dir) if args.ui_dir else None,
    )
    app = build_app(ix, config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    mode = args.mode.upper()
    if mode not in ("MQ", "MP"):
        print("error: mode must be MQ or MP", file=sys.stderr)
        return 2
    n = args.n if args.n is not None else (1000 if mode == "MQ" else 500)
    population = args.population if args.population is not None else max(4 * n, n + 100)
    sentences = synth_corpus(seed=args.seed, n_sentences=population, corruption_prob=args.corruption_prob)
    pipeline = _pipeline_from(args)

    records: dict[int, corpus_mod.ExtractionRecord | None] = {}

    def predict(i: int, ls: LabeledSentence):
        if i not in records:
            recs = pipeline.run(Document(id=f"s{i}", text=ls.text))
            records[i] = recs[0] if recs else None
        return records[i]

    index_of = {id(ls): i for i, ls in enumerate(sentences)}
    if mode == "MQ":
        predicate = has_number
    else:
        predicate = lambda ls: predict(index_of[id(ls)], ls) is not None  # noqa: E731
    try:
        sample = sample_sentences(sentences, predicate, n, seed=args.seed + 1)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    predicted = [predict(index_of[id(ls)], ls) for ls in sample]
    report = score(sample, predicted, mode=mode)
    print(report.table())
    print(json.dumps(asdict(report), default=str))
    failed = False
    if args.precision_floor is not None:
        failed |= report.precision is None or report.precision < args.precision_floor
    if args.recall_floor is not None:
        failed |= report.recall is None or report.recall < args.recall_floor
    if failed:
        print("error: configured floor violated", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="mqmine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="run the extraction pipeline over a directory")
    p_extract.add_argument("input", help="directory of plain-text documents")
    p_extract.add_argument("-o", "--output", default="-", help="record stream file ('-' = stdout)")
    p_extract.add_argument("--catalog", help="unit catalog file")
    p_extract.add_argument("--patterns", help="property pattern file")
    p_extract.add_argument("--lexicon", help="tagger lexicon file")
    p_extract.add_argument("--tagrules", help="tagger transformation rules file")
    p_extract.set_defaults(func=_cmd_extract)

    p_index = sub.add_parser("index", help="build a persistent index from a record stream")
    p_index.add_argument("records", help="record stream file")
    p_index.add_argument("--index-dir", required=True)
    p_index.set_defaults(func=_cmd_index)

    p_serve = sub.add_parser("serve", help="serve the search API over HTTP")
    p_serve.add_argument("--index-dir", required=True)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--page-size", type=int, default=10)
    p_serve.add_argument("--cors-origin", action="append")
    p_serve.add_argument("--ui-dir", help="directory of static UI assets")
    p_serve.set_defaults(func=_cmd_serve)

    p_eval = sub.add_parser("eval", help="score the extractors on a synthetic corpus")
    p_eval.add_argument("mode", choices=["MQ", "MP", "mq", "mp"])
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--n", type=int, default=None, help="sample size (default 1000 MQ / 500 MP)")
    p_eval.add_argument("--population", type=int, default=None)
    p_eval.add_argument("--corruption-prob", type=float, default=0.3)
    p_eval.add_argument("--precision-floor", type=float, default=None)
    p_eval.add_argument("--recall-floor", type=float, default=None)
    p_eval.add_argument("--catalog")
    p_eval.add_argument("--patterns")
    p_eval.add_argument("--lexicon")
    p_eval.add_argument("--tagrules")
    p_eval.set_defaults(func=_cmd_eval)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
