import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from mqmine.corpus import Document, read_records, run_pipeline, synth_corpus
from mqmine.index import Query, build, load, search
from mqmine.service import ServiceConfig, build_app, main


@pytest.fixture()
def doc_dir(tmp_path):
    d = tmp_path / "docs"
    d.mkdir()
    (d / "a.txt").write_text(
        "The pixel pitch employed was 352 µm. Panel strength was recorded at 9 ksi.",
        encoding="utf-8",
    )
    (d / "b.txt").write_text("The melting point was 12 °C.", encoding="utf-8")
    return d


def test_cli_extract_golden_fixture(doc_dir, tmp_path, capsys):
    out = tmp_path / "records.jsonl"
    rc = main(["extract", str(doc_dir), "-o", str(out)])
    assert rc == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    objs = [json.loads(line) for line in lines]
    assert {o["doc_id"] for o in objs} == {"a.txt", "b.txt"}
    a_recs = [o for o in objs if o["doc_id"] == "a.txt"]
    assert [m["unit_key"] for o in a_recs for m in o["mqs"]] == ["um", "ksi"]
    assert [p["text"] for o in a_recs for p in o["properties"]] == [
        "pixel pitch",
        "panel strength",
    ]
    summary = capsys.readouterr().err
    assert "documents=2" in summary and "mqs=" in summary


def test_cli_extract_empty_dir(tmp_path):
    d = tmp_path / "empty"
    d.mkdir()
    out = tmp_path / "records.jsonl"
    assert main(["extract", str(d), "-o", str(out)]) == 0
    assert out.read_text() == ""


def test_cli_extract_missing_dir(tmp_path):
    assert main(["extract", str(tmp_path / "nope"), "-o", str(tmp_path / "r.jsonl")]) != 0


def test_cli_index_then_library_search_equivalence(doc_dir, tmp_path):
    records_file = tmp_path / "records.jsonl"
    ix_dir = tmp_path / "ix"
    assert main(["extract", str(doc_dir), "-o", str(records_file)]) == 0
    assert main(["index", str(records_file), "--index-dir", str(ix_dir)]) == 0
    loaded = load(ix_dir)
    with open(records_file, encoding="utf-8") as fp:
        direct = build(list(read_records(fp)))
    for q in [Query(), Query(terms=("pixel",)), Query(unit="um"), Query(unit="ksi", vmin=1, vmax=10)]:
        assert search(loaded, q) == search(direct, q)


def test_cli_index_missing_records(tmp_path):
    assert main(["index", str(tmp_path / "nope.jsonl"), "--index-dir", str(tmp_path / "ix")]) != 0


def test_cli_eval_defaults():
    import mqmine.service as service_mod

    captured = {}
    orig = service_mod.sample_sentences

    def spy(sentences, predicate, n, seed):
        captured["n"] = n
        return orig(sentences, predicate, n, seed)

    service_mod.sample_sentences = spy
    try:
        rc = main(["eval", "MQ", "--population", "4100", "--corruption-prob", "0"])
        assert rc == 0 and captured["n"] == 1000
        rc = main(["eval", "MP", "--population", "2100", "--corruption-prob", "0"])
        assert rc == 0 and captured["n"] == 500
    finally:
        service_mod.sample_sentences = orig


def test_cli_eval_clean_corpus_perfect(capsys):
    rc = main(["eval", "MQ", "--n", "120", "--population", "400", "--corruption-prob", "0",
               "--precision-floor", "0.99", "--recall-floor", "0.99"])
    out = capsys.readouterr().out
    assert rc == 0
    report = json.loads(out.strip().splitlines()[-1])
    assert report["precision"] == 1.0 and report["recall"] == 1.0


def test_cli_eval_floor_violation_exits_nonzero():
    # an impossible floor must flip the exit status
    rc = main(["eval", "MQ", "--n", "50", "--population", "200", "--corruption-prob", "0",
               "--precision-floor", "1.1"])
    assert rc == 1


# --- HTTP API -----------------------------------------------------------------------


@pytest.fixture(scope="module")
def app_client(pipeline):
    sents = synth_corpus(seed=55, n_sentences=300, corruption_prob=0.1)
    records = []
    for i, ls in enumerate(sents):
        records.extend(run_pipeline(Document(id=f"doc{i:03d}", text=ls.text), pipeline))
    ix = build(records)
    app = build_app(ix, ServiceConfig(index_dir=Path("."), cors_origins=("http://localhost:5173",)))
    client = TestClient(app, raise_server_exceptions=False)
    return client, ix


def test_http_health(app_client):
    client, ix = app_client
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok", "docs": ix.doc_count}


def test_http_search_no_params_first_page(app_client):
    client, ix = app_client
    r = client.get("/search")
    assert r.status_code == 200
    body = r.json()
    assert body["total"] == ix.doc_count
    assert len(body["hits"]) == 10
    assert set(body) == {"total", "hits", "facets", "range", "top_terms"}
    assert set(body["facets"]) == {"units", "properties"}


def test_http_search_unit_filter_matches_library(app_client):
    client, ix = app_client
    r = client.get("/search", params={"unit": "um", "page_size": 5})
    body = r.json()
    lib = search(ix, Query(unit="um", page_size=5))
    assert body["total"] == lib.total
    assert [h["doc_id"] for h in body["hits"]] == [h.doc_id for h in lib.hits]
    assert body["range"] == {"min": lib.range_min, "max": lib.range_max}
    assert body["facets"]["properties"] == [
        {"key": k, "count": c} for k, c in lib.facets_properties
    ]


def test_http_full_parameter_mapping(app_client):
    client, ix = app_client
    params = {"q": "study", "unit": "um", "vmin": 1, "vmax": 1e9, "property": "pixel pitch", "page": 1}
    r = client.get("/search", params=params)
    assert r.status_code == 200
    lib = search(
        ix,
        Query(terms=("study",), unit="um", vmin=1.0, vmax=1e9, prop="pixel pitch", page_size=10),
    )
    assert r.json()["total"] == lib.total


def test_http_range_without_unit_is_400(app_client):
    client, _ = app_client
    r = client.get("/search", params={"vmin": 1})
    assert r.status_code == 400


def test_http_malformed_number_is_422(app_client):
    client, _ = app_client
    r = client.get("/search", params={"unit": "um", "vmin": "banana"})
    assert r.status_code == 422


def test_http_facets_endpoint(app_client):
    client, ix = app_client
    r = client.get("/facets")
    assert r.status_code == 200
    body = r.json()
    lib = search(ix, Query(page_size=0))
    assert body["units"] == [{"key": k, "count": c} for k, c in lib.facets_units]
    assert body["total"] == lib.total


def test_http_deterministic_bodies(app_client):
    client, _ = app_client
    a = client.get("/search", params={"q": "cancer", "unit": "um"})
    b = client.get("/search", params={"q": "cancer", "unit": "um"})
    assert a.content == b.content


def test_http_cors_header(app_client):
    client, _ = app_client
    r = client.get("/health", headers={"Origin": "http://localhost:5173"})
    assert r.headers.get("access-control-allow-origin") == "http://localhost:5173"


def test_http_internal_errors_are_opaque(app_client, monkeypatch):
    import mqmine.service as service_mod

    def boom(*args, **kwargs):
        raise RuntimeError("secret internal state: /etc/passwd")

    client, _ = app_client
    monkeypatch.setattr(service_mod, "search", boom)
    r = client.get("/search", params={"q": "x"})
    assert r.status_code == 500
    assert r.json() == {"error": "internal error"}
    assert "secret" not in r.text
