"""Document ingestion, the end-to-end extraction pipeline, and synthetic
labeled corpora.

The real evaluation corpus of converted research reports is not
redistributable, so a template-driven generator produces labeled sentences
covering every quantity form and every property-pattern shape the extractors
support, plus distractors (numbers without units) and the known
post-processing traps.  A corruption simulator reproduces the error modes of
document-to-text conversion with per-transform probabilities, fully
reproducible from a seed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from decimal import Decimal
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence, TextIO

from .mqe import ExtractorConfig, MeasuredQuantity, extract_with_rejections, segment_sentences
from .mpe import MeasuredProperty, PropertyPattern, builtin_patterns, extract_properties, normalize_property
from .normalize import normalize_chars
from .postag import Tagger, chunk_np, default_tagger, tokenize
from .units import UnitCatalog, default_catalog

__all__ = [
    "CORRUPTIONS",
    "Document",
    "ExtractionRecord",
    "GoldMQ",
    "LabeledSentence",
    "Pipeline",
    "RecordMQ",
    "RecordProperty",
    "apply_corruptions",
    "read_corpus",
    "read_records",
    "run_many",
    "run_pipeline",
    "scenario_expectations",
    "synth_corpus",
    "synth_scenario_records",
    "write_records",
]


@dataclass(frozen=True)
class Document:
    id: str
    text: str


@dataclass(frozen=True)
class RecordMQ:
    value: str  # standardized, fixed-point
    error: str | None
    unit_key: str
    unit_display: str
    span: tuple[int, int]


@dataclass(frozen=True)
class RecordProperty:
    text: str  # normalized property phrase
    mq_index: int
    pattern_id: str
    span: tuple[int, int]


@dataclass(frozen=True)
class ExtractionRecord:
    doc_id: str
    sentence_index: int
    sentence_text: str
    mqs: tuple[RecordMQ, ...]
    properties: tuple[RecordProperty, ...]


@dataclass(frozen=True)
class GoldMQ:
    value: str  # standardized, fixed-point
    unit_key: str
    span: tuple[int, int]


@dataclass(frozen=True)
class LabeledSentence:
    text: str
    gold_mqs: tuple[GoldMQ, ...]
    gold_property: str | None
    transform_ids: tuple[str, ...]


# --- ingestion -----------------------------------------------------------------


def read_corpus(
    root: str | Path,
    on_error: Callable[[Path, Exception], None] | None = None,
) -> Iterator[Document]:
    """Documents from all regular files under ``root``, lexicographic by path.

    Files are decoded as UTF-8 with invalid bytes replaced; files containing
    NUL bytes are reported per-file and skipped, the stream continues.
    """
    root = Path(root)
    for path in sorted(p for p in root.rglob("*") if p.is_file()):
        try:
            raw = path.read_bytes()
            if b"\x00" in raw:
                raise ValueError("binary content (NUL bytes)")
            text = raw.decode("utf-8", errors="replace")
        except Exception as exc:  # noqa: BLE001 - error contract is per-file
            if on_error is not None:
                on_error(path, exc)
            continue
        yield Document(id=str(path.relative_to(root)), text=text)


# --- pipeline ------------------------------------------------------------------


@dataclass
class Pipeline:
    catalog: UnitCatalog
    tagger: Tagger
    patterns: tuple[PropertyPattern, ...]
    config: ExtractorConfig = field(default_factory=ExtractorConfig)

    @classmethod
    def default(cls) -> "Pipeline":
        return _default_pipeline()

    def counters(self) -> dict[str, int]:
        return {"sentences": 0, "mqs": 0, "properties": 0,
                "rejected_context": 0, "rejected_repetition": 0, "rejected_dash": 0}

    def run(self, doc: Document, counters: dict[str, int] | None = None) -> list[ExtractionRecord]:
        nt = normalize_chars(doc.text)
        records: list[ExtractionRecord] = []
        for i, span in enumerate(segment_sentences(nt)):
            if counters is not None:
                counters["sentences"] += 1
            s, e = span
            if not any(c.isdigit() for c in nt.text[s:e]):
                continue
            mqs, rejections = extract_with_rejections(nt, span, i, self.catalog, self.config)
            if counters is not None:
                for r in rejections:
                    counters[f"rejected_{r.rule_id}"] += 1
            if not mqs:
                continue
            tokens = tokenize(nt, span, mqs)
            tagged = self.tagger.tag(tokens)
            chunks = chunk_np(tagged, mqs)
            props = extract_properties(tagged, chunks, mqs, nt, self.patterns)
            if counters is not None:
                counters["mqs"] += len(mqs)
                counters["properties"] += len(props)
            records.append(_to_record(doc.id, i, nt, span, mqs, props))
        return records


@lru_cache(maxsize=1)
def _default_pipeline() -> Pipeline:
    return Pipeline(catalog=default_catalog(), tagger=default_tagger(), patterns=builtin_patterns())


def _to_record(
    doc_id: str,
    index: int,
    nt,
    span: tuple[int, int],
    mqs: Sequence[MeasuredQuantity],
    props: Sequence[MeasuredProperty],
) -> ExtractionRecord:
    return ExtractionRecord(
        doc_id=doc_id,
        sentence_index=index,
        sentence_text=nt.text[span[0] : span[1]],
        mqs=tuple(
            RecordMQ(
                value=mq.standardized.plain,
                error=mq.standardized.error_plain,
                unit_key=mq.unit_key,
                unit_display=mq.unit_display,
                span=mq.span,
            )
            for mq in mqs
        ),
        properties=tuple(
            RecordProperty(
                text=normalize_property(p.property_text),
                mq_index=p.mq_index,
                pattern_id=p.pattern_id,
                span=p.np_span,
            )
            for p in props
        ),
    )


def run_pipeline(doc: Document, pipeline: Pipeline | None = None) -> list[ExtractionRecord]:
    """normalize -> segment -> MQE -> tag/chunk -> MPE for one document."""
    return (pipeline or Pipeline.default()).run(doc)


def run_many(
    docs: Iterable[Document],
    pipeline: Pipeline | None = None,
    workers: int = 1,
) -> Iterator[ExtractionRecord]:
    """Run the pipeline over many documents, yielding records in document order.

    Documents are independent units of work; with ``workers`` > 1 they fan out
    across a thread pool (everything downstream is pure and immutable) and the
    results are merged back in input order.
    """
    pipe = pipeline or Pipeline.default()
    if workers <= 1:
        for doc in docs:
            yield from pipe.run(doc)
        return
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for records in pool.map(pipe.run, docs):
            yield from records


# --- record stream ---------------------------------------------------------------


def write_records(records: Iterable[ExtractionRecord], fp: TextIO) -> int:
    n = 0
    for r in records:
        obj = {
            "doc_id": r.doc_id,
            "sentence_index": r.sentence_index,
            "sentence_text": r.sentence_text,
            "mqs": [
                {
                    "value": m.value,
                    "error": m.error,
                    "unit_key": m.unit_key,
                    "unit_display": m.unit_display,
                    "span": list(m.span),
                }
                for m in r.mqs
            ],
            "properties": [
                {
                    "text": p.text,
                    "mq_index": p.mq_index,
                    "pattern_id": p.pattern_id,
                    "span": list(p.span),
                }
                for p in r.properties
            ],
        }
        fp.write(json.dumps(obj, ensure_ascii=False) + "\n")
        n += 1
    return n


def read_records(fp: TextIO) -> Iterator[ExtractionRecord]:
    for line in fp:
        line = line.strip()
        if not line:
            continue
        obj = json.loads(line)
        yield ExtractionRecord(
            doc_id=obj["doc_id"],
            sentence_index=obj["sentence_index"],
            sentence_text=obj["sentence_text"],
            mqs=tuple(
                RecordMQ(m["value"], m["error"], m["unit_key"], m["unit_display"], tuple(m["span"]))
                for m in obj["mqs"]
            ),
            properties=tuple(
                RecordProperty(p["text"], p["mq_index"], p["pattern_id"], tuple(p["span"]))
                for p in obj["properties"]
            ),
        )


# --- corruption simulator ---------------------------------------------------------


def _mojibake(c: str) -> str:
    return c.encode("utf-8").decode("cp1252")


def _replace_tracking(text: str, spans: list[list[int]], table: dict[str, str]) -> str:
    """Apply single-char replacements, shifting span endpoints to follow."""
    out: list[str] = []
    delta = 0
    shifts: list[tuple[int, int]] = []  # (original position, delta after it)
    for i, ch in enumerate(text):
        rep = table.get(ch)
        if rep is None:
            out.append(ch)
        else:
            out.append(rep)
            if len(rep) != 1:
                delta += len(rep) - 1
                shifts.append((i, delta))
    if shifts:
        for span in spans:
            for k in (0, 1):
                p = span[k]
                d = 0
                for orig, total in shifts:
                    # endpoint moves when the replacement sits strictly before it
                    if orig < p or (k == 1 and orig == p - 1):
                        d = total
                    else:
                        break
                span[k] = p + d
    return "".join(out)


_T_ENDASH = {"-": "–"}
_T_MOJIBAKE = {c: _mojibake(c) for c in "–—−×°µ±"}
_T_CARET = {"^": ""}
_T_MUSUB = {"µ": "μ"}
_T_PM = {"±": _mojibake("±")}

# Applied in this order; mojibake precedes the Greek-mu swap so a corrupted µ
# is never double-transformed into an unrepairable form.
CORRUPTIONS: tuple[tuple[str, dict[str, str]], ...] = (
    ("endash", _T_ENDASH),
    ("mojibake", _T_MOJIBAKE),
    ("caretloss", _T_CARET),
    ("musub", _T_MUSUB),
    ("pm", _T_PM),
)


def apply_corruptions(
    text: str,
    spans: Sequence[tuple[int, int]] = (),
    transforms: Sequence[str] = ("endash", "mojibake", "caretloss", "musub", "pm"),
) -> tuple[str, list[tuple[int, int]]]:
    """Apply the named transforms in canonical order, remapping spans."""
    order = {name: i for i, (name, _) in enumerate(CORRUPTIONS)}
    chosen = sorted(set(transforms), key=lambda n: order[n])
    mut = [list(s) for s in spans]
    for name in chosen:
        table = dict(CORRUPTIONS[order[name]][1])
        text = _replace_tracking(text, mut, table)
    return text, [(a, b) for a, b in mut]


# --- synthetic labeled corpus -------------------------------------------------------

_THEMES = {
    "oncology": ["breast", "cancer", "prostate", "tumor", "serum", "assay"],
    "optics": ["laser", "oscillator", "photon", "lens", "beam", "detector"],
    "materials": ["alloy", "composite", "ceramic", "fatigue", "specimen", "coating"],
    "propulsion": ["engine", "nozzle", "thrust", "combustion", "turbine", "fuel"],
}

# (surface, canonical key, display) written out by hand so gold labels never
# pass through the unit matcher under test.
_UNITS = [
    ("µm", "um", "µm"),
    ("cm", "cm", "cm"),
    ("m", "m", "m"),
    ("ms", "ms", "ms"),
    ("s", "s", "s"),
    ("Hz", "Hz", "Hz"),
    ("kHz", "kHz", "kHz"),
    ("°C", "°C", "°C"),
    ("K", "K", "K"),
    ("mA", "mA", "mA"),
    ("pA/K", "pA.K^-1", "pA·K^-1"),
    ("kg", "kg", "kg"),
    ("mg", "mg", "mg"),
    ("mL", "mL", "mL"),
    ("MPa", "MPa", "MPa"),
    ("ksi", "ksi", "ksi"),
    ("kV", "kV", "kV"),
    ("mW", "mW", "mW"),
    ("eV", "eV", "eV"),
    ("mol", "mol", "mol"),
    ("U/mL", "U.mL^-1", "U·mL^-1"),
    ("km/h", "km.h^-1", "km·h^-1"),
    ("A/cm^2", "A.cm^-2", "A·cm^-2"),
    ("kV/cm", "kV.cm^-1", "kV·cm^-1"),
    ("m/s^2", "m.s^-2", "m·s^-2"),
    ("W", "W", "W"),
]

_PROPS = [
    "pixel pitch", "panel strength", "beam width", "pulse duration",
    "sample mass", "breakdown voltage", "melting point", "current density",
    "scan frequency", "detector gain", "grain size", "field strength",
    "penicillin concentration", "sensor responsivity", "thermal conductivity",
    "carrier lifetime", "fiber diameter", "coolant pressure", "grid spacing",
    "output power",
]

_SYMS = ["ζ", "κ", "λ", "β", "η"]
_EQS = ["=", "≈", "≅"]


def _q_int(rng: random.Random) -> tuple[str, Decimal]:
    n = rng.randint(2, 999)
    return str(n), Decimal(n)


def _q_grouped(rng: random.Random) -> tuple[str, Decimal]:
    n = rng.randint(1000, 9_999_999)
    return f"{n:,}", Decimal(n)


def _q_spacegrouped(rng: random.Random) -> tuple[str, Decimal]:
    n = rng.randint(1000, 999_999)
    s = f"{n:,}".replace(",", " ")
    return s, Decimal(n)


def _q_decimal(rng: random.Random) -> tuple[str, Decimal]:
    s = f"{rng.randint(1, 99)}.{rng.randint(0, 99):02d}"
    return s, Decimal(s)


def _q_leadpoint(rng: random.Random) -> tuple[str, Decimal]:
    s = f".{rng.randint(1, 99):02d}"
    return s, Decimal("0" + s)


def _q_signed(rng: random.Random) -> tuple[str, Decimal]:
    s = f"-{rng.randint(1, 40)}.{rng.randint(0, 9)}"
    return s, Decimal(s)


def _q_error(rng: random.Random) -> tuple[str, Decimal]:
    m = f"{rng.randint(1, 9)}.{rng.randint(100, 9999)}"
    e = f"0.{rng.randint(1, 99):03d}"
    return f"{m} ± {e}", Decimal(m)


def _q_sci_e(rng: random.Random) -> tuple[str, Decimal]:
    m = f"{rng.randint(1, 9)}.{rng.randint(0, 9)}"
    k = rng.randint(-8, 8)
    return f"{m}e{k:+d}", Decimal(m).scaleb(k)


def _q_sci_x(rng: random.Random) -> tuple[str, Decimal]:
    m = f"{rng.randint(1, 9)}.{rng.randint(0, 9)}"
    k = rng.randint(-8, 8)
    sign = "-" if k < 0 else ""
    return f"{m} × 10^{sign}{abs(k)}", Decimal(m).scaleb(k)


def _q_paren(rng: random.Random) -> tuple[str, Decimal]:
    m = f"{rng.randint(1, 9)}.{rng.randint(100, 9999)}"
    e = f"0.{rng.randint(1, 99):03d}"
    k = -rng.randint(1, 8)
    return f"({m} ± {e}) × 10^{k}", Decimal(m).scaleb(k)


_QTY_FORMS = [
    _q_int, _q_grouped, _q_spacegrouped, _q_decimal, _q_leadpoint,
    _q_signed, _q_error, _q_sci_e, _q_sci_x, _q_paren,
]


@dataclass
class _Builder:
    parts: list[str] = field(default_factory=list)
    length: int = 0
    golds: list[GoldMQ] = field(default_factory=list)

    def text(self, s: str) -> None:
        self.parts.append(s)
        self.length += len(s)

    def qty(self, rng: random.Random, form=None, unit=None) -> None:
        surface, value = (form or rng.choice(_QTY_FORMS))(rng)
        usurf, ukey, _ = unit or rng.choice(_UNITS)
        start = self.length
        self.text(f"{surface} {usurf}")
        self.golds.append(GoldMQ(value=format(value, "f"), unit_key=ukey, span=(start, self.length)))

    def build(self, prop: str | None) -> tuple[str, tuple[GoldMQ, ...], str | None]:
        return "".join(self.parts), tuple(self.golds), prop


def _theme_prefix(rng: random.Random) -> str:
    theme = rng.choice(sorted(_THEMES))
    w = rng.sample(_THEMES[theme], 2)
    return f"In the {w[0]} {w[1]} study, "


def _t_p1(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    b.text(_theme_prefix(rng))
    b.text(f"the {prop} {rng.choice(_SYMS)} {rng.choice(_EQS)} ")
    b.qty(rng)
    b.text(".")
    return b.build(prop)


def _t_p2a(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    b.text(_theme_prefix(rng))
    b.text("a ")
    b.qty(rng, form=rng.choice([_q_int, _q_decimal, _q_grouped]))
    b.text(f" {prop} was adopted.")
    return b.build(prop)


def _t_p2b(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    b.text("The fixture held ")
    b.qty(rng, form=rng.choice([_q_int, _q_decimal]))
    b.text(f" of {prop}.")
    return b.build(prop)


def _t_p3(rng: random.Random):
    b = _Builder()
    left, right = rng.sample(_PROPS, 2)
    head = left.split()[-1]
    prop = f"{head} of the {right}"
    b.text(f"The {head} of the {right} was set to ")
    b.qty(rng)
    b.text(".")
    return b.build(prop)


def _t_p4(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    verb = rng.choice(["employed was", "was recorded at", "was measured at", "remained near"])
    b.text(_theme_prefix(rng))
    b.text(f"the {prop} {verb} ")
    b.qty(rng)
    b.text(".")
    return b.build(prop)


def _t_p5(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    joiner = rng.choice(["of at least", "of about", "lower than", "of roughly", "above"])
    b.text(_theme_prefix(rng))
    b.text(f"the {prop} {joiner} ")
    b.qty(rng)
    b.text(" was confirmed.")
    return b.build(prop)


def _t_p5_paren(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    b.text(f"The measured {prop} (")
    b.qty(rng, form=rng.choice([_q_int, _q_decimal]))
    b.text(") met the requirement.")
    return b.build(f"measured {prop}")


def _t_p5_range(rng: random.Random):
    b = _Builder()
    prop = rng.choice(_PROPS)
    unit = rng.choice(_UNITS)
    b.text(f"A nominal {prop} of ")
    b.qty(rng, form=_q_decimal, unit=unit)
    b.text(" to ")
    b.qty(rng, form=_q_decimal, unit=unit)
    b.text(" was applied.")
    return b.build(f"nominal {prop}")


_PROPERTY_TEMPLATES = [_t_p1, _t_p2a, _t_p2b, _t_p3, _t_p4, _t_p5, _t_p5_paren, _t_p5_range]


def _t_distractor(rng: random.Random):
    b = _Builder()
    choice = rng.randrange(5)
    n = rng.randint(2, 90)
    if choice == 0:
        b.text(f"The study enrolled {n} participants in {rng.randint(1990, 2015)}.")
    elif choice == 1:
        b.text(f"See Section {n} for details.")
    elif choice == 2:
        b.text(f"Results from {n} trials were pooled for review.")
    elif choice == 3:
        b.text(f"Appendix {n} lists the {rng.choice(['raw', 'full'])} records.")
    else:
        b.text(f"The panel reviewed {n} reports during the audit.")
    return b.build(None)


def _t_trap(rng: random.Random):
    b = _Builder()
    choice = rng.randrange(4)
    n = rng.randint(2, 30)
    letter = rng.choice(["m", "s", "A", "K", "V", "W"])
    if choice == 0:
        b.text(f"Values in Table {n} {letter} were averaged.")
        return b.build(None)
    if choice == 1:
        b.text(f"Samples marked {n} AJmm were discarded.")
        return b.build(None)
    if choice == 2:
        b.text(f"Fitted with a {n}-A fuse.")
        return b.build(None)
    start = len(f"Fitted with a ")
    b.text(f"Fitted with a {n}-cm bracket.")
    value = Decimal(n)
    b.golds.append(GoldMQ(value=format(value, "f"), unit_key="cm", span=(start, start + len(f"{n}-cm"))))
    return b.build("bracket")


def synth_corpus(seed: int, n_sentences: int, corruption_prob: float) -> list[LabeledSentence]:
    """Reproducible labeled sentences; labels describe the pre-corruption truth.

    Each corruption transform is applied independently with probability
    ``corruption_prob``; ``transform_ids`` records every transform that was
    applied, whether or not the sentence contained a character it affects.
    """
    if not 0.0 <= corruption_prob <= 1.0:
        raise ValueError("corruption_prob must be within [0, 1]")
    rng = random.Random(seed)
    out: list[LabeledSentence] = []
    for _ in range(n_sentences):
        roll = rng.random()
        if roll < 0.60:
            template = rng.choice(_PROPERTY_TEMPLATES)
        elif roll < 0.85:
            template = _t_distractor
        else:
            template = _t_trap
        text, golds, prop = template(rng)
        applied = tuple(name for name, _ in CORRUPTIONS if rng.random() < corruption_prob)
        spans = [g.span for g in golds]
        if applied:
            text, spans = apply_corruptions(text, spans, applied)
        out.append(
            LabeledSentence(
                text=text,
                gold_mqs=tuple(
                    GoldMQ(g.value, g.unit_key, s) for g, s in zip(golds, spans)
                ),
                gold_property=normalize_property(prop) if prop else None,
                transform_ids=applied,
            )
        )
    return out


# --- the planted search-engine scenario ----------------------------------------------

_SCENARIO = {
    "total_docs": 40_000,
    "planted_docs": 153,
    "planted_unit": "U.mL^-1",
    "planted_display": "U·mL^-1",
    "value_min": "0.001",
    "value_max": "10000",
    "top_property": "penicillin",
}


def scenario_expectations() -> dict:
    return dict(_SCENARIO)


def synth_scenario_records(seed: int = 0) -> Iterator[ExtractionRecord]:
    """40,000 single-sentence documents; 153 carry the planted unit.

    The planted documents span values [0.001, 10000] exactly, name
    "penicillin" as the dominant property, and share an oncology vocabulary
    so term statistics over the filtered subset are predictable.
    """
    rng = random.Random(seed)
    total = _SCENARIO["total_docs"]
    planted = set(rng.sample(range(total), _SCENARIO["planted_docs"]))
    planted_sorted = sorted(planted)
    anchor_min, anchor_max = planted_sorted[0], planted_sorted[1]
    other_units = [u for u in _UNITS if u[1] != _SCENARIO["planted_unit"]]
    for i in range(total):
        doc_id = f"doc{i:05d}"
        if i in planted:
            if i == anchor_min:
                value = Decimal(_SCENARIO["value_min"])
            elif i == anchor_max:
                value = Decimal(_SCENARIO["value_max"])
            else:
                value = Decimal(rng.randint(2, 9_999_999)).scaleb(-3)
            prop = _SCENARIO["top_property"] if rng.random() < 0.7 else rng.choice(
                ["insulin", "lysozyme", "albumin"]
            )
            words = rng.sample(_THEMES["oncology"], 3)
            vs = format(value, "f")
            sentence = f"{prop} activity of {vs} U/mL in the {words[0]} {words[1]} {words[2]} cohort"
            yield ExtractionRecord(
                doc_id=doc_id,
                sentence_index=0,
                sentence_text=sentence,
                mqs=(
                    RecordMQ(
                        value=vs,
                        error=None,
                        unit_key=_SCENARIO["planted_unit"],
                        unit_display=_SCENARIO["planted_display"],
                        span=(sentence.index(vs), sentence.index(" U/mL") + 5),
                    ),
                ),
                properties=(
                    RecordProperty(text=prop, mq_index=0, pattern_id="P2", span=(0, len(prop))),
                ),
            )
        else:
            theme = rng.choice([t for t in sorted(_THEMES) if t != "oncology"])
            words = rng.sample(_THEMES[theme], 3)
            usurf, ukey, udisp = rng.choice(other_units)
            prop = rng.choice(_PROPS)
            value = Decimal(rng.randint(1, 99999)).scaleb(-rng.randint(0, 3))
            vs = format(value, "f")
            sentence = f"{prop} of {vs} {usurf} in the {words[0]} {words[1]} {words[2]} test"
            yield ExtractionRecord(
                doc_id=doc_id,
                sentence_index=0,
                sentence_text=sentence,
                mqs=(
                    RecordMQ(
                        value=vs,
                        error=None,
                        unit_key=ukey,
                        unit_display=udisp,
                        span=(sentence.index(vs), sentence.index(vs) + len(vs) + 1 + len(usurf)),
                    ),
                ),
                properties=(
                    RecordProperty(
                        text=normalize_property(prop), mq_index=0, pattern_id="P2", span=(0, len(prop))
                    ),
                ),
            )
