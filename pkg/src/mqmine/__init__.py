"""mqmine: measured-quantity extraction and faceted numeric search.

Extracts measured quantities (value + unit) and the properties they describe
from noisy plain text, and serves the extractions through a search engine
with unit, value-range, and property facets.
"""

from .corpus import (
    Document,
    ExtractionRecord,
    LabeledSentence,
    Pipeline,
    read_corpus,
    run_many,
    run_pipeline,
    synth_corpus,
)
from .index import Index, Query, SearchResult, build, load, persist, search
from .mpe import MeasuredProperty, builtin_patterns, extract_properties, normalize_property
from .mqe import MeasuredQuantity, extract, post_filter, segment_sentences
from .normalize import NormalizedText, normalize_chars, original_span
from .postag import Tagger, chunk_np, default_tagger, tokenize
from .quantity import QuantityLiteral, StandardizedValue, parse_error, parse_number, parse_sci, standardize
from .units import CompoundUnit, UnitCatalog, UnitTerm, canonical_string, default_catalog, load_catalog, match_unit

__version__ = "0.1.0"

__all__ = [
    "CompoundUnit",
    "Document",
    "ExtractionRecord",
    "Index",
    "LabeledSentence",
    "MeasuredProperty",
    "MeasuredQuantity",
    "NormalizedText",
    "Pipeline",
    "QuantityLiteral",
    "Query",
    "SearchResult",
    "StandardizedValue",
    "Tagger",
    "UnitCatalog",
    "UnitTerm",
    "build",
    "builtin_patterns",
    "canonical_string",
    "chunk_np",
    "default_catalog",
    "default_tagger",
    "extract",
    "extract_properties",
    "load",
    "load_catalog",
    "match_unit",
    "normalize_chars",
    "normalize_property",
    "original_span",
    "parse_error",
    "parse_number",
    "parse_sci",
    "persist",
    "post_filter",
    "read_corpus",
    "run_many",
    "run_pipeline",
    "search",
    "segment_sentences",
    "standardize",
    "synth_corpus",
    "tokenize",
]
