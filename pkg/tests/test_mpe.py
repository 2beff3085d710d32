import pytest

from mqmine.mpe import (
    PatternError,
    builtin_patterns,
    extract_properties,
    normalize_property,
    parse_patterns,
)
from mqmine.mqe import extract, segment_sentences
from mqmine.normalize import normalize_chars
from mqmine.postag import chunk_np, tokenize

from goldens import GOLDEN_SNIPPETS


def run(text, catalog, tagger, patterns=None):
    nt = normalize_chars(text)
    span = segment_sentences(nt)[0]
    mqs = extract(nt, span, 0, catalog)
    tagged = tagger.tag(tokenize(nt, span, mqs))
    chunks = chunk_np(tagged, mqs)
    return mqs, extract_properties(tagged, chunks, mqs, nt, patterns)


# --- pattern table -------------------------------------------------------------


def test_builtin_patterns_are_the_five_rows():
    pats = builtin_patterns()
    assert [p.id for p in pats] == ["P1", "P2", "P3", "P4", "P5"]
    assert pats[0].regex.pattern == "(?P<t>N)S{0,2}E(?P<mq>Q)"
    assert pats[1].regex.pattern == "(?P<mq>Q)I?(?P<t>N)"
    assert pats[2].regex.pattern == "(?P<t>NID?N)V+[TIRJ]*(?P<mq>Q)"
    assert pats[3].regex.pattern == "(?P<t>N)(?:ID?N)*V+[ITRJ]*(?P<mq>Q)"
    assert pats[4].regex.pattern == "(?P<t>N)[CITRJ]*\\(?(?P<mq>Q)\\)?"


def test_parse_patterns_rejects_bad_specs():
    with pytest.raises(PatternError):
        parse_patterns(["P9: <NP> EQ"])  # no MQ
    with pytest.raises(PatternError):
        parse_patterns(["P9: NP MQ"])  # no target
    with pytest.raises(PatternError):
        parse_patterns(["P9: <NP> BOGUS MQ"])
    with pytest.raises(PatternError):
        parse_patterns(["P9 <NP> MQ"])  # missing colon


def test_custom_pattern_file_extends_cascade(catalog, tagger):
    pats = parse_patterns(["PX: MQ IN DT? <NP>"])
    mqs, props = run("3 m of the sample", catalog, tagger, patterns=pats)
    assert props and props[0].pattern_id == "PX"
    assert normalize_property(props[0].property_text) == "sample"


# --- golden bindings -------------------------------------------------------------


def test_golden_red_blue_bindings(catalog, tagger):
    for g in GOLDEN_SNIPPETS:
        mqs, props = run(g["text"], catalog, tagger)
        if g["property"] is None:
            continue
        want_n = g.get("property_count", 1)
        assert len(props) == want_n, f"{g['text']!r}: {props}"
        for p in props:
            assert normalize_property(p.property_text) == g["property"], g["text"]
            assert p.pattern_id == g["pattern"], g["text"]


def test_at_most_one_property_per_mq(catalog, tagger):
    for g in GOLDEN_SNIPPETS:
        mqs, props = run(g["text"], catalog, tagger)
        idxs = [p.mq_index for p in props]
        assert len(idxs) == len(set(idxs))
        assert all(0 <= i < len(mqs) for i in idxs)


def test_cascade_order_p1_beats_p5(catalog, tagger):
    # both P1 and P5 shapes are present; sequential execution must pick P1
    mqs, props = run("panel strength ζ = 9 ksi", catalog, tagger)
    assert props[0].pattern_id == "P1"


def test_multi_mq_shares_property(catalog, tagger):
    mqs, props = run("a nominal current density of 1.3 A/cm2 to 0.03 A/cm2", catalog, tagger)
    assert len(mqs) == 2 and len(props) == 2
    assert {p.mq_index for p in props} == {0, 1}
    assert len({normalize_property(p.property_text) for p in props}) == 1


def test_no_nearby_np_no_property(catalog, tagger):
    mqs, props = run("= 3 m", catalog, tagger)
    assert len(mqs) == 1 and props == []


def test_window_bounds_long_range_links(catalog, tagger):
    filler = " ".join(["then"] * 13)  # RB tokens, classwise admissible
    mqs, props = run(f"panel strength of {filler} 9 ksi", catalog, tagger)
    assert props == []


def test_np_span_is_raw_offsets(catalog, tagger):
    text = "panel strength was recorded at 9 ksi."
    mqs, props = run(text, catalog, tagger)
    a, b = props[0].np_span
    assert text[a:b] == "panel strength"


# --- normalize_property -----------------------------------------------------------


def test_normalize_property_casefold_collapse():
    assert normalize_property("Pixel  Pitch") == "pixel pitch"


def test_normalize_property_strips_determiner():
    assert normalize_property("the panel strength") == "panel strength"


def test_normalize_property_plain_word():
    assert normalize_property("penicillin") == "penicillin"
