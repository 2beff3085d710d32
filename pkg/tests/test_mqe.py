from decimal import Decimal

from mqmine.corpus import apply_corruptions
from mqmine.mqe import extract, extract_with_rejections, segment_sentences
from mqmine.normalize import normalize_chars

from goldens import GOLDEN_SNIPPETS


def run(text, catalog):
    nt = normalize_chars(text)
    mqs, rejections = [], []
    for i, span in enumerate(segment_sentences(nt)):
        m, r = extract_with_rejections(nt, span, i, catalog)
        mqs += m
        rejections += r
    return mqs, rejections


# --- segmentation -------------------------------------------------------------


def test_segment_terminal_period_plus_capital():
    nt = normalize_chars("It was 3.5 m. Next came B.")
    assert len(segment_sentences(nt)) == 2


def test_segment_decimal_point_not_a_boundary():
    nt = normalize_chars("value of 3.5 m was used")
    assert len(segment_sentences(nt)) == 1


def test_segment_empty():
    assert segment_sentences(normalize_chars("")) == []


def test_segment_initial_is_not_a_boundary():
    nt = normalize_chars("Dr B. Smith measured it. Twice.")
    spans = segment_sentences(nt)
    texts = [nt.text[a:b] for a, b in spans]
    assert texts == ["Dr B. Smith measured it.", "Twice."]


def test_segment_blank_line():
    nt = normalize_chars("first block\n\nsecond block")
    assert len(segment_sentences(nt)) == 2


# --- extraction ---------------------------------------------------------------


def test_golden_five_tuples(catalog):
    for g in GOLDEN_SNIPPETS:
        mqs, _ = run(g["text"], catalog)
        got = [m.as_tuple() for m in mqs]
        assert got == g["mqs"], f"{g['text']!r}: {got}"


def test_no_unit_no_extraction(catalog):
    assert run("see Section 5", catalog)[0] == []


def test_standardized_values(catalog):
    mqs, _ = run("ζ = (1.3999 ± 0.003) × 10-5 s-2m-1", catalog)
    assert mqs[0].standardized.plain == "0.000013999"
    mqs, _ = run("is 9.3 × 107 miles", catalog)
    assert mqs[0].standardized.plain == "93000000"


def test_spans_are_raw_offsets(catalog):
    moji = "–".encode("utf-8").decode("cp1252")
    raw = f"a value of 3 m{moji}1 here"
    nt = normalize_chars(raw)
    mqs = extract(nt, segment_sentences(nt)[0], 0, catalog)
    assert len(mqs) == 1
    a, b = mqs[0].span
    assert raw[a:b] == f"3 m{moji}1"


def test_extractions_non_overlapping_and_sorted(catalog):
    mqs, _ = run("we used 3 m and 4.5 s and 6 kg", catalog)
    assert [m.as_tuple()[1] for m in mqs] == ["3", "4.5", "6"]
    for a, b in zip(mqs, mqs[1:]):
        assert a.span[1] <= b.span[0]


def test_determinism(catalog):
    a = run("we used 3 m and 4.5 s", catalog)[0]
    b = run("we used 3 m and 4.5 s", catalog)[0]
    assert [m.as_tuple() for m in a] == [m.as_tuple() for m in b]


def test_range_yields_two_extractions(catalog):
    mqs, _ = run("a nominal current density of 1.3 A/cm2 to 0.03 A/cm2", catalog)
    assert len(mqs) == 2


# --- post-processing rejections --------------------------------------------------


def test_reject_context_blocklist(catalog):
    mqs, rej = run("in Table 3 m was", catalog)
    assert mqs == [] and rej[0].rule_id == "context"


def test_reject_repeated_single_letter_units(catalog):
    mqs, rej = run("3 AJmm", catalog)
    assert mqs == [] and rej[0].rule_id == "repetition"


def test_dash_rule(catalog):
    mqs, _ = run("a 10-cm rod", catalog)
    assert [m.as_tuple() for m in mqs] == [(None, "10", None, None, "cm")]
    mqs, rej = run("a 10-A rod", catalog)
    assert mqs == [] and rej[0].rule_id == "dash"


def test_context_blocklist_case_insensitive(catalog):
    for lead in ["table", "TABLE", "Figure", "fig.", "Eq.", "p."]:
        mqs, rej = run(f"in {lead} 3 m was", catalog)
        assert mqs == [] and rej and rej[0].rule_id == "context", lead


def test_components_reparse_on_extraction_span(catalog):
    # every extraction's pieces re-verify under the component parsers
    from mqmine.quantity import parse_number
    from mqmine.units import canonical_string, match_unit

    for g in GOLDEN_SNIPPETS:
        nt = normalize_chars(g["text"])
        for span in segment_sentences(nt):
            for mq in extract(nt, span, 0, catalog):
                a, b = mq.norm_span
                seg = nt.text[a:b].lstrip("(")
                got = parse_number(seg, 0)
                assert got is not None
                assert abs(got[0]) == mq.literal.mantissa
                assert mq.unit_key == canonical_string(mq.unit)


def test_corruption_invariance_on_goldens(catalog):
    transforms = ["endash", "mojibake", "caretloss", "musub", "pm"]
    for g in GOLDEN_SNIPPETS:
        base, _ = run(g["text"], catalog)
        want = sorted((m.standardized.plain, m.unit_key) for m in base)
        for t in transforms:
            corrupted, _ = apply_corruptions(g["text"], transforms=[t])
            got, _ = run(corrupted, catalog)
            have = sorted((m.standardized.plain, m.unit_key) for m in got)
            assert have == want, f"{t} broke {g['text']!r}: {have}"


def test_extracted_units_exist_in_catalog(catalog):
    for g in GOLDEN_SNIPPETS:
        mqs, _ = run(g["text"], catalog)
        for mq in mqs:
            for term in mq.unit.terms:
                assert term.symbol in catalog


def test_truncated_mojibake_unit_recovers(catalog):
    # the corrupted exponent form with the dash's third byte lost
    mqs, _ = run("a span of 5 mâ€1 was found", catalog)
    assert [m.as_tuple() for m in mqs] == [(None, "5", None, None, "m^-1")]
