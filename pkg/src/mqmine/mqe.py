"""Measured-quantity extraction over normalized sentences.

A measured quantity is assembled left to right from a number, an optional
'±' error, an optional scientific-notation factor, and a required unit, then
passed through rejection rules that weed out table/figure debris ("Table 3
m"), runs of bare single-letter units ("3 AJmm"), and dashed single-letter
units ("10-A" but not "10-cm").
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .normalize import NormalizedText
from .quantity import (
    ExponentRangeError,
    QuantityLiteral,
    StandardizedValue,
    parse_error,
    parse_number,
    parse_sci,
    standardize,
)
from .units import CompoundUnit, UnitCatalog, UnitMatch, canonical_string, default_catalog, display_string, match_unit

__all__ = [
    "DEFAULT_CONTEXT_BLOCKLIST",
    "ExtractorConfig",
    "MeasuredQuantity",
    "RejectionReason",
    "extract",
    "extract_with_rejections",
    "post_filter",
    "segment_sentences",
]

DEFAULT_CONTEXT_BLOCKLIST = frozenset(
    ["table", "figure", "fig", "section", "eq", "equation", "ref", "page", "p"]
)


@dataclass(frozen=True)
class ExtractorConfig:
    context_blocklist: frozenset[str] = DEFAULT_CONTEXT_BLOCKLIST
    max_unit_gap_spaces: int = 2


@dataclass(frozen=True)
class MeasuredQuantity:
    """One extraction: the 5-tuple pieces plus where they came from."""

    literal: QuantityLiteral
    unit: CompoundUnit
    standardized: StandardizedValue
    span: tuple[int, int]  # raw-text offsets
    sentence_index: int
    norm_span: tuple[int, int] = field(repr=False)  # normalized-text offsets
    unit_key: str = ""
    unit_display: str = ""

    def as_tuple(self) -> tuple[str | None, str, str | None, int | None, str]:
        """(sign, number, error, scientific notation, units) view."""
        lit = self.literal
        return (
            lit.sign,
            str(lit.mantissa),
            str(lit.error) if lit.error is not None else None,
            lit.exponent,
            self.unit_key,
        )


@dataclass(frozen=True)
class RejectionReason:
    rule_id: str  # 'context' | 'repetition' | 'dash'
    detail: str


# --- sentence segmentation ----------------------------------------------------

_BREAK_RE = re.compile(r"[.!?]+[ \t\n]+(?=[A-Z0-9])|\n[ \t]*\n+")
_WORD_TAIL_RE = re.compile(r"[A-Za-z]+$")

# Periods after these never terminate a sentence ("Eq. 3", "p. 12", ...).
_ABBREVIATIONS = frozenset(
    ["fig", "eq", "ref", "sec", "no", "vol", "ch", "p", "pp", "dr", "mr",
     "mrs", "ms", "prof", "etc", "vs", "cf", "al", "approx"]
)


def segment_sentences(nt: NormalizedText | str) -> list[tuple[int, int]]:
    """Sentence spans over normalized text.

    Breaks after '.', '!', '?' followed by whitespace and an uppercase letter
    or digit, and at blank lines.  A period after a lone uppercase letter
    preceded by whitespace (an initial) or after a known short abbreviation
    does not terminate a sentence.
    """
    text = nt.text if isinstance(nt, NormalizedText) else nt
    spans: list[tuple[int, int]] = []
    start = 0
    for m in _BREAK_RE.finditer(text):
        if m.group(0)[0] == ".":
            p = m.start()
            if (
                p >= 1
                and text[p - 1].isupper()
                and (p < 2 or text[p - 2] in " \t\n(\"'")
            ):
                continue  # single-letter initial
            w = _WORD_TAIL_RE.search(text, max(0, p - 8), p)
            if w and w.group(0).lower() in _ABBREVIATIONS:
                continue
            cut = p + 1  # keep the terminator with its sentence
        else:
            cut = m.start()
        spans.append((start, cut))
        start = m.end()
    spans.append((start, len(text)))
    out = []
    for s, e in spans:
        while s < e and text[s].isspace():
            s += 1
        while e > s and text[e - 1].isspace():
            e -= 1
        if s < e:
            out.append((s, e))
    return out


# --- assembly -----------------------------------------------------------------

_CANDIDATE_RE = re.compile(r"[+-]?\.?\d")
_CLOSE_PAREN_RE = re.compile(r"[ ]{0,2}\)")
_WORD_BEFORE_RE = re.compile(r"([A-Za-z]+)\.?[ (\[]{0,3}$")


@lru_cache(maxsize=8)
def _gap_re(max_spaces: int) -> re.Pattern[str]:
    return re.compile(rf"[ ]{{1,{max_spaces}}}|-")


@dataclass(frozen=True)
class _Candidate:
    """A fully assembled extraction plus the context the filters need."""

    mq: MeasuredQuantity
    unit_match: UnitMatch
    dash_gap: bool
    preceding: str  # sentence text before the match


def post_filter(cand: _Candidate, config: ExtractorConfig | None = None) -> RejectionReason | None:
    """Apply the rejection rules; None means the candidate survives."""
    config = config or ExtractorConfig()
    m = _WORD_BEFORE_RE.search(cand.preceding)
    if m and m.group(1).lower() in config.context_blocklist:
        return RejectionReason("context", f"preceded by {m.group(1)!r}")
    metas = cand.unit_match.metas
    for prev, cur in zip(metas, metas[1:]):
        if prev.bare_single and cur.bare_single and cur.connector == "":
            return RejectionReason(
                "repetition",
                f"adjacent bare single-letter units {prev.surface!r}{cur.surface!r}",
            )
    if cand.dash_gap and len(metas) == 1 and len(metas[0].surface) == 1:
        return RejectionReason("dash", f"dash before single-letter unit {metas[0].surface!r}")
    return None


def extract(
    nt: NormalizedText,
    sentence_span: tuple[int, int],
    sentence_index: int = 0,
    catalog: UnitCatalog | None = None,
    config: ExtractorConfig | None = None,
) -> list[MeasuredQuantity]:
    mqs, _ = extract_with_rejections(nt, sentence_span, sentence_index, catalog, config)
    return mqs


def extract_with_rejections(
    nt: NormalizedText,
    sentence_span: tuple[int, int],
    sentence_index: int = 0,
    catalog: UnitCatalog | None = None,
    config: ExtractorConfig | None = None,
) -> tuple[list[MeasuredQuantity], list[RejectionReason]]:
    """Scan one sentence; returns surviving extractions and rejection events.

    Matches are non-overlapping and leftmost-longest; a candidate without a
    unit is not a measured quantity at all.
    """
    if catalog is None:
        catalog = default_catalog()
    config = config or ExtractorConfig()
    s, e = sentence_span
    sent = nt.text[s:e]
    out: list[MeasuredQuantity] = []
    rejections: list[RejectionReason] = []
    pos = 0
    while pos < len(sent):
        m = _CANDIDATE_RE.search(sent, pos)
        if m is None:
            break
        c0 = m.start()
        if c0 > 0 and sent[c0 - 1].isalnum():
            pos = c0 + 1
            continue
        got = parse_number(sent, c0)
        if got is None:
            pos = c0 + 1
            continue
        number, (n0, n1) = got
        cur = n1
        err = parse_error(sent, cur)
        error = None
        if err is not None:
            error, (_, cur) = err
        closed_paren = False
        if error is not None:
            pm = _CLOSE_PAREN_RE.match(sent, cur)
            if pm:
                closed_paren = True
                cur = pm.end()
        sci = parse_sci(sent, cur)
        exponent = None
        if sci is not None:
            exponent, (_, cur) = sci
        # Unit may sit a bounded number of spaces away, or be joined by a dash.
        dash_gap = False
        upos = cur
        gm = _gap_re(config.max_unit_gap_spaces).match(sent, cur)
        if gm:
            dash_gap = gm.group(0) == "-"
            upos = gm.end()
        unit_match = match_unit(sent, upos, catalog) if upos < len(sent) else None
        if unit_match is None:
            pos = max(n1, c0 + 1)
            continue
        span_start = n0
        if closed_paren and n0 > 0 and sent[n0 - 1] == "(":
            span_start = n0 - 1
        span_end = unit_match.span[1]
        sign = sent[n0] if sent[n0] in "+-" else None
        literal = QuantityLiteral(
            sign=sign,
            mantissa=abs(number),
            error=error,
            exponent=exponent,
        )
        try:
            std = standardize(literal)
        except ExponentRangeError:
            pos = span_end
            continue
        norm_span = (s + span_start, s + span_end)
        mq = MeasuredQuantity(
            literal=literal,
            unit=unit_match.unit,
            standardized=std,
            span=nt.original_span(norm_span),
            sentence_index=sentence_index,
            norm_span=norm_span,
            unit_key=canonical_string(unit_match.unit),
            unit_display=display_string(unit_match.unit),
        )
        cand = _Candidate(mq, unit_match, dash_gap, sent[:n0])
        reason = post_filter(cand, config)
        if reason is None:
            out.append(mq)
        else:
            rejections.append(reason)
        pos = span_end
    return out, rejections
