"""Linking measured quantities to the noun phrases naming what they measure.

Five syntactic patterns over POS-tagged, NP-chunked sentences are tried in a
fixed order, anchored at each measured-quantity token; the first pattern that
matches claims the quantity.  Patterns are compiled from a declarative file
so the cascade can be extended without code changes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .mqe import MeasuredQuantity
from .normalize import NormalizedText
from .postag import NPChunk, TaggedToken

__all__ = [
    "MeasuredProperty",
    "PatternError",
    "PropertyPattern",
    "builtin_patterns",
    "extract_properties",
    "load_patterns",
    "normalize_property",
]

# Each NP chunk, measured quantity, or leftover token becomes one item; the
# cascade runs as regular expressions over this one-character-per-item string.
_CLASS_CHARS = {
    "NP": "N",
    "MQ": "Q",
    "EQ": "E",
    "SYM": "S",
    "VP": "V",
    "IN": "I",
    "DT": "D",
    "TO": "T",
    "RB": "R",
    "JJ": "J",
    "CC": "C",
    "CD": "c",
    "LPAREN": "(",
    "RPAREN": ")",
}

_TAG_TO_CHAR = {
    "IN": "I", "DT": "D", "TO": "T", "CC": "C", "CD": "c",
    "RB": "R", "RBR": "R", "RBS": "R",
    "JJ": "J", "JJR": "J", "JJS": "J",
    "VB": "V", "VBD": "V", "VBG": "V", "VBN": "V", "VBP": "V", "VBZ": "V", "MD": "V",
    "EQ": "E", "SYM": "S",
    "(": "(", ")": ")", ",": ",",
}

_MAX_GAP_TOKENS = 12  # tokens allowed between the property NP and the quantity


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PropertyPattern:
    id: str
    elements: tuple[str, ...]
    regex: re.Pattern[str]  # named groups: 'mq' anchor, 't' property target


@dataclass(frozen=True)
class MeasuredProperty:
    property_text: str
    np_span: tuple[int, int]  # raw-text offsets
    mq_index: int
    pattern_id: str


# --- pattern compilation --------------------------------------------------------

_PTOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*|\{\d+,\d+\}|[<>()|?*+]")
_QUANTS = {"?", "*", "+"}


def _compile_pattern(pid: str, spec: str) -> re.Pattern[str]:
    toks = _PTOKEN_RE.findall(spec)
    if _PTOKEN_RE.sub("", spec).strip():
        raise PatternError(f"{pid}: unparsable characters in {spec!r}")
    pos = 0
    state = {"mq": False, "target": False}

    def peek() -> str | None:
        return toks[pos] if pos < len(toks) else None

    def take_quant() -> str:
        nonlocal pos
        t = peek()
        if t in _QUANTS or (t is not None and t.startswith("{")):
            pos += 1
            return t
        return ""

    def parse_atom() -> str:
        nonlocal pos
        t = peek()
        if t is None:
            raise PatternError(f"{pid}: unexpected end of pattern")
        if t == "<":
            if state["target"]:
                raise PatternError(f"{pid}: more than one <...> target")
            state["target"] = True
            pos += 1
            body = parse_seq(stop={">"})
            if peek() != ">":
                raise PatternError(f"{pid}: unclosed <...>")
            pos += 1
            return f"(?P<t>{body})"
        if t == "(":
            pos += 1
            alts = [parse_seq(stop={"|", ")"})]
            while peek() == "|":
                pos += 1
                alts.append(parse_seq(stop={"|", ")"}))
            if peek() != ")":
                raise PatternError(f"{pid}: unclosed group")
            pos += 1
            if len(alts) > 1 and all(len(a) == 1 and a.isalpha() for a in alts):
                return "[{}]".format("".join(alts))
            return "(?:{})".format("|".join(alts))
        if t == "MQ":
            if state["mq"]:
                raise PatternError(f"{pid}: more than one MQ element")
            state["mq"] = True
            pos += 1
            return "(?P<mq>Q)"
        if t in _CLASS_CHARS:
            pos += 1
            return re.escape(_CLASS_CHARS[t])
        raise PatternError(f"{pid}: unknown element {t!r}")

    def parse_seq(stop: set[str]) -> str:
        parts = []
        while peek() is not None and peek() not in stop:
            atom = parse_atom()
            parts.append(atom + take_quant())
        return "".join(parts)

    body = parse_seq(stop=set())
    if not state["mq"]:
        raise PatternError(f"{pid}: pattern has no MQ element")
    if not state["target"]:
        raise PatternError(f"{pid}: no <...> target marked")
    return re.compile(body)


def parse_patterns(lines: Iterable[str]) -> list[PropertyPattern]:
    patterns: list[PropertyPattern] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        pid, sep, body = line.partition(":")
        if not sep:
            raise PatternError(f"line {lineno}: expected 'ID: elements'")
        pid = pid.strip()
        spec = body.strip()
        patterns.append(
            PropertyPattern(
                id=pid,
                elements=tuple(spec.split()),
                regex=_compile_pattern(pid, spec),
            )
        )
    return patterns


def load_patterns(path: str | Path) -> list[PropertyPattern]:
    return parse_patterns(Path(path).read_text("utf-8").splitlines())


@lru_cache(maxsize=1)
def builtin_patterns() -> tuple[PropertyPattern, ...]:
    text = resources.files("mqmine").joinpath("data/patterns.txt").read_text("utf-8")
    return tuple(parse_patterns(text.splitlines()))


# --- matching -------------------------------------------------------------------


@dataclass(frozen=True)
class _Item:
    char: str
    tok_start: int
    tok_end: int
    mq_index: int | None = None


def _build_items(tagged: Sequence[TaggedToken], chunks: Sequence[NPChunk]) -> list[_Item]:
    items: list[_Item] = []
    chunk_at = {c.start: c for c in chunks}
    i = 0
    while i < len(tagged):
        c = chunk_at.get(i)
        if c is not None:
            items.append(_Item("N", c.start, c.end))
            i = c.end
            continue
        tt = tagged[i]
        if tt.tag == "MQ":
            items.append(_Item("Q", i, i + 1, mq_index=tt.token.mq_index))
        else:
            items.append(_Item(_TAG_TO_CHAR.get(tt.tag, "O"), i, i + 1))
        i += 1
    return items


def normalize_property(text: str) -> str:
    """Lowercase, collapse whitespace, drop a leading determiner."""
    words = text.lower().split()
    if len(words) > 1 and words[0] in ("a", "an", "the", "this", "that", "these", "those"):
        words = words[1:]
    return " ".join(words)


def extract_properties(
    tagged: Sequence[TaggedToken],
    chunks: Sequence[NPChunk],
    mqs: Sequence[MeasuredQuantity],
    nt: NormalizedText,
    patterns: Sequence[PropertyPattern] | None = None,
) -> list[MeasuredProperty]:
    """Run the cascade; at most one property per measured quantity.

    Scanning leftward from an anchor, commas and other measured quantities
    are transparent, so "...density of 1.3 A/cm² to 0.03 A/cm²" binds both
    quantities to the same phrase and "of about, or above 10 kV/cm" still
    matches.  Nothing is transparent to the right of the anchor.
    """
    if patterns is None:
        patterns = builtin_patterns()
    items = _build_items(tagged, chunks)
    out: list[MeasuredProperty] = []
    for ai, anchor in enumerate(items):
        if anchor.char != "Q" or anchor.mq_index is None:
            continue
        prop = _match_anchor(tagged, items, ai, patterns, nt)
        if prop is not None:
            out.append(prop)
    return out


def _match_anchor(
    tagged: Sequence[TaggedToken],
    items: list[_Item],
    ai: int,
    patterns: Sequence[PropertyPattern],
    nt: NormalizedText,
) -> MeasuredProperty | None:
    anchor = items[ai]
    pre_items = [it for it in items[:ai] if it.char not in (",", "Q")]
    post_items = items[ai + 1 :]
    side_items = pre_items + [anchor] + post_items
    combined = "".join(it.char for it in side_items)
    apos = len(pre_items)
    for pattern in patterns:
        got = None
        for s in range(apos, -1, -1):  # rightmost start first = nearest NP
            m = pattern.regex.match(combined, s)
            if m is None or m.start("mq") != apos or m.group("t") is None:
                continue
            lo, hi = m.span("t")
            first, last = side_items[lo], side_items[hi - 1]
            if lo > apos:
                gap = first.tok_start - anchor.tok_end
            else:
                gap = anchor.tok_start - last.tok_end
            if gap > _MAX_GAP_TOKENS:
                continue
            got = (lo, hi)
            break
        if got is None:
            continue
        lo, hi = got
        t0 = side_items[lo].tok_start
        t1 = side_items[hi - 1].tok_end
        if tagged[t0].tag == "DT" and t1 - t0 > 1:
            t0 += 1
        text = " ".join(tt.token.surface for tt in tagged[t0:t1])
        norm_span = (tagged[t0].token.span[0], tagged[t1 - 1].token.span[1])
        return MeasuredProperty(
            property_text=text,
            np_span=nt.original_span(norm_span),
            mq_index=anchor.mq_index,
            pattern_id=pattern.id,
        )
    return None
