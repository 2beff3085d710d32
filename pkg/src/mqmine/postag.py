"""Brill-style part-of-speech tagging and noun-phrase chunking.

Tokens get an initial tag from a packaged lexicon (first listed tag wins,
unknown words fall back to suffix heuristics), then an ordered list of
contextual transformation rules is applied once.  Measured quantities are
collapsed to placeholder tokens before tagging so the property patterns can
treat them as single terminals.
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

__all__ = [
    "NPChunk",
    "TAG_INVENTORY",
    "Tagger",
    "TaggedToken",
    "Token",
    "TransformationRule",
    "chunk_np",
    "default_tagger",
    "tokenize",
]

TAG_INVENTORY = frozenset(
    """NN NNS NNP NNPS JJ JJR JJS RB RBR RBS VB VBD VBG VBN VBP VBZ MD
       IN DT TO CC CD PRP PRP$ WDT WP EX POS UH FW PDT RP WRB
       MQ EQ SYM ( ) , . : '' ``""".split()
)

_NOUN_TAGS = frozenset(["NN", "NNS", "NNP", "NNPS"])
_PUNCT_TAGS = {"(": "(", ")": ")", ",": ",", ".": ".", ";": ":", ":": ":"}


@dataclass(frozen=True)
class Token:
    surface: str
    kind: str  # 'word' | 'number' | 'punct' | 'mq' | 'symbol'
    span: tuple[int, int]  # normalized-text offsets
    mq_index: int | None = None
    is_eq: bool = False


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str


@dataclass(frozen=True)
class NPChunk:
    start: int  # token index, inclusive
    end: int  # token index, exclusive
    head: int  # index of the last noun token
    property_text: str


# --- tokenization -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"[A-Za-z](?:[A-Za-z0-9'’-]*[A-Za-z0-9])?"  # words, incl. hyphenated
    r"|\d+(?:\.\d+)?"  # bare numbers
    r"|[^\sA-Za-z0-9]"  # everything else, one char at a time
)

_ASCII_PUNCT = set(".,;:()[]{}\"'`!?%/\\&@#$_~^<>|+*-")


def tokenize(
    nt: NormalizedText,
    sentence_span: tuple[int, int],
    mqs: Sequence[MeasuredQuantity] = (),
) -> list[Token]:
    """Split a sentence into tokens, collapsing each extraction to one token.

    One- or two-character non-ASCII symbols (Greek letters, '≈', ...) become
    symbol tokens; '=' and its lookalikes are flagged equality-class.
    """
    s, e = sentence_span
    text = nt.text
    spans = sorted(mq.norm_span for mq in mqs)
    for (a1, b1), (a2, b2) in zip(spans, spans[1:]):
        if a2 < b1:
            raise ValueError("overlapping measured-quantity spans")
    mq_at = {mq.norm_span[0]: (i, mq) for i, mq in enumerate(mqs)}
    tokens: list[Token] = []
    pos = s

    def _segment(a: int, b: int) -> None:
        for m in _TOKEN_RE.finditer(text, a, b):
            surface = m.group(0)
            ts, te = m.span()
            if surface[0].isalpha() and surface[0].isascii():
                tokens.append(Token(surface, "word", (ts, te)))
            elif surface[0].isdigit():
                tokens.append(Token(surface, "number", (ts, te)))
            elif nt.is_eq(ts):
                tokens.append(Token(surface, "symbol", (ts, te), is_eq=True))
            elif surface in _ASCII_PUNCT:
                tokens.append(Token(surface, "punct", (ts, te)))
            else:
                # join at most two adjacent symbol characters ("ζ′")
                prev = tokens[-1] if tokens else None
                if (
                    prev is not None
                    and prev.kind == "symbol"
                    and not prev.is_eq
                    and len(prev.surface) == 1
                    and prev.span[1] == ts
                ):
                    tokens[-1] = Token(prev.surface + surface, "symbol", (prev.span[0], te))
                else:
                    tokens.append(Token(surface, "symbol", (ts, te)))

    for a, b in spans:
        _segment(pos, a)
        idx, mq = mq_at[a]
        tokens.append(Token(text[a:b], "mq", (a, b), mq_index=idx))
        pos = b
    _segment(pos, e)

    # Reattach abbreviation periods: "freq. of" stays one token.
    merged: list[Token] = []
    i = 0
    while i < len(tokens):
        t = tokens[i]
        if (
            t.kind == "word"
            and i + 1 < len(tokens)
            and tokens[i + 1].surface == "."
            and tokens[i + 1].span[0] == t.span[1]
            and i + 2 < len(tokens)
            and tokens[i + 2].kind == "word"
            and tokens[i + 2].surface[0].islower()
        ):
            merged.append(Token(t.surface + ".", "word", (t.span[0], tokens[i + 1].span[1])))
            i += 2
            continue
        merged.append(t)
        i += 1
    return merged


# --- tagging ------------------------------------------------------------------

_PREDICATES = frozenset(
    ["PREVTAG", "NEXTTAG", "PREV1OR2TAG", "NEXT1OR2TAG", "PREVWORD", "NEXTWORD", "SURROUNDTAG"]
)


@dataclass(frozen=True)
class TransformationRule:
    from_tag: str
    to_tag: str
    predicate: str
    args: tuple[str, ...]

    def applies(self, tags: list[str], words: list[str], i: int) -> bool:
        p = self.predicate
        if p == "PREVTAG":
            return i > 0 and tags[i - 1] == self.args[0]
        if p == "NEXTTAG":
            return i + 1 < len(tags) and tags[i + 1] == self.args[0]
        if p == "PREV1OR2TAG":
            return (i > 0 and tags[i - 1] == self.args[0]) or (i > 1 and tags[i - 2] == self.args[0])
        if p == "NEXT1OR2TAG":
            return (i + 1 < len(tags) and tags[i + 1] == self.args[0]) or (
                i + 2 < len(tags) and tags[i + 2] == self.args[0]
            )
        if p == "PREVWORD":
            return i > 0 and words[i - 1].lower() == self.args[0].lower()
        if p == "NEXTWORD":
            return i + 1 < len(words) and words[i + 1].lower() == self.args[0].lower()
        if p == "SURROUNDTAG":
            return (
                i > 0
                and i + 1 < len(tags)
                and tags[i - 1] == self.args[0]
                and tags[i + 1] == self.args[1]
            )
        raise AssertionError(p)


def parse_rules(lines: Iterable[str]) -> list[TransformationRule]:
    rules = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 4 or parts[2] != "WHEN" or parts[3] not in _PREDICATES:
            raise ValueError(f"rule line {lineno}: expected 'FROM TO WHEN <predicate> <args>'")
        rules.append(TransformationRule(parts[0], parts[1], parts[3], tuple(parts[4:])))
    return rules


def parse_lexicon(lines: Iterable[str]) -> dict[str, tuple[str, ...]]:
    lex: dict[str, tuple[str, ...]] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            word, tags = line.split("\t")
        except ValueError as exc:
            raise ValueError(f"lexicon line {lineno}: expected 'word TAB tags'") from exc
        lex[word] = tuple(t.strip() for t in tags.split(","))
    return lex


class Tagger:
    def __init__(self, lexicon: dict[str, tuple[str, ...]], rules: list[TransformationRule]):
        self.lexicon = lexicon
        self.rules = rules

    @classmethod
    def from_files(cls, lexicon_path: str | Path, rules_path: str | Path) -> "Tagger":
        lex = parse_lexicon(Path(lexicon_path).read_text("utf-8").splitlines())
        rules = parse_rules(Path(rules_path).read_text("utf-8").splitlines())
        return cls(lex, rules)

    def _initial(self, token: Token, index: int) -> str:
        if token.kind == "mq":
            return "MQ"
        if token.kind == "symbol":
            return "EQ" if token.is_eq else "SYM"
        if token.kind == "number":
            return "CD"
        if token.kind == "punct":
            return _PUNCT_TAGS.get(token.surface, "SYM")
        w = token.surface
        tags = self.lexicon.get(w) or self.lexicon.get(w.lower())
        if tags:
            return tags[0]
        return self._suffix_tag(w, index)

    @staticmethod
    def _suffix_tag(w: str, index: int) -> str:
        if len(w) > 3 and w.endswith("ly"):
            return "RB"
        if len(w) > 4 and w.endswith("ing"):
            return "VBG"
        if len(w) > 3 and w.endswith("ed"):
            return "VBN"
        if len(w) > 3 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
            return "NNS"
        if index > 0 and w[0].isupper():
            return "NNP"
        return "NN"

    def tag(self, tokens: Sequence[Token]) -> list[TaggedToken]:
        tags = [self._initial(t, i) for i, t in enumerate(tokens)]
        words = [t.surface for t in tokens]
        fixed = [t.kind != "word" for t in tokens]  # MQ/EQ/SYM/punct never rewritten
        for rule in self.rules:
            for i, t in enumerate(tags):
                if t == rule.from_tag and not fixed[i] and rule.applies(tags, words, i):
                    tags[i] = rule.to_tag
        return [TaggedToken(tok, tag) for tok, tag in zip(tokens, tags)]


@lru_cache(maxsize=1)
def default_tagger() -> Tagger:
    data = resources.files("mqmine").joinpath("data")
    lex = parse_lexicon(data.joinpath("lexicon.tsv").read_text("utf-8").splitlines())
    rules = parse_rules(data.joinpath("tagrules.tsv").read_text("utf-8").splitlines())
    return Tagger(lex, rules)


# --- noun-phrase chunking -------------------------------------------------------

_CHUNK_RE = re.compile(r"D?[JCBP]*N+")


def chunk_np(tagged: Sequence[TaggedToken], mqs: Sequence[MeasuredQuantity] = ()) -> list[NPChunk]:
    """Maximal noun phrases: DT? (CD | JJ* | VBN | percent-quantity)* noun+.

    A measured quantity whose unit is '%' may sit in the modifier slot, so
    "30% fuming sulfuric acid" chunks as one phrase.
    """
    chars = []
    for tt in tagged:
        tag = tt.tag
        if tag in _NOUN_TAGS:
            chars.append("N")
        elif tag == "DT":
            chars.append("D")
        elif tag in ("JJ", "JJR", "JJS"):
            chars.append("J")
        elif tag == "CD":
            chars.append("C")
        elif tag == "VBN":
            chars.append("B")
        elif tag == "MQ":
            idx = tt.token.mq_index
            is_pct = idx is not None and idx < len(mqs) and getattr(mqs[idx], "unit_key", "") == "%"
            chars.append("P" if is_pct else "Q")
        else:
            chars.append("O")
    seq = "".join(chars)
    chunks: list[NPChunk] = []
    for m in _CHUNK_RE.finditer(seq):
        a, b = m.span()
        text_from = a + 1 if tagged[a].tag == "DT" and b - a > 1 else a
        prop = " ".join(tt.token.surface for tt in tagged[text_from:b])
        chunks.append(NPChunk(start=a, end=b, head=b - 1, property_text=prop))
    return chunks
