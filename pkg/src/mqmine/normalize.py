"""Repair of character-level damage introduced by document-to-text conversion.

Dash variants collapse to ASCII '-', multiplication/degree/micro signs to one
canonical codepoint each, and known mojibake sequences (UTF-8 bytes read back
as cp1252) to the character they were meant to be.  Every position in the
repaired text maps back to a span of the raw input, so extractions can report
offsets into the original document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

__all__ = ["EQ_CHARS", "NormalizedText", "normalize_chars", "original_span"]

# '=' lookalikes keep their surface form; downstream tagging only needs to
# know that a position is equality-like, the original glyph stays visible.
EQ_CHARS = frozenset("=≈≃≅≒")

# C0/C1 controls other than tab and newline never participate in any rule;
# they become a single space so offsets stay simple.
_CONTROL = "[\x00-\x08\x0b\x0c\x0e-\x1f\x7f-\x9f]"


class RewriteTableError(ValueError):
    """A packaged or user-supplied rewrite table failed to parse."""


def parse_rewrites(lines) -> dict[str, str]:
    """Parse rewrite rules: ``<hex utf-8 source bytes> TAB <target codepoint>``."""
    rules: dict[str, str] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise RewriteTableError(f"line {lineno}: expected 2 tab-separated fields")
        try:
            src = bytes.fromhex(parts[0]).decode("utf-8")
            dst = chr(int(parts[1].strip().removeprefix("U+"), 16))
        except ValueError as exc:
            raise RewriteTableError(f"line {lineno}: {exc}") from exc
        rules[src] = dst
    return rules


@lru_cache(maxsize=1)
def _rules() -> dict[str, str]:
    text = resources.files("mqmine").joinpath("data/rewrites.tsv").read_text("utf-8")
    return parse_rewrites(text.splitlines())


@lru_cache(maxsize=1)
def _scan_re() -> re.Pattern[str]:
    # Longest sources first so full mojibake sequences win over their prefixes.
    alts = "|".join(re.escape(s) for s in sorted(_rules(), key=len, reverse=True))
    return re.compile(f"(?:{alts})|{_CONTROL}")


@dataclass(frozen=True)
class NormalizedText:
    """Canonicalized text plus the map back to raw offsets.

    ``starts``/``ends`` give, for each normalized character, the half-open
    span of raw input it replaces.  ``None`` means the text was already
    canonical and the map is the identity.
    """

    text: str
    raw_len: int
    eq_positions: frozenset[int]
    starts: tuple[int, ...] | None = field(default=None, repr=False)
    ends: tuple[int, ...] | None = field(default=None, repr=False)

    def is_eq(self, pos: int) -> bool:
        return pos in self.eq_positions

    def original_span(self, span: tuple[int, int]) -> tuple[int, int]:
        """Smallest raw range covering every raw character the span maps to."""
        a, b = span
        if not (0 <= a <= b <= len(self.text)):
            raise ValueError(f"span {span!r} out of bounds for text of length {len(self.text)}")
        if self.starts is None:
            return (a, b)
        if a == b:
            p = self.starts[a] if a < len(self.text) else self.raw_len
            return (p, p)
        assert self.ends is not None
        return (self.starts[a], self.ends[b - 1])


def _pass(text: str) -> tuple[str, list[int], list[int], bool]:
    """One rewrite sweep; returns new text, per-char source spans, changed flag."""
    rules = _rules()
    out: list[str] = []
    starts: list[int] = []
    ends: list[int] = []
    pos = 0
    changed = False
    for m in _scan_re().finditer(text):
        a, b = m.span()
        if pos < a:
            out.append(text[pos:a])
            starts.extend(range(pos, a))
            ends.extend(range(pos + 1, a + 1))
        src = m.group(0)
        dst = rules.get(src)
        if dst is None:  # control character
            dst = " "
        out.append(dst)
        starts.append(a)
        ends.append(b)
        if dst != src:
            changed = True
        pos = b
    if pos < len(text):
        out.append(text[pos:])
        starts.extend(range(pos, len(text)))
        ends.extend(range(pos + 1, len(text) + 1))
    return "".join(out), starts, ends, changed


_EQ_RE = re.compile("[{}]".format("".join(sorted(EQ_CHARS))))


def _eq_positions(text: str) -> frozenset[int]:
    return frozenset(m.start() for m in _EQ_RE.finditer(text))


def normalize_chars(raw: str) -> NormalizedText:
    """Canonicalize ``raw``; unknown characters pass through unchanged.

    Rewrites can create new adjacencies (a passed-through byte followed by a
    freshly emitted character may itself form a mojibake sequence), so sweeps
    repeat until a fixed point.  Every rule output is at most as long as its
    source, which guarantees termination.
    """
    if not _scan_re().search(raw):
        return NormalizedText(raw, len(raw), _eq_positions(raw))
    text = raw
    starts: list[int] | None = None
    ends: list[int] | None = None
    while True:
        new, s2, e2, changed = _pass(text)
        if not changed:
            break
        if starts is None:
            starts, ends = s2, e2
        else:
            assert ends is not None
            starts = [starts[a] for a in s2]
            ends = [ends[b - 1] for b in e2]
        text = new
    return NormalizedText(
        text=text,
        raw_len=len(raw),
        eq_positions=_eq_positions(text),
        starts=tuple(starts) if starts is not None else None,
        ends=tuple(ends) if ends is not None else None,
    )


def original_span(nt: NormalizedText, span: tuple[int, int]) -> tuple[int, int]:
    return nt.original_span(span)
