"""Measurement-unit catalog and recognition of (compound) units in text.

A unit term is an optional metric prefix, a base unit written either as its
symbol or a spelled-out name, and an optional exponent.  Compound units chain
terms with connectors ('/', "per", '·', '×', '*', '-', whitespace, or nothing
at all, as in ``s-2m-1``).  Symbols match case-sensitively, spelled-out names
case-insensitively.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

__all__ = [
    "CatalogError",
    "CompoundUnit",
    "UnitCatalog",
    "UnitDef",
    "UnitMatch",
    "UnitTerm",
    "canonical_string",
    "default_catalog",
    "display_string",
    "load_catalog",
    "match_unit",
]

PREFIXES = frozenset(["f", "p", "n", "µ", "m", "c", "d", "da", "h", "k", "M", "G", "T"])

_LONG_PREFIXES = {
    "femto": "f", "pico": "p", "nano": "n", "micro": "µ", "milli": "m",
    "centi": "c", "deci": "d", "deca": "da", "deka": "da", "hecto": "h",
    "kilo": "k", "mega": "M", "giga": "G", "tera": "T",
}


class CatalogError(ValueError):
    """Catalog file rejected; carries the offending line number when known."""

    def __init__(self, message: str, lineno: int | None = None):
        super().__init__(f"line {lineno}: {message}" if lineno else message)
        self.lineno = lineno


@dataclass(frozen=True)
class UnitDef:
    symbol: str
    long_names: tuple[str, ...]
    prefixable: frozenset[str]
    category: str

    @property
    def single_letter(self) -> bool:
        return len(self.symbol) == 1


@dataclass(frozen=True)
class UnitTerm:
    prefix: str  # '' when absent
    symbol: str
    exponent: int

    def __post_init__(self):
        if self.exponent == 0 or not -6 <= self.exponent <= 6:
            raise ValueError(f"exponent {self.exponent} outside [-6, 6] \\ {{0}}")
        if self.prefix and self.prefix not in PREFIXES:
            raise ValueError(f"unknown prefix {self.prefix!r}")


@dataclass(frozen=True)
class CompoundUnit:
    terms: tuple[UnitTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("compound unit needs at least one term")


@dataclass(frozen=True)
class _TermMeta:
    """How a term was written; drives the post-processing rejection rules."""

    connector: str  # connector before this term ('' for the first)
    bare_single: bool  # single-letter symbol, no prefix, no written exponent
    surface: str


@dataclass(frozen=True)
class UnitMatch:
    unit: CompoundUnit
    span: tuple[int, int]
    metas: tuple[_TermMeta, ...]


class UnitCatalog:
    def __init__(self, units: Iterable[UnitDef]):
        self.units: dict[str, UnitDef] = {}
        for u in units:
            if u.symbol in self.units:
                raise CatalogError(f"duplicate unit symbol {u.symbol!r}")
            self.units[u.symbol] = u
        self._build_tables()

    def _build_tables(self) -> None:
        # Symbol surfaces are case-sensitive; name surfaces are lowercased.
        sym: dict[str, list[tuple[str, str, UnitDef]]] = {}
        name: dict[str, list[tuple[str, str, UnitDef]]] = {}
        for u in self.units.values():
            sym.setdefault(u.symbol[0], []).append((u.symbol, "", u))
            for p in u.prefixable:
                surface = p + u.symbol
                sym.setdefault(surface[0], []).append((surface, p, u))
            for n in u.long_names:
                low = n.lower()
                name.setdefault(low[0], []).append((low, "", u))
                for long_p, p in _LONG_PREFIXES.items():
                    if p in u.prefixable:
                        s = long_p + low
                        name.setdefault(s[0], []).append((s, p, u))
        for table in (sym, name):
            for entries in table.values():
                entries.sort(key=lambda e: len(e[0]), reverse=True)
        self._sym = sym
        self._name = name

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.units

    def __len__(self) -> int:
        return len(self.units)

    def candidates_at(self, text: str, pos: int) -> list[tuple[int, str, UnitDef, bool]]:
        """All (surface length, prefix, unit, via_long_name) matches at pos, longest first."""
        out: list[tuple[int, str, UnitDef, bool]] = []
        c = text[pos]
        for surface, prefix, u in self._sym.get(c, ()):
            if text.startswith(surface, pos):
                out.append((len(surface), prefix, u, False))
        for surface, prefix, u in self._name.get(c.lower(), ()):
            end = pos + len(surface)
            if text[pos:end].lower() == surface:
                out.append((len(surface), prefix, u, True))
        out.sort(key=lambda e: (-e[0], e[3]))
        return out


def load_catalog(source: str | Path | Iterable[str]) -> UnitCatalog:
    """Parse ``symbol | name1,name2 | prefixes | category`` records ('∅' = none)."""
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text("utf-8").splitlines()
    else:
        lines = list(source)
    units: list[UnitDef] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise CatalogError("expected 4 '|'-separated fields", lineno)
        symbol, names, prefixes, category = parts
        if not symbol:
            raise CatalogError("empty unit symbol", lineno)
        if symbol in seen:
            raise CatalogError(f"duplicate unit symbol {symbol!r}", lineno)
        seen.add(symbol)
        long_names = tuple(n.strip() for n in names.split(",") if n.strip()) if names and names != "∅" else ()
        if prefixes in ("", "∅"):
            prefix_set: frozenset[str] = frozenset()
        else:
            prefix_set = frozenset(p.strip() for p in prefixes.split(","))
            bad = prefix_set - PREFIXES
            if bad:
                raise CatalogError(f"unknown prefixes {sorted(bad)}", lineno)
        units.append(UnitDef(symbol, long_names, prefix_set, category))
    return UnitCatalog(units)


@lru_cache(maxsize=1)
def default_catalog() -> UnitCatalog:
    text = resources.files("mqmine").joinpath("data/units.catalog").read_text("utf-8")
    return load_catalog(text.splitlines())


# --- matching ---------------------------------------------------------------

# Exponent surface forms, tried in order.  Caret forms tolerate one space on
# either side of the caret; a bare digit tolerates one leading space (lost
# superscript), but the dash form must be flush so it cannot eat " -5".
_EXP_RES = [
    re.compile(r"[ ]?\^[ ]?(-[1-6]|[2-6])(?!\d)"),
    re.compile(r"(-[1-6])(?!\d)"),
    re.compile(r"[ ]?([2-6])(?!\d)"),
]

# Connectors between terms, most specific first; '' = direct adjacency.
# True marks "per"-like connectors that negate the following exponent.
_CONNECTOR_RES: list[tuple[re.Pattern[str], bool]] = [
    (re.compile(r"-[Pp]er-"), True),
    (re.compile(r"[ ][Pp]er[ ]"), True),
    (re.compile(r"[ ]?/[ ]?"), True),
    (re.compile(r"[ ]?[·×*][ ]?"), False),
    (re.compile(r"-"), False),
    (re.compile(r"[ ]"), False),
    (re.compile(r""), False),
]


def _boundary_ok(text: str, pos: int) -> bool:
    return pos >= len(text) or not text[pos].isalnum()


def _match_term(text: str, pos: int, catalog: UnitCatalog):
    """Yield (end, prefix, unit, exponent, wrote_exp, via_name), longest first."""
    for length, prefix, unit, via_name in catalog.candidates_at(text, pos):
        base_end = pos + length
        for exp_re in _EXP_RES:
            m = exp_re.match(text, base_end)
            if m:
                yield m.end(), prefix, unit, int(m.group(1)), True, via_name
        yield base_end, prefix, unit, 1, False, via_name


def _match_compound(text: str, pos: int, catalog: UnitCatalog, depth: int):
    """Longest-first DFS over term and connector alternatives.

    Returns (end, parts) where each part is [prefix, symbol, exponent,
    connector, bare_single, surface], or None.  A compound is only accepted
    when it ends at a non-alphanumeric boundary, so unit symbols never match
    prefixes of ordinary words ("m" never matches inside "mole").
    """
    if depth > 8:
        return None
    for end, prefix, unit, exp, wrote_exp, via_name in _match_term(text, pos, catalog):
        bare = not prefix and not via_name and not wrote_exp and len(unit.symbol) == 1
        head = [prefix, unit.symbol, exp, "", bare, text[pos:end]]
        # Prefer extending with another term; fall back to stopping here.
        for conn_re, negates in _CONNECTOR_RES:
            m = conn_re.match(text, end)
            if m is None or m.end() >= len(text):
                continue
            rest = _match_compound(text, m.end(), catalog, depth + 1)
            if rest is None:
                continue
            rest_end, rest_parts = rest
            rest_parts[0][3] = m.group(0)
            if negates:
                rest_parts[0][2] = -rest_parts[0][2]
            return rest_end, [head] + rest_parts
        if _boundary_ok(text, end):
            return end, [head]
    return None


def match_unit(text: str, pos: int, catalog: UnitCatalog | None = None) -> UnitMatch | None:
    """Longest compound unit starting exactly at ``pos``, or None."""
    if catalog is None:
        catalog = default_catalog()
    if pos >= len(text):
        return None
    got = _match_compound(text, pos, catalog, 0)
    if got is None:
        return None
    end, parts = got
    terms = tuple(UnitTerm(p, s, e) for p, s, e, _, _, _ in parts)
    metas = tuple(_TermMeta(conn, bare, surf) for _, _, _, conn, bare, surf in parts)
    return UnitMatch(CompoundUnit(terms), (pos, end), metas)


def canonical_string(cu: CompoundUnit) -> str:
    """Deterministic index key: caret exponents, '.' joins, 'µ' as 'u'."""
    parts = []
    for t in cu.terms:
        s = f"{t.prefix}{t.symbol}"
        if t.exponent != 1:
            s += f"^{t.exponent}"
        parts.append(s)
    return ".".join(parts).replace("µ", "u")


def display_string(cu: CompoundUnit) -> str:
    """Human-facing form: 'µ' preserved, terms joined with '·'."""
    parts = []
    for t in cu.terms:
        s = f"{t.prefix}{t.symbol}"
        if t.exponent != 1:
            s += f"^{t.exponent}"
        parts.append(s)
    return "·".join(parts)
