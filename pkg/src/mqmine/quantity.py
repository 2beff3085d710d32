"""Numeric literal parsing and exact standardization.

Numbers may be comma- or space-grouped ("1,000", "12 500"), may start with a
bare decimal point ("-.98"), may carry an uncertainty ("± 0.003"), and may be
followed by scientific notation in either the "e-5" or the "× 10^-5" family,
including the caret-lost corruption "×105".  Standardization collapses the
pieces into one exact decimal by shifting the decimal point; binary floating
point is only used downstream for range comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal

__all__ = [
    "ExponentRangeError",
    "MAX_EXPONENT",
    "QuantityLiteral",
    "StandardizedValue",
    "parse_error",
    "parse_number",
    "parse_sci",
    "standardize",
]

MAX_EXPONENT = 308  # values must stay representable as index-side doubles


class ExponentRangeError(ValueError):
    pass


@dataclass(frozen=True)
class QuantityLiteral:
    sign: str | None  # '+', '-', or None when unwritten
    mantissa: Decimal  # non-negative as parsed, no rounding
    error: Decimal | None = None  # magnitude after '±'
    exponent: int | None = None

    def __post_init__(self):
        if self.mantissa < 0:
            raise ValueError("mantissa carries no sign; use the sign field")
        if self.error is not None and self.error < 0:
            raise ValueError("error must be non-negative")


@dataclass(frozen=True)
class StandardizedValue:
    value: Decimal
    error_abs: Decimal | None = None

    @property
    def plain(self) -> str:
        """Fixed-point rendering, never scientific notation."""
        return format(self.value, "f")

    @property
    def error_plain(self) -> str | None:
        return format(self.error_abs, "f") if self.error_abs is not None else None


# Grouped integers: lead group of 1-3 digits, then comma groups of 2-3 digits
# or space groups of exactly 3 (a looser space rule would merge adjacent
# independent numbers).  Fractions may contain interior spaces, a common
# artifact of extracted superscript runs.
_NUMBER_RE = re.compile(
    r"""[+-]?
        (?: \d{1,3} (?: ,\d{2,3}(?!\d) | [ ]\d{3}(?!\d) )+
          | \d+
        )
        (?: \. (?: \d[\d ]*\d | \d ) )?
    """,
    re.VERBOSE,
)

# Leading-point numbers: ".04", "-.98", ".123 456 78" (space-grouped fraction).
_POINT_RE = re.compile(
    r"""[+-]? \. \d
        (?: \d{2} (?:[ ]\d{3})+ (?:[ ]\d{1,3}(?!\d))?
          | \d*
        )
    """,
    re.VERBOSE,
)

_ERROR_RE = re.compile(r"[ ]{0,2}±[ ]{0,2}(\d+\.\d+|\.\d+|\d+)")

# "e-5" family: no space between the marker and its digits.
_SCI_E_RE = re.compile(r"[ ]{0,2}[eE]([+-]?\d+)")
# "× 10^-5" family; the multiplication sign itself may have decayed to a
# space, and the caret may be lost entirely ("×105").
_SCI_X_RE = re.compile(r"(?:[ ]{0,2}[xX×][ ]{0,2}|[ ]{1,2})10[ ]{0,2}\^?[ ]{0,2}([+-]?\d+)")


def parse_number(text: str, pos: int) -> tuple[Decimal, tuple[int, int]] | None:
    """Longest Rule-style number starting exactly at ``pos``; separators stripped."""
    best = None
    for pattern in (_NUMBER_RE, _POINT_RE):
        m = pattern.match(text, pos)
        if m and (best is None or m.end() > best.end()):
            best = m
    if best is None:
        return None
    cleaned = best.group(0).replace(",", "").replace(" ", "")
    return Decimal(cleaned), best.span()


def parse_error(text: str, pos: int) -> tuple[Decimal, tuple[int, int]] | None:
    """Magnitude of a '± x' uncertainty at ``pos``, if present."""
    m = _ERROR_RE.match(text, pos)
    if m is None:
        return None
    return Decimal(m.group(1)), m.span()


def parse_sci(text: str, pos: int) -> tuple[int, tuple[int, int]] | None:
    """Signed power of ten at ``pos``, if scientific notation is present.

    When the caret is lost ("×105") the digits after "10" are the exponent,
    positive unless an explicit sign survived.
    """
    m = _SCI_E_RE.match(text, pos) or _SCI_X_RE.match(text, pos)
    if m is None:
        return None
    return int(m.group(1)), m.span()


def standardize(q: QuantityLiteral) -> StandardizedValue:
    """Exact base-10 shift of mantissa (and error) by the exponent."""
    exp = q.exponent or 0
    if abs(exp) > MAX_EXPONENT:
        raise ExponentRangeError(f"exponent {exp} exceeds ±{MAX_EXPONENT}")
    value = _shift(q.mantissa, exp, negative=q.sign == "-")
    error_abs = _shift(q.error, exp, negative=False) if q.error is not None else None
    return StandardizedValue(value=value, error_abs=error_abs)


def _shift(d: Decimal, exp: int, negative: bool) -> Decimal:
    sign, digits, d_exp = d.as_tuple()
    if negative:
        sign = 1 - sign
    return Decimal((sign, digits, int(d_exp) + exp))
