"""Segment patterns for the ten-segment display.

The Bengali truth table is the single source of truth for decoding. The
combination-vector and minterm tables are kept exactly as printed so that
:func:`cross_check_tables` can reproduce their disagreement with it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError

SEGMENTS = "abcdefghij"
ENGLISH_SEGMENTS = "abcdefg"
DIGITS = range(10)
DEFAULT_DONT_CARES = frozenset(range(10, 16))

BENGALI_NUMERALS = "০১২৩৪৫৬৭৮৯"


class DisplayMode(enum.Enum):
    BENGALI = "bengali"
    ENGLISH = "english"


@dataclass(frozen=True, order=True)
class SegmentSet:
    """Set of lit segments stored as a 10-bit mask; bit 0 is segment ``a``."""

    mask: int = 0

    def __post_init__(self):
        if not 0 <= self.mask < 1 << len(SEGMENTS):
            raise DomainError(f"mask {self.mask:#x} has bits outside segments a..j")

    @classmethod
    def of(cls, labels: Iterable[str]) -> SegmentSet:
        mask = 0
        for label in labels:
            mask |= 1 << segment_index(label)
        return cls(mask)

    @classmethod
    def from_bits(cls, bits: str) -> SegmentSet:
        """Parse the 10-character a..j bit string, e.g. ``"1111110000"``."""
        if len(bits) != len(SEGMENTS) or set(bits) - {"0", "1"}:
            raise DomainError(f"expected 10 characters of 0/1, got {bits!r}")
        return cls.of(s for s, b in zip(SEGMENTS, bits) if b == "1")

    @classmethod
    def from_notation(cls, text: str) -> SegmentSet:
        """Parse the compact set notation, e.g. ``"{a,b,c}"``."""
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise DomainError(f"expected braces around segment set, got {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls()
        return cls.of(part.strip() for part in body.split(","))

    @property
    def labels(self) -> list[str]:
        return [s for i, s in enumerate(SEGMENTS) if self.mask >> i & 1]

    def to_bits(self) -> str:
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(len(SEGMENTS)))

    def to_notation(self) -> str:
        return "{" + ",".join(self.labels) + "}"

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, label: object) -> bool:
        return isinstance(label, str) and label in SEGMENTS and bool(
            self.mask >> SEGMENTS.index(label) & 1
        )

    def __and__(self, other: SegmentSet) -> SegmentSet:
        return SegmentSet(self.mask & other.mask)

    def __or__(self, other: SegmentSet) -> SegmentSet:
        return SegmentSet(self.mask | other.mask)

    def __str__(self) -> str:
        return self.to_notation()


class Input4(NamedTuple):
    """A 4-bit BCD input; ``w`` is the most significant bit."""

    w: int
    x: int
    y: int
    z: int

    @classmethod
    def from_value(cls, value: int) -> Input4:
        if not 0 <= value <= 15:
            raise DomainError(f"4-bit input out of range: {value}")
        return cls(value >> 3 & 1, value >> 2 & 1, value >> 1 & 1, value & 1)

    @property
    def value(self) -> int:
        return 8 * self.w + 4 * self.x + 2 * self.y + self.z


def segment_index(label: str) -> int:
    if len(label) != 1 or label not in SEGMENTS:
        raise DomainError(f"unknown segment {label!r}; expected one of a..j")
    return SEGMENTS.index(label)


# Truth table for the Bengali numerals, columns a..j.
_BENGALI_ROWS = (
    "1111110000",
    "1011101101",
    "1001101110",
    "0101110101",
    "1111111000",
    "1101110011",
    "0101110011",
    "1110011000",
    "0011111010",
    "1010101101",
)

# Conventional seven-segment digits; h, i, j stay dark.
_ENGLISH_ROWS = (
    "abcdef",
    "bc",
    "abdeg",
    "abcdg",
    "bcfg",
    "acdfg",
    "acdefg",
    "abc",
    "abcdefg",
    "abcdfg",
)

# Combination vectors as printed; the digit 8 entry lacks segment i.
PRINTED_COMBINATION_VECTORS: dict[int, tuple[str, ...]] = {
    0: ("a", "b", "c", "d", "e", "f"),
    1: ("a", "c", "d", "e", "g", "h", "j"),
    2: ("a", "d", "e", "g", "h", "i"),
    3: ("b", "d", "e", "f", "h", "j"),
    4: ("a", "b", "c", "d", "e", "f", "g"),
    5: ("a", "b", "d", "e", "f", "i", "j"),
    6: ("b", "d", "e", "f", "i", "j"),
    7: ("a", "b", "c", "f", "g"),
    8: ("c", "d", "e", "f", "g"),
    9: ("a", "c", "e", "g", "h", "j"),
}

# Per-segment minterm lists as printed.
PRINTED_MINTERMS: dict[str, tuple[int, ...]] = {
    "a": (0, 1, 2, 4, 5, 7, 9),
    "b": (0, 3, 4, 5, 6, 7),
    "c": (0, 1, 4, 7, 8, 9),
    "d": (0, 1, 2, 3, 4, 5, 6, 8),
    "e": (0, 1, 2, 3, 4, 5, 6, 8, 9),
    "f": (0, 3, 4, 5, 6, 7, 8),
    "g": (1, 2, 4, 7, 8, 9),
    "h": (1, 2, 3, 9),
    "i": (2, 5, 6, 8),
    "j": (1, 3, 5, 6, 9),
}

_BENGALI = tuple(SegmentSet.from_bits(row) for row in _BENGALI_ROWS)
_ENGLISH = tuple(SegmentSet.of(row) for row in _ENGLISH_ROWS)


def parse_digit(text: str | int) -> int:
    """Accept a Western (``"0"``..``"9"``) or Bengali (``"০"``..``"৯"``) digit."""
    if isinstance(text, int):
        return _check_digit(text)
    text = text.strip()
    if len(text) == 1 and text in BENGALI_NUMERALS:
        return BENGALI_NUMERALS.index(text)
    try:
        return _check_digit(int(text))
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"not a digit: {text!r}") from None


def _check_digit(digit: int) -> int:
    if isinstance(digit, bool) or not isinstance(digit, int) or not 0 <= digit <= 9:
        raise DomainError(f"invalid BCD code {digit!r}; digits are 0..9")
    return digit


def decode(digit: int, mode: DisplayMode = DisplayMode.BENGALI) -> SegmentSet:
    """Return the lit segments for ``digit`` in the given display mode."""
    _check_digit(digit)
    if DisplayMode(mode) is DisplayMode.ENGLISH:
        return _ENGLISH[digit]
    return _BENGALI[digit]


def combination_vector(digit: int) -> list[str]:
    return decode(digit, DisplayMode.BENGALI).labels


def minterm_list(segment: str) -> set[int]:
    segment_index(segment)
    return {d for d in DIGITS if segment in _BENGALI[d]}


@dataclass(frozen=True)
class TruthTable:
    """Rows for defined inputs plus the inputs whose outputs are unconstrained."""

    rows: dict[int, SegmentSet]
    dont_care: frozenset[int] = DEFAULT_DONT_CARES

    def __post_init__(self):
        overlap = set(self.rows) & set(self.dont_care)
        if overlap:
            raise DomainError(f"inputs both defined and don't-care: {sorted(overlap)}")
        for value in [*self.rows, *self.dont_care]:
            Input4.from_value(value)

    def bit(self, value: int, segment: str) -> int | None:
        """Segment bit at ``value``; ``None`` for don't-care or undefined inputs."""
        row = self.rows.get(value)
        if row is None:
            return None
        return int(segment in row)

    def on_set(self, segment: str) -> set[int]:
        return {v for v, row in self.rows.items() if segment in row}


def bengali_table() -> TruthTable:
    return TruthTable(rows=dict(enumerate(_BENGALI)))


def english_table() -> TruthTable:
    return TruthTable(rows=dict(enumerate(_ENGLISH)))


@dataclass(frozen=True)
class Discrepancy:
    table: str
    location: str
    expected: str
    found: str


def cross_check_tables() -> list[Discrepancy]:
    """Compare the printed combination vectors and minterm lists against the
    truth table and return every cell where they disagree."""
    found: list[Discrepancy] = []
    for d in DIGITS:
        printed = SegmentSet.of(PRINTED_COMBINATION_VECTORS[d])
        truth = _BENGALI[d]
        for s in SEGMENTS:
            if (s in printed) != (s in truth):
                found.append(
                    Discrepancy(
                        table="combination_vectors",
                        location=f"digit {d}, segment {s}",
                        expected="present" if s in truth else "absent",
                        found="present" if s in printed else "absent",
                    )
                )
    for s in SEGMENTS:
        printed_terms = set(PRINTED_MINTERMS[s])
        for d in DIGITS:
            truth_bit = s in _BENGALI[d]
            if (d in printed_terms) != truth_bit:
                found.append(
                    Discrepancy(
                        table="minterms",
                        location=f"segment {s}, minterm {d}",
                        expected="present" if truth_bit else "absent",
                        found="present" if d in printed_terms else "absent",
                    )
                )
    return found
