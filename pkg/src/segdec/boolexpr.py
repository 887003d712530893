"""Two-level sum-of-products expressions over the BCD inputs w, x, y, z."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, ParseError
from .glyphs import SEGMENTS, Input4, TruthTable, segment_index

VARIABLES = "wxyz"


@dataclass(frozen=True)
class Cube:
    """A product term. Each entry of ``literals`` is 1 (positive), 0
    (complemented) or ``None`` (variable absent), in w, x, y, z order."""

    literals: tuple[int | None, int | None, int | None, int | None] = (None,) * 4

    def __post_init__(self):
        if len(self.literals) != 4 or any(v not in (0, 1, None) for v in self.literals):
            raise DomainError(f"bad cube literals {self.literals!r}")

    @classmethod
    def from_minterm(cls, value: int) -> Cube:
        return cls(tuple(Input4.from_value(value)))

    @property
    def is_tautology(self) -> bool:
        return all(v is None for v in self.literals)

    @property
    def literal_count(self) -> int:
        return sum(v is not None for v in self.literals)

    def evaluate(self, value: int) -> int:
        bits = Input4.from_value(value)
        return int(all(v is None or v == b for v, b in zip(self.literals, bits)))

    def minterms(self) -> frozenset[int]:
        return frozenset(v for v in range(16) if self.evaluate(v))

    def contains(self, other: Cube) -> bool:
        """True when every input covered by ``other`` is covered by this cube."""
        return all(a is None or a == b for a, b in zip(self.literals, other.literals))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(2 if v is None else 1 - v for v in self.literals)

    def __str__(self) -> str:
        if self.is_tautology:
            return "1"
        return "".join(
            var + ("" if v else "'")
            for var, v in zip(VARIABLES, self.literals)
            if v is not None
        )


@dataclass(frozen=True)
class SopExpr:
    """OR of cubes. No cubes means constant 0. Term order is kept as written;
    use :meth:`normalize` for a canonical form."""

    cubes: tuple[Cube, ...] = ()
    label: str | None = field(default=None, compare=False)

    def normalize(self) -> SopExpr:
        unique = set(self.cubes)
        if any(c.is_tautology for c in unique):
            unique = {Cube()}
        return SopExpr(tuple(sorted(unique, key=Cube.sort_key)), self.label)

    @property
    def literal_count(self) -> int:
        return sum(c.literal_count for c in self.cubes)

    def __str__(self) -> str:
        return print_sop(self)


def parse_sop(text: str, label: str | None = None) -> SopExpr:
    """Parse notation such as ``"w'y' + wz + xyz + x'yz'"``.

    ``"0"`` alone is constant 0; a term ``"1"`` is the tautology cube.
    """
    stripped = text.strip()
    if stripped == "0":
        return SopExpr((), label)

    cubes: list[Cube] = []
    literals: list[int | None] = [None] * 4
    term_empty = True
    constant_term = False
    pos = 0
    while pos <= len(text):
        ch = text[pos] if pos < len(text) else "+"
        if ch == "+":
            if term_empty:
                raise ParseError("empty term", pos)
            cubes.append(Cube(tuple(literals)))
            literals = [None] * 4
            term_empty = True
            constant_term = False
        elif ch.isspace():
            pass
        elif constant_term:
            raise ParseError("'1' must stand alone as a term", pos)
        elif ch == "1":
            if not term_empty:
                raise ParseError("'1' must stand alone as a term", pos)
            term_empty = False
            constant_term = True
        elif ch == "'":
            raise ParseError("dangling apostrophe", pos)
        elif ch in VARIABLES:
            idx = VARIABLES.index(ch)
            polarity = 1
            if text[pos + 1 : pos + 2] == "'":
                polarity = 0
                pos += 1
            if literals[idx] is not None and literals[idx] != polarity:
                raise ParseError(f"conflicting literals for {ch!r}", pos)
            literals[idx] = polarity
            term_empty = False
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos += 1
    return SopExpr(tuple(cubes), label)


def print_sop(expr: SopExpr) -> str:
    if not expr.cubes:
        return "0"
    return " + ".join(str(c) for c in expr.cubes)


def eval_sop(expr: SopExpr, value: int | Input4) -> int:
    if isinstance(value, Input4):
        value = value.value
    return int(any(c.evaluate(value) for c in expr.cubes))


def truth_vector(expr: SopExpr) -> tuple[int, ...]:
    """Outputs on all 16 inputs."""
    return tuple(eval_sop(expr, v) for v in range(16))


# Minimized expressions as printed; the c and g entries do not match the
# truth table (c is wrongly 1 at input 5, g wrongly 0 at input 7).
PRINTED_EXPRESSIONS: dict[str, str] = {
    "a": "w'y' + wz + xyz + x'yz'",
    "b": "x + yz + w'y'z'",
    "c": "w + y' + xyz",
    "d": "w'x' + z' + xy'",
    "e": "z' + x' + y'",
    "f": "x + y'z' + yz",
    "g": "w + xy'z' + x'y'z + x'yz'",
    "h": "x'y + x'z",
    "i": "yz' + xy'z + wy'z'",
    "j": "x'z + y'z + xyz'",
}


def paper_expressions() -> dict[str, SopExpr]:
    return {s: parse_sop(PRINTED_EXPRESSIONS[s], label=s) for s in SEGMENTS}


class Status(enum.Enum):
    EQUIVALENT = "equivalent"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class Mismatch:
    input: int
    expr_value: int
    table_value: int


@dataclass(frozen=True)
class EquivalenceReport:
    status: Status
    mismatches: tuple[Mismatch, ...] = ()

    @property
    def equivalent(self) -> bool:
        return self.status is Status.EQUIVALENT


def check_equivalence(expr: SopExpr, segment: str, table: TruthTable) -> EquivalenceReport:
    """Compare ``expr`` with one segment column on every input the table defines."""
    segment_index(segment)
    mismatches = []
    for value in sorted(table.rows):
        expected = table.bit(value, segment)
        got = eval_sop(expr, value)
        if got != expected:
            mismatches.append(Mismatch(value, got, expected))
    status = Status.MISMATCH if mismatches else Status.EQUIVALENT
    return EquivalenceReport(status, tuple(mismatches))


def cubes_from(items: Iterable[str]) -> tuple[Cube, ...]:
    """Convenience: build cubes from single-term strings like ``"x'y"``."""
    return tuple(c for item in items for c in parse_sop(item).cubes)
