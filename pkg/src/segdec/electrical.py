"""LED drive arithmetic: series resistor sizing and per-digit current draw.

Every segment is one LED with its own resistor, driven at the same forward
current, so a digit's current is proportional to how many segments it lights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .glyphs import DIGITS, DisplayMode, decode

E12 = (1.0, 1.2, 1.5, 1.8, 2.2, 2.7, 3.3, 3.9, 4.7, 5.6, 6.8, 8.2)


@dataclass(frozen=True)
class LedSpec:
    supply_voltage: float
    forward_voltage: float = 2.0
    forward_current: float = 0.020

    def __post_init__(self):
        if not self.forward_voltage > 0:
            raise DomainError("forward voltage must be positive")
        if not self.forward_current > 0:
            raise DomainError("forward current must be positive")
        if self.supply_voltage < self.forward_voltage:
            raise DomainError(
                f"supply {self.supply_voltage} V cannot forward-bias an LED "
                f"needing {self.forward_voltage} V"
            )


def resistor_value(spec: LedSpec, e12: bool = False) -> float:
    """Series resistance in ohms: (Vs - Vf) / If.

    With ``e12=True`` the result is rounded up to the next E12 preferred value,
    which keeps the LED current at or below ``forward_current``.
    """
    ohms = (spec.supply_voltage - spec.forward_voltage) / spec.forward_current
    return round_e12(ohms) if e12 else ohms


def round_e12(ohms: float) -> float:
    if ohms <= 0:
        return 0.0
    decade = 10.0 ** math.floor(math.log10(ohms))
    for step in (*E12, 10.0):
        candidate = step * decade
        # tolerate float noise such as 149.99999999999997
        if candidate >= ohms * (1 - 1e-12):
            return round(candidate, 10)
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class PowerReport:
    digit: int
    lit_count: int
    total_current: float
    total_led_power: float


def digit_current(
    digit: int, mode: DisplayMode = DisplayMode.BENGALI, spec: LedSpec | None = None
) -> PowerReport:
    spec = spec or LedSpec(supply_voltage=5.0)
    lit = len(decode(digit, mode))
    current = lit * spec.forward_current
    return PowerReport(digit, lit, current, current * spec.forward_voltage)


@dataclass(frozen=True)
class PowerTable:
    reports: tuple[PowerReport, ...]

    @property
    def max_current(self) -> float:
        return max(r.total_current for r in self.reports)

    @property
    def min_current(self) -> float:
        return min(r.total_current for r in self.reports)

    @property
    def current_ratio(self) -> float:
        """Largest over smallest per-digit current; ``inf`` if a digit is dark."""
        lo = self.min_current
        return math.inf if lo == 0 else self.max_current / lo

    def digits_at(self, current: float) -> list[int]:
        return [r.digit for r in self.reports if math.isclose(r.total_current, current)]


def power_table(
    mode: DisplayMode = DisplayMode.BENGALI, spec: LedSpec | None = None
) -> PowerTable:
    return PowerTable(tuple(digit_current(d, mode, spec) for d in DIGITS))
