"""Quine-McCluskey prime implicants with exact cover by Petrick's method.

Four variables only. The cover objective is, in order: fewest cubes, fewest
literals, then the canonical cube order (so results are deterministic).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from .boolexpr import Cube, SopExpr, eval_sop
from .errors import DomainError

ALL_INPUTS = frozenset(range(16))


@dataclass(frozen=True)
class MinimizeSpec:
    on_set: frozenset[int]
    dc_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "on_set", frozenset(self.on_set))
        object.__setattr__(self, "dc_set", frozenset(self.dc_set))
        if self.on_set & self.dc_set:
            raise DomainError("on-set and don't-care set overlap")
        if not (self.on_set | self.dc_set) <= ALL_INPUTS:
            raise DomainError("inputs must lie in 0..15")

    @property
    def off_set(self) -> frozenset[int]:
        return ALL_INPUTS - self.on_set - self.dc_set


@dataclass(frozen=True)
class Implicant:
    cube: Cube
    covered: frozenset[int]

    @classmethod
    def of(cls, cube: Cube) -> Implicant:
        return cls(cube, cube.minterms())


def _merge(a: Cube, b: Cube) -> Cube | None:
    diff = None
    for i, (p, q) in enumerate(zip(a.literals, b.literals)):
        if p == q:
            continue
        if p is None or q is None or diff is not None:
            return None
        diff = i
    if diff is None:
        return None
    lits = list(a.literals)
    lits[diff] = None
    return Cube(tuple(lits))


def prime_implicants(spec: MinimizeSpec) -> set[Implicant]:
    """All prime implicants of on-set plus don't-cares that cover at least one
    on-set input."""
    level = {Cube.from_minterm(m) for m in spec.on_set | spec.dc_set}
    primes: set[Cube] = set()
    while level:
        merged: set[Cube] = set()
        used: set[Cube] = set()
        # Only cubes whose positive-literal counts differ by one can merge.
        by_ones: dict[int, list[Cube]] = {}
        for c in level:
            by_ones.setdefault(sum(v == 1 for v in c.literals), []).append(c)
        for ones, group in by_ones.items():
            for a in group:
                for b in by_ones.get(ones + 1, ()):
                    m = _merge(a, b)
                    if m is not None:
                        merged.add(m)
                        used.update((a, b))
        primes |= level - used
        level = merged
    return {
        Implicant.of(c) for c in primes if c.minterms() & spec.on_set
    }


def _cost(cover: frozenset[Cube]) -> tuple:
    cubes = sorted(cover, key=Cube.sort_key)
    return (len(cubes), sum(c.literal_count for c in cubes), [c.sort_key() for c in cubes])


def _petrick(primes: list[Implicant], on_set: frozenset[int]) -> frozenset[Cube]:
    clauses = sorted(
        (frozenset(p.cube for p in primes if m in p.covered) for m in on_set),
        key=len,
    )
    products: set[frozenset[Cube]] = {frozenset()}
    for clause in clauses:
        expanded = set()
        for prod in products:
            if prod & clause:
                expanded.add(prod)
            else:
                expanded.update(prod | {c} for c in clause)
        # Absorption: X + XY = X.
        products = {
            p for p in expanded if not any(q < p for q in expanded)
        }
    return min(products, key=_cost)


def minimize(spec: MinimizeSpec) -> SopExpr:
    """Minimum-cost sum of prime implicants realizing ``spec``."""
    if not spec.on_set:
        return SopExpr(())
    primes = sorted(prime_implicants(spec), key=lambda p: p.cube.sort_key())
    cover = _petrick(primes, spec.on_set)
    return SopExpr(tuple(sorted(cover, key=Cube.sort_key)))


def verify_cover(expr: SopExpr, spec: MinimizeSpec) -> int:
    """1 iff ``expr`` is 1 on the whole on-set and 0 on the whole off-set."""
    ok = all(eval_sop(expr, v) for v in spec.on_set) and not any(
        eval_sop(expr, v) for v in spec.off_set
    )
    return int(ok)


def minimize_segments(
    on_sets: dict[str, set[int]], dc_set=frozenset(range(10, 16))
) -> dict[str, SopExpr]:
    """Minimize each named on-set independently against a shared don't-care set."""
    out = {}
    for name, on in on_sets.items():
        expr = minimize(MinimizeSpec(frozenset(on), frozenset(dc_set) - frozenset(on)))
        out[name] = SopExpr(expr.cubes, label=name)
    return out
