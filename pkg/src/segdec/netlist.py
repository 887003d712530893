"""Gate-level netlists built from INV, AND2, AND3, OR2 and OR3 gates.

Text format::

    segdec-netlist v1
    input w
    ...
    gate <net> <kind> <in1> [<in2> [<in3>]]
    output <name> <net>
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .boolexpr import VARIABLES, SopExpr
from .errors import CompileError, FormatError
from .glyphs import Input4

HEADER = "segdec-netlist v1"
INPUTS = tuple(VARIABLES)
ARITY = {"INV": 1, "AND2": 2, "AND3": 3, "OR2": 2, "OR3": 3}
KINDS = tuple(ARITY)


@dataclass(frozen=True)
class Gate:
    net: str
    kind: str
    inputs: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.inputs) != ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} takes {ARITY[self.kind]} inputs, got {len(self.inputs)}"
            )


@dataclass(frozen=True)
class Netlist:
    gates: tuple[Gate, ...] = ()
    outputs: tuple[tuple[str, str], ...] = ()
    inputs: tuple[str, ...] = INPUTS

    def __post_init__(self):
        defined = set(self.inputs)
        for g in self.gates:
            undefined = [n for n in g.inputs if n not in defined]
            if undefined:
                raise ValueError(f"gate {g.net} reads undefined net {undefined[0]!r}")
            if g.net in defined:
                raise ValueError(f"net {g.net!r} defined twice")
            defined.add(g.net)
        names = [name for name, _ in self.outputs]
        if len(set(names)) != len(names):
            raise ValueError("duplicate output name")
        for name, net in self.outputs:
            if net not in defined:
                raise ValueError(f"output {name!r} drives undefined net {net!r}")

    @property
    def output_map(self) -> dict[str, str]:
        return dict(self.outputs)


class _Builder:
    def __init__(self):
        self.gates: list[Gate] = []
        self.counter = 0

    def add(self, kind: str, inputs: list[str], net: str | None = None) -> str:
        if net is None:
            self.counter += 1
            net = f"t{self.counter}"
        self.gates.append(Gate(net, kind, tuple(inputs)))
        return net

    def tree(self, family: str, nets: list[str]) -> str:
        """Left-associated reduction using 3-input gates first, then 2-input."""
        acc, rest = nets[0], nets[1:]
        while rest:
            take = min(len(rest), 2)
            acc = self.add(f"{family}{take + 1}", [acc, *rest[:take]])
            rest = rest[take:]
        return acc


def _needed_inverters(exprs) -> list[str]:
    used = set()
    for expr in exprs:
        for cube in expr.cubes:
            for var, v in zip(VARIABLES, cube.literals):
                if v == 0:
                    used.add(var)
    return [v for v in VARIABLES if v in used]


def _check_compilable(name: str, expr: SopExpr) -> SopExpr:
    norm = expr.normalize()
    if not norm.cubes or norm.cubes[0].is_tautology:
        value = "1" if norm.cubes else "0"
        raise CompileError(f"output {name!r} is constant {value}; no gate realizes it")
    return norm


def compile_decoder(
    exprs: Mapping[str, SopExpr] | Iterable[tuple[str, SopExpr]],
) -> Netlist:
    """Compile several expressions into one netlist sharing its inverters.

    Outputs are processed in name order; product terms are not shared.
    """
    pairs = list(exprs.items()) if isinstance(exprs, Mapping) else list(exprs)
    by_name: dict[str, SopExpr] = {}
    for name, expr in pairs:
        if name in by_name:
            raise CompileError(f"duplicate output name {name!r}")
        by_name[name] = expr
    names = sorted(by_name)
    normalized = {name: _check_compilable(name, by_name[name]) for name in names}
    b = _Builder()
    for var in _needed_inverters(normalized.values()):
        b.add("INV", [var], net=f"n{var}")

    outputs = []
    for name in names:
        terms = []
        for cube in normalized[name].cubes:
            lits = [
                var if v else f"n{var}"
                for var, v in zip(VARIABLES, cube.literals)
                if v is not None
            ]
            terms.append(b.tree("AND", lits))
        outputs.append((name, b.tree("OR", terms)))
    return Netlist(tuple(b.gates), tuple(outputs))


def compile_sop(expr: SopExpr, output_name: str = "out") -> Netlist:
    return compile_decoder({output_name: expr})


def simulate(netlist: Netlist, value: int | Input4) -> dict[str, int]:
    bits = value if isinstance(value, Input4) else Input4.from_value(value)
    nets = dict(zip(netlist.inputs, bits))
    for g in netlist.gates:
        ins = [nets[n] for n in g.inputs]
        if g.kind == "INV":
            nets[g.net] = 1 - ins[0]
        elif g.kind.startswith("AND"):
            nets[g.net] = int(all(ins))
        else:
            nets[g.net] = int(any(ins))
    return {name: nets[net] for name, net in netlist.outputs}


def emit(netlist: Netlist) -> str:
    lines = [HEADER]
    lines += [f"input {n}" for n in netlist.inputs]
    lines += [" ".join(["gate", g.net, g.kind, *g.inputs]) for g in netlist.gates]
    lines += [f"output {name} {net}" for name, net in sorted(netlist.outputs)]
    return "\n".join(lines) + "\n"


def parse_netlist(text: str) -> Netlist:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise FormatError(f"expected header {HEADER!r}", 1)

    inputs: list[str] = []
    gates: list[Gate] = []
    outputs: list[tuple[str, str]] = []
    defined: set[str] = set()
    section = 0  # 0 inputs, 1 gates, 2 outputs
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(" ")
        if not line or "" in fields:
            raise FormatError("empty field or stray whitespace", lineno)
        tag = fields[0]
        if tag == "input":
            if section > 0 or len(fields) != 2:
                raise FormatError("misplaced or malformed input line", lineno)
            if fields[1] in defined:
                raise FormatError(f"net {fields[1]!r} defined twice", lineno)
            inputs.append(fields[1])
            defined.add(fields[1])
        elif tag == "gate":
            if section > 1 or len(fields) < 4:
                raise FormatError("misplaced or malformed gate line", lineno)
            section = 1
            net, kind, ins = fields[1], fields[2], fields[3:]
            if kind not in ARITY:
                raise FormatError(f"unknown gate kind {kind!r}", lineno)
            if len(ins) != ARITY[kind]:
                raise FormatError(
                    f"{kind} takes {ARITY[kind]} inputs, got {len(ins)}", lineno
                )
            for n in ins:
                if n not in defined:
                    raise FormatError(f"undefined net {n!r}", lineno)
            if net in defined:
                raise FormatError(f"net {net!r} defined twice", lineno)
            defined.add(net)
            gates.append(Gate(net, kind, tuple(ins)))
        elif tag == "output":
            section = 2
            if len(fields) != 3:
                raise FormatError("malformed output line", lineno)
            name, net = fields[1], fields[2]
            if net not in defined:
                raise FormatError(f"undefined net {net!r}", lineno)
            if any(name == o for o, _ in outputs):
                raise FormatError(f"duplicate output {name!r}", lineno)
            outputs.append((name, net))
        else:
            raise FormatError(f"unknown line type {tag!r}", lineno)
    if tuple(inputs) != INPUTS:
        raise FormatError("inputs must be exactly w, x, y, z in order", 2)
    return Netlist(tuple(gates), tuple(sorted(outputs)), tuple(inputs))


def stats(netlist: Netlist) -> dict[str, int]:
    counts = Counter(g.kind for g in netlist.gates)
    out = {kind: counts.get(kind, 0) for kind in KINDS}
    out["total"] = len(netlist.gates)
    return out
