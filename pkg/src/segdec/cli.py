"""``segdec`` command-line interface.

Exit codes: 0 success, 1 domain error, 2 verification found discrepancies,
64 usage error. ``--format machine`` prints one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import boolexpr, electrical, glyphs, minimizer, netlist, render
from .errors import SegdecError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


class _Output:
    def __init__(self, machine: bool, stream):
        self.machine = machine
        self.stream = stream

    def record(self, plain: str, **fields):
        if self.machine:
            print(json.dumps(fields, ensure_ascii=False), file=self.stream)
        else:
            print(plain, file=self.stream)


def _mode(text: str) -> glyphs.DisplayMode:
    try:
        return glyphs.DisplayMode(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError("mode must be bengali or english") from None


def _segment(text: str) -> str:
    if text not in glyphs.SEGMENTS or len(text) != 1:
        raise argparse.ArgumentTypeError("segment must be one of a..j")
    return text


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="segdec", description="Ten-segment Bengali numeral display toolkit.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "machine"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decode", parents=[common], help="segments lit for a digit")
    p.add_argument("--digit", required=True)
    p.add_argument("--mode", type=_mode, default=glyphs.DisplayMode.BENGALI)

    p = sub.add_parser("render", parents=[common], help="draw digits as text or SVG")
    p.add_argument("--digit", required=True, help="one or more digits, e.g. 2024 or ২০২৪")
    p.add_argument("--mode", type=_mode, default=glyphs.DisplayMode.BENGALI)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--svg", action="store_true")
    kind.add_argument("--text", action="store_true")
    p.add_argument("--height", type=int, default=12)
    p.add_argument("--ghosts", action="store_true", help="show unlit segments faintly")
    p.add_argument("--out")

    sub.add_parser("verify-tables", parents=[common], help="audit the printed tables")
    sub.add_parser(
        "verify-expressions", parents=[common], help="check printed expressions against the truth table"
    )

    p = sub.add_parser("minimize", parents=[common], help="minimize segment functions")
    p.add_argument("--segment", type=_segment, help="default: all segments")
    p.add_argument("--on", type=_int_list, help="explicit on-set, e.g. 1,2,3,9")
    p.add_argument("--dc", type=_int_list, help="explicit don't-care set")
    p.add_argument("--no-dontcare", action="store_true", help="treat inputs 10..15 as 0")

    p = sub.add_parser("netlist", parents=[common], help="compile segment logic to gates")
    p.add_argument("--segment", type=_segment, help="default: full decoder")
    p.add_argument("--minimized", action="store_true", help="use minimizer output instead of printed expressions")
    p.add_argument("--stats", action="store_true", help="print gate counts instead of the netlist")
    p.add_argument("--out")

    p = sub.add_parser("simulate", parents=[common], help="evaluate a netlist file")
    p.add_argument("netlist", help="netlist file, or - for stdin")
    p.add_argument("--input", type=int, help="single input 0..15 (default: all)")

    p = sub.add_parser("power", parents=[common], help="per-digit LED current")
    p.add_argument("--mode", type=_mode, default=glyphs.DisplayMode.BENGALI)
    p.add_argument("--digit")
    p.add_argument("--supply", type=float, default=5.0)
    p.add_argument("--vf", type=float, default=2.0)
    p.add_argument("--if", dest="if_", type=float, default=0.020)

    p = sub.add_parser("resistor", parents=[common], help="series resistor for one LED")
    p.add_argument("--supply", type=float, required=True)
    p.add_argument("--vf", type=float, default=2.0)
    p.add_argument("--if", dest="if_", type=float, default=0.020)
    p.add_argument("--e12", action="store_true", help="round up to an E12 value")
    return parser


def _write(path: str | None, text: str, out: _Output):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.stream.write(text)


def _cmd_decode(args, out):
    digit = glyphs.parse_digit(args.digit)
    seg = glyphs.decode(digit, args.mode)
    out.record(
        f"{seg.to_notation()} {seg.to_bits()}",
        digit=digit,
        mode=args.mode.value,
        segments=seg.labels,
        pattern=seg.to_bits(),
    )
    return EXIT_OK


def _cmd_render(args, out):
    digits = [glyphs.parse_digit(ch) for ch in args.digit.strip()]
    patterns = [glyphs.decode(d, args.mode) for d in digits]
    opts = render.RenderOptions(height=args.height, ghosts=args.ghosts)
    if args.svg:
        text = render.render_svg(patterns, opts)
    else:
        text = render.render_text_row(patterns, opts) + "\n"
    if out.machine and not args.out:
        out.record("", digits=digits, kind="svg" if args.svg else "text", document=text)
    else:
        _write(args.out, text, out)
    return EXIT_OK


def _cmd_verify_tables(args, out):
    found = glyphs.cross_check_tables()
    for d in found:
        out.record(
            f"{d.table}: {d.location}: expected {d.expected}, found {d.found}",
            table=d.table,
            location=d.location,
            expected=d.expected,
            found=d.found,
        )
    if not out.machine:
        print(f"{len(found)} discrepancies", file=out.stream)
    return EXIT_VERIFY if found else EXIT_OK


def _cmd_verify_expressions(args, out):
    table = glyphs.bengali_table()
    failing = 0
    fixes = minimizer.minimize_segments({s: glyphs.minterm_list(s) for s in glyphs.SEGMENTS})
    for s, expr in boolexpr.paper_expressions().items():
        report = boolexpr.check_equivalence(expr, s, table)
        mismatches = [
            {"input": m.input, "expr": m.expr_value, "table": m.table_value}
            for m in report.mismatches
        ]
        if report.equivalent:
            plain = f"{s}: {expr} ok"
        else:
            failing += 1
            where = ", ".join(
                f"input {m['input']} (expr {m['expr']}, table {m['table']})" for m in mismatches
            )
            plain = f"{s}: {expr} MISMATCH at {where}; minimized: {fixes[s]}"
        out.record(
            plain,
            segment=s,
            expression=str(expr),
            status=report.status.value,
            mismatches=mismatches,
            minimized=str(fixes[s]),
        )
    return EXIT_VERIFY if failing else EXIT_OK


def _cmd_minimize(args, out):
    if args.on is not None:
        dc = set(args.dc or ())
        specs = {"out": minimizer.MinimizeSpec(frozenset(args.on), frozenset(dc))}
    else:
        names = [args.segment] if args.segment else list(glyphs.SEGMENTS)
        dc = frozenset() if args.no_dontcare else glyphs.DEFAULT_DONT_CARES
        if args.dc is not None:
            dc = frozenset(args.dc)
        specs = {
            s: minimizer.MinimizeSpec(frozenset(glyphs.minterm_list(s)), dc) for s in names
        }
    for name, spec in specs.items():
        expr = minimizer.minimize(spec)
        out.record(
            f"{name} = {expr}",
            name=name,
            expression=str(expr),
            cubes=len(expr.cubes),
            literals=expr.literal_count,
        )
    return EXIT_OK


def _cmd_netlist(args, out):
    if args.minimized:
        exprs = minimizer.minimize_segments({s: glyphs.minterm_list(s) for s in glyphs.SEGMENTS})
    else:
        exprs = boolexpr.paper_expressions()
    if args.segment:
        exprs = {args.segment: exprs[args.segment]}
    net = netlist.compile_decoder(exprs)
    if args.stats:
        counts = netlist.stats(net)
        out.record(" ".join(f"{k}={v}" for k, v in counts.items()), **counts)
    elif out.machine and not args.out:
        out.record("", netlist=netlist.emit(net))
    else:
        _write(args.out, netlist.emit(net), out)
    return EXIT_OK


def _cmd_simulate(args, out):
    if args.netlist == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.netlist).read_text(encoding="utf-8")
        except OSError as exc:
            raise _UsageError(str(exc)) from None
    net = netlist.parse_netlist(text)
    inputs = range(16) if args.input is None else [glyphs.Input4.from_value(args.input).value]
    names = [name for name, _ in net.outputs]
    if not out.machine:
        print("in   wxyz  " + " ".join(names), file=out.stream)
    for v in inputs:
        bits = netlist.simulate(net, v)
        wxyz = "".join(str(b) for b in glyphs.Input4.from_value(v))
        out.record(
            f"{v:<4} {wxyz}  " + " ".join(str(bits[n]) for n in names),
            input=v,
            outputs=bits,
        )
    return EXIT_OK


def _led(args) -> electrical.LedSpec:
    return electrical.LedSpec(args.supply, args.vf, args.if_)


def _cmd_power(args, out):
    spec = _led(args)
    if args.digit is not None:
        reports = [electrical.digit_current(glyphs.parse_digit(args.digit), args.mode, spec)]
    else:
        reports = list(electrical.power_table(args.mode, spec).reports)
    for r in reports:
        out.record(
            f"{r.digit}: {r.lit_count} segments, {r.total_current * 1000:g} mA, "
            f"{r.total_led_power * 1000:g} mW",
            digit=r.digit,
            lit_count=r.lit_count,
            current_a=r.total_current,
            led_power_w=r.total_led_power,
        )
    if len(reports) > 1:
        table = electrical.PowerTable(tuple(reports))
        out.record(
            f"max/min current ratio: {table.current_ratio:.4g}",
            max_current_a=table.max_current,
            min_current_a=table.min_current,
            ratio=table.current_ratio,
        )
    return EXIT_OK


def _cmd_resistor(args, out):
    ohms = electrical.resistor_value(_led(args), e12=args.e12)
    out.record(f"{ohms:g} ohm", ohms=ohms)
    return EXIT_OK


_COMMANDS = {
    "decode": _cmd_decode,
    "render": _cmd_render,
    "verify-tables": _cmd_verify_tables,
    "verify-expressions": _cmd_verify_expressions,
    "minimize": _cmd_minimize,
    "netlist": _cmd_netlist,
    "simulate": _cmd_simulate,
    "power": _cmd_power,
    "resistor": _cmd_resistor,
}


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or 0
    out = _Output(args.format == "machine", stdout)
    try:
        return _COMMANDS[args.command](args, out)
    except SegdecError as exc:
        out_err = f"segdec: error: {exc}"
        print(out_err, file=sys.stderr)
        return EXIT_DOMAIN
    except _UsageError as exc:
        print(f"segdec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
